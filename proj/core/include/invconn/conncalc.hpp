#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace invconn::conncalc {

using CMatrix = Eigen::MatrixXcd;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dense real tensor over a d-dimensional basis, row-major in its indices.
class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, int rank) : d_(dim), r_(rank), v_(static_cast<size_t>(pow_(dim, rank)), 0.0) {}

    int dim() const { return d_; }
    int rank() const { return r_; }
    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    double& operator()(int i, int j, int k) { return v_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
    double operator()(int i, int j, int k) const { return v_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
    double& operator()(int i, int j, int k, int l) { return v_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l]; }
    double operator()(int i, int j, int k, int l) const {
        return v_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
    }
    double& at(const std::vector<int>& idx);
    double at(const std::vector<int>& idx) const;

    double max_abs() const;
    double norm() const;  // Frobenius
    double dot(const Tensor& o) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double s);

private:
    static size_t pow_(int d, int r) {
        size_t p = 1;
        for (int i = 0; i < r; ++i) p *= static_cast<size_t>(d);
        return p;
    }
    int d_ = 0, r_ = 0;
    std::vector<double> v_;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(double s, Tensor a);

// mu(e_i, e_j) = sum_k c(i,j,k) e_k. Over an orthonormal basis c(i,j,k) is
// also <mu(e_i,e_j), e_k>.
using BilinearMap = Tensor;

enum class AlgebraKind { U, SU, SO };

struct MatrixAlgebra {
    AlgebraKind kind = AlgebraKind::U;
    int n = 0;
    std::string name;            // "u(3)"
    std::vector<CMatrix> basis;  // orthonormal for <X,Y> = -Re tr(XY)
    Tensor bracket;              // [e_i, e_j] = sum_k bracket(i,j,k) e_k
    Matrix killing;              // B(e_i, e_j) = tr(ad e_i ad e_j)

    int dim() const { return static_cast<int>(basis.size()); }
    Vector coords(const CMatrix& x) const;
    CMatrix element(const Vector& x) const;
    // max |<e_i,e_j> - delta_ij|
    double orthonormality_defect() const;
    // max over basis triples of |[X,[Y,Z]] + cyclic|
    double jacobi_defect() const;
};

// n >= 2; throws ConfigError otherwise.
MatrixAlgebra build_algebra(AlgebraKind kind, int n);
// "u3", "su(3)", "so5"
MatrixAlgebra build_algebra(const std::string& spec);

double inner(const CMatrix& x, const CMatrix& y);

// Coefficients of an arbitrary matrix-valued bilinear map, projected onto the
// algebra. The projection residual is checked against `tol`.
BilinearMap from_matrix_map(const MatrixAlgebra& alg, const std::function<CMatrix(const CMatrix&, const CMatrix&)>& f,
                            double tol = 1e-9);

Vector apply(const BilinearMap& mu, const Vector& x, const Vector& y);
// Lambda(X) as a matrix: column j is mu(X, e_j).
Matrix nomizu(const BilinearMap& mu, const Vector& x);
Matrix nomizu(const BilinearMap& mu, int i);

// The equivariant maps on u(n): mu[0..5] = mu_1..mu_6, with
// nu = mu_3 - mu_4 and theta = mu_3 + mu_4.
struct UnitaryMaps {
    std::array<BilinearMap, 6> mu;
    BilinearMap nu, theta;
};
UnitaryMaps unitary_maps(const MatrixAlgebra& alg);

// mu_4 - mu_5 of the unitary family, as given (symmetric-pair presentation).
BilinearMap vectorial_map(const MatrixAlgebra& alg);
// A map in the symmetric-pair presentation of a group as (G x G)/G moved to
// the left-invariant presentation used throughout: mu + 1/2 [.,.].
BilinearMap to_left_invariant(const MatrixAlgebra& alg, const BilinearMap& mu_sym);

// ((1 - alpha)/2) [X,Y]: torsion alpha * T^c; alpha = 0 is Levi-Civita.
BilinearMap lie_family(const MatrixAlgebra& alg, double alpha);
BilinearMap levi_civita(const MatrixAlgebra& alg);

struct Check {
    bool ok = false;
    double defect = 0;
};
// <mu(X,Y),Z> + <mu(X,Z),Y> = 0
Check is_metric(const BilinearMap& mu, double tol = 1e-9);
// mu([W,X],Y) + mu(X,[W,Y]) - [W,mu(X,Y)] = 0
Check is_equivariant(const MatrixAlgebra& alg, const BilinearMap& mu, double tol = 1e-9);

// T(X,Y) = mu(X,Y) - mu(Y,X) - [X,Y]
Tensor torsion(const MatrixAlgebra& alg, const BilinearMap& mu);
// A(X,Y) = mu(X,Y) - 1/2 [X,Y]
Tensor a_tensor(const MatrixAlgebra& alg, const BilinearMap& mu);
// 2A(X,Y,Z) = T(X,Y,Z) - T(Y,Z,X) + T(Z,X,Y)
Tensor a_from_torsion(const Tensor& t);
// T(X,Y,Z) = A(X,Y,Z) - A(Y,X,Z)
Tensor torsion_from_a(const Tensor& a);

struct TypeDecomposition {
    Vector phi;  // vectorial potential, phi = Phi(A)/(d-1)
    Vector xi;   // metric dual of phi (equal coordinates on an orthonormal basis)
    Tensor a1, a2, a3;
    double a1_norm = 0, a2_norm = 0, a3_norm = 0;
    const Tensor& skew_part() const { return a3; }
};

// A must be skew in its last two slots; throws PreconditionError otherwise.
TypeDecomposition classify_type(const Tensor& a, double tol = 1e-9);
// Separate projectors, usable on any rank-3 tensor.
Tensor project_vectorial(const Tensor& a);
Tensor project_skew(const Tensor& a);
Tensor project_cyclic_traceless(const Tensor& a);
// Numerical ranks of the three projectors on the space of tensors skew in
// the last two slots, for an abstract dimension d.
std::array<int, 3> projector_ranks(int d, double tol = 1e-9);
// Random tensor skew in its last two slots.
Tensor random_a_tensor(int d, std::mt19937_64& rng);
Tensor random_tensor(int d, int rank, std::mt19937_64& rng);

enum class Presentation { LeftInvariant, SymmetricPair };

struct TorsionTypeReport {
    bool vectorial = false;  // pure A1
    bool cyclic = false;     // A1 + A2: cyclic sum of A vanishes
    bool traceless = false;  // A2 + A3: sum_i mu(e_i, e_i) = 0
    bool skew = false;       // pure A3
    double vectorial_defect = 0, cyclic_defect = 0;
    Vector trace;  // sum_i mu(e_i, e_i)
    Vector phi;
};
// mu must be metric (PreconditionError otherwise). In the symmetric-pair
// presentation the bracket terms drop out of the conditions.
TorsionTypeReport torsion_type_conditions(const MatrixAlgebra& alg, const BilinearMap& mu,
                                          Presentation p = Presentation::LeftInvariant, double tol = 1e-9);

// R(X,Y,Z,W) = <R(X,Y)Z, W> with R(X,Y)Z = mu(X,mu(Y,Z)) - mu(Y,mu(X,Z)) - mu([X,Y],Z).
Tensor curvature(const MatrixAlgebra& alg, const BilinearMap& mu);
// <R(X,Y)Y,X> / |X ^ Y|^2
double sectional_curvature(const MatrixAlgebra& alg, const BilinearMap& mu, const Vector& x, const Vector& y);

struct EinsteinReport {
    Matrix ricci, ric_sym, ric_alt;
    double scal = 0;
    double einstein_constant = 0;  // scal / dim
    double residual = 0;           // max |Ric_S - (scal/dim) g|
    bool is_einstein = false;
    double curvature_norm = 0;     // max |R|
    int null_directions = 0;       // eigenvalues of Ric_S within tol of 0
};

// Ric(X,Y) = sum_i <R(e_i,X)Y, e_i>
EinsteinReport ricci(const MatrixAlgebra& alg, const BilinearMap& mu, double tol = 1e-9);
// -1/4 B as a matrix; the Levi-Civita Ricci tensor of the bi-invariant metric.
Matrix killing_ricci(const MatrixAlgebra& alg);
// Ric^g - 1/4 sum_i <T(e_i,X), T(e_i,Y)> - 1/2 (delta T)(X,Y) for a 3-form T.
Matrix ricci_skew_path(const MatrixAlgebra& alg, const Tensor& t, double tol = 1e-9);
// Ric^g + (d-2) <X,xi><Y,xi> + (2-d)|xi|^2 <X,Y> + ((2-d)/2) <[X,Y],xi>, d = dim.
Matrix vectorial_ricci(const MatrixAlgebra& alg, const Vector& xi);
// Map of pure vectorial type with potential xi on top of Levi-Civita:
// mu(X,Y) = 1/2 [X,Y] + <X,Y> xi - <Y,xi> X.
BilinearMap vectorial_connection(const MatrixAlgebra& alg, const Vector& xi);

// Generalized covariant derivative of F with respect to the connection of mu.
// F has `inputs` slots followed by one output slot when `vector_valued`.
// The result puts Z first: (D_Z F)(X_1..X_p).
Tensor covariant_derivative(const BilinearMap& mu, const Tensor& f, bool vector_valued = true);
// The metric as a scalar-valued 2-tensor.
Tensor metric_tensor(int d);
// Lie bracket as a vector-valued 2-tensor (= alg.bracket).
// der(X,Y;Z) = Lambda(Z)[X,Y] - [Lambda(Z)X,Y] - [X,Lambda(Z)Y], stored (z,x,y,out).
Tensor der_tensor(const MatrixAlgebra& alg, const BilinearMap& mu);
// max over basis triples of |der(e_i,e_j;e_k)|
double derivation_defect(const MatrixAlgebra& alg, const BilinearMap& mu);
// C(X,Y;Z) = (D_Z mu)(X,Y) - (D_Z mu)(Y,X), stored (z,x,y,out).
Tensor c_tensor(const BilinearMap& mu);
// 2 <U(X,Y),Z> = <[Z,X],Y> + <X,[Z,Y]> for the inner product with Gram matrix g.
Tensor u_tensor(const MatrixAlgebra& alg, const Matrix& gram);
Tensor u_tensor(const MatrixAlgebra& alg);

EinsteinReport einstein_check(const MatrixAlgebra& alg, const BilinearMap& mu, double tol = 1e-9);

// Parts of a bilinear map.
BilinearMap skew_part(const BilinearMap& mu);
BilinearMap sym_part(const BilinearMap& mu);

}  // namespace invconn::conncalc
