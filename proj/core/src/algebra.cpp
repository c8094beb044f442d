#include <cctype>
#include <cmath>

#include "invconn/conncalc.hpp"
#include "invconn/error.hpp"

namespace invconn::conncalc {

// ---------------------------------------------------------------------------
// Tensor

double& Tensor::at(const std::vector<int>& idx) {
    size_t p = 0;
    for (int i : idx) p = p * d_ + i;
    return v_.at(p);
}

double Tensor::at(const std::vector<int>& idx) const {
    size_t p = 0;
    for (int i : idx) p = p * d_ + i;
    return v_.at(p);
}

double Tensor::max_abs() const {
    double m = 0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

double Tensor::norm() const { return std::sqrt(dot(*this)); }

double Tensor::dot(const Tensor& o) const {
    if (o.v_.size() != v_.size()) throw PreconditionError("tensor shape mismatch");
    double s = 0;
    for (size_t i = 0; i < v_.size(); ++i) s += v_[i] * o.v_[i];
    return s;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (o.v_.size() != v_.size()) throw PreconditionError("tensor shape mismatch");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (o.v_.size() != v_.size()) throw PreconditionError("tensor shape mismatch");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
Tensor operator*(double s, Tensor a) { return a *= s; }

// ---------------------------------------------------------------------------
// Algebras

double inner(const CMatrix& x, const CMatrix& y) { return -(x * y).trace().real(); }

Vector MatrixAlgebra::coords(const CMatrix& x) const {
    Vector v(dim());
    for (int k = 0; k < dim(); ++k) v[k] = inner(x, basis[k]);
    return v;
}

CMatrix MatrixAlgebra::element(const Vector& x) const {
    CMatrix m = CMatrix::Zero(n, n);
    for (int k = 0; k < dim(); ++k) m += x[k] * basis[k];
    return m;
}

double MatrixAlgebra::orthonormality_defect() const {
    double m = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m = std::max(m, std::abs(inner(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)));
    return m;
}

double MatrixAlgebra::jacobi_defect() const {
    double m = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                const CMatrix &x = basis[i], &y = basis[j], &z = basis[k];
                auto br = [](const CMatrix& a, const CMatrix& b) -> CMatrix { return a * b - b * a; };
                CMatrix s = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
                m = std::max(m, s.cwiseAbs().maxCoeff());
            }
    return m;
}

namespace {

const std::complex<double> I(0, 1);

void add_off_diagonal(std::vector<CMatrix>& b, int n, bool hermitian_part) {
    const double r = 1 / std::sqrt(2.0);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            CMatrix e = CMatrix::Zero(n, n);
            e(k, l) = r;
            e(l, k) = -r;
            b.push_back(e);
            if (hermitian_part) {
                CMatrix f = CMatrix::Zero(n, n);
                f(k, l) = I * r;
                f(l, k) = I * r;
                b.push_back(f);
            }
        }
}

}  // namespace

MatrixAlgebra build_algebra(AlgebraKind kind, int n) {
    if (n < 2) throw ConfigError("matrix algebras need n >= 2");
    MatrixAlgebra a;
    a.kind = kind;
    a.n = n;
    switch (kind) {
        case AlgebraKind::U:
            a.name = "u(" + std::to_string(n) + ")";
            for (int k = 0; k < n; ++k) {
                CMatrix e = CMatrix::Zero(n, n);
                e(k, k) = I;
                a.basis.push_back(e);
            }
            add_off_diagonal(a.basis, n, true);
            break;
        case AlgebraKind::SU:
            a.name = "su(" + std::to_string(n) + ")";
            // generalized Gell-Mann diagonals
            for (int m = 1; m < n; ++m) {
                CMatrix e = CMatrix::Zero(n, n);
                const double s = 1 / std::sqrt(static_cast<double>(m) * (m + 1));
                for (int k = 0; k < m; ++k) e(k, k) = I * s;
                e(m, m) = -I * (m * s);
                a.basis.push_back(e);
            }
            add_off_diagonal(a.basis, n, true);
            break;
        case AlgebraKind::SO:
            a.name = "so(" + std::to_string(n) + ")";
            add_off_diagonal(a.basis, n, false);
            break;
    }
    const int d = a.dim();
    a.bracket = Tensor(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vector c = a.coords(a.basis[i] * a.basis[j] - a.basis[j] * a.basis[i]);
            for (int k = 0; k < d; ++k) {
                a.bracket(i, j, k) = c[k];
                a.bracket(j, i, k) = -c[k];
            }
        }
    a.killing = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double s = 0;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) s += a.bracket(i, k, l) * a.bracket(j, l, k);
            a.killing(i, j) = s;
        }
    return a;
}

MatrixAlgebra build_algebra(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (c != '(' && c != ')' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    AlgebraKind kind;
    size_t pos;
    if (s.rfind("su", 0) == 0) {
        kind = AlgebraKind::SU;
        pos = 2;
    } else if (s.rfind("so", 0) == 0) {
        kind = AlgebraKind::SO;
        pos = 2;
    } else if (s.rfind("u", 0) == 0) {
        kind = AlgebraKind::U;
        pos = 1;
    } else {
        throw ConfigError("unsupported algebra '" + spec + "' (u(n), su(n), so(n))");
    }
    const std::string num = s.substr(pos);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
        throw ConfigError("bad algebra size in '" + spec + "'");
    return build_algebra(kind, std::stoi(num));
}

// ---------------------------------------------------------------------------
// Bilinear maps

BilinearMap from_matrix_map(const MatrixAlgebra& alg, const std::function<CMatrix(const CMatrix&, const CMatrix&)>& f,
                            double tol) {
    const int d = alg.dim();
    BilinearMap c(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const CMatrix m = f(alg.basis[i], alg.basis[j]);
            const Vector v = alg.coords(m);
            const double residual = (m - alg.element(v)).cwiseAbs().maxCoeff();
            if (residual > tol) throw DataError("bilinear map leaves " + alg.name);
            for (int k = 0; k < d; ++k) c(i, j, k) = v[k];
        }
    return c;
}

Vector apply(const BilinearMap& mu, const Vector& x, const Vector& y) {
    const int d = mu.dim();
    Vector out = Vector::Zero(d);
    for (int i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            const double w = x[i] * y[j];
            if (w == 0) continue;
            for (int k = 0; k < d; ++k) out[k] += w * mu(i, j, k);
        }
    }
    return out;
}

Matrix nomizu(const BilinearMap& mu, int i) {
    const int d = mu.dim();
    Matrix l(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) l(k, j) = mu(i, j, k);
    return l;
}

Matrix nomizu(const BilinearMap& mu, const Vector& x) {
    const int d = mu.dim();
    Matrix l = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        if (x[i] != 0) l += x[i] * nomizu(mu, i);
    return l;
}

UnitaryMaps unitary_maps(const MatrixAlgebra& alg) {
    if (alg.kind != AlgebraKind::U) throw PreconditionError("the unitary maps are defined on u(n) only");
    const int n = alg.n;
    const CMatrix id = CMatrix::Identity(n, n);
    UnitaryMaps m;
    m.mu[0] = alg.bracket;
    m.mu[1] = from_matrix_map(alg, [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return I * (x * y + y * x); });
    m.mu[2] = from_matrix_map(alg, [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return I * x.trace() * y; });
    m.mu[3] = from_matrix_map(alg, [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return I * y.trace() * x; });
    m.mu[4] = from_matrix_map(alg, [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return I * (x * y).trace() * id; });
    m.mu[5] = from_matrix_map(alg,
                              [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return I * x.trace() * y.trace() * id; });
    m.nu = m.mu[2] - m.mu[3];
    m.theta = m.mu[2] + m.mu[3];
    return m;
}

BilinearMap vectorial_map(const MatrixAlgebra& alg) {
    auto m = unitary_maps(alg);
    return m.mu[3] - m.mu[4];
}

BilinearMap to_left_invariant(const MatrixAlgebra& alg, const BilinearMap& mu_sym) {
    return mu_sym + 0.5 * alg.bracket;
}

BilinearMap lie_family(const MatrixAlgebra& alg, double alpha) { return (1 - alpha) / 2 * alg.bracket; }

BilinearMap levi_civita(const MatrixAlgebra& alg) { return lie_family(alg, 0); }

BilinearMap skew_part(const BilinearMap& mu) {
    const int d = mu.dim();
    BilinearMap s(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) s(i, j, k) = 0.5 * (mu(i, j, k) - mu(j, i, k));
    return s;
}

BilinearMap sym_part(const BilinearMap& mu) { return mu - skew_part(mu); }

Tensor metric_tensor(int d) {
    Tensor g(d, 2);
    for (int i = 0; i < d; ++i) g.at({i, i}) = 1;
    return g;
}

Tensor random_tensor(int d, int rank, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Tensor t(d, rank);
    for (double& x : t.data()) x = nd(rng);
    return t;
}

Tensor random_a_tensor(int d, std::mt19937_64& rng) {
    Tensor t = random_tensor(d, 3, rng);
    Tensor a(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) a(i, j, k) = 0.5 * (t(i, j, k) - t(i, k, j));
    return a;
}

}  // namespace invconn::conncalc
