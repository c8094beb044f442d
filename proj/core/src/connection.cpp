#include <cmath>

#include "invconn/conncalc.hpp"
#include "invconn/error.hpp"

namespace invconn::conncalc {

Check is_metric(const BilinearMap& mu, double tol) {
    const int d = mu.dim();
    Check c;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = j; k < d; ++k) c.defect = std::max(c.defect, std::abs(mu(i, j, k) + mu(i, k, j)));
    c.ok = c.defect < tol;
    return c;
}

Check is_equivariant(const MatrixAlgebra& alg, const BilinearMap& mu, double tol) {
    const int d = alg.dim();
    const Tensor& b = alg.bracket;
    Check c;
    // For each W the defect is ad_W o mu - mu o (ad_W x 1 + 1 x ad_W), as a tensor.
    for (int w = 0; w < d; ++w) {
        const Matrix adw = nomizu(b, w);  // column j = [e_w, e_j]
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                for (int k = 0; k < d; ++k) {
                    double s = 0;
                    for (int m = 0; m < d; ++m) {
                        s += adw(m, x) * mu(m, y, k);
                        s += adw(m, y) * mu(x, m, k);
                        s -= mu(x, y, m) * adw(k, m);
                    }
                    c.defect = std::max(c.defect, std::abs(s));
                }
            }
    }
    c.ok = c.defect < tol;
    return c;
}

Tensor torsion(const MatrixAlgebra& alg, const BilinearMap& mu) {
    const int d = alg.dim();
    Tensor t(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) t(i, j, k) = mu(i, j, k) - mu(j, i, k) - alg.bracket(i, j, k);
    return t;
}

Tensor a_tensor(const MatrixAlgebra& alg, const BilinearMap& mu) { return mu - 0.5 * alg.bracket; }

Tensor a_from_torsion(const Tensor& t) {
    const int d = t.dim();
    Tensor a(d, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) a(x, y, z) = 0.5 * (t(x, y, z) - t(y, z, x) + t(z, x, y));
    return a;
}

Tensor torsion_from_a(const Tensor& a) {
    const int d = a.dim();
    Tensor t(d, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) t(x, y, z) = a(x, y, z) - a(y, x, z);
    return t;
}

namespace {

std::vector<Matrix> nomizu_all(const BilinearMap& mu) {
    std::vector<Matrix> l;
    l.reserve(mu.dim());
    for (int i = 0; i < mu.dim(); ++i) l.push_back(nomizu(mu, i));
    return l;
}

// R(e_a, e_b) as an endomorphism.
Matrix curvature_operator(const MatrixAlgebra& alg, const std::vector<Matrix>& l, int a, int b) {
    Matrix r = l[a] * l[b] - l[b] * l[a];
    for (int k = 0; k < alg.dim(); ++k)
        if (double c = alg.bracket(a, b, k)) r -= c * l[k];
    return r;
}

}  // namespace

Tensor curvature(const MatrixAlgebra& alg, const BilinearMap& mu) {
    const int d = alg.dim();
    const auto l = nomizu_all(mu);
    Tensor r(d, 4);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            const Matrix op = curvature_operator(alg, l, a, b);
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    r(a, b, c, w) = op(w, c);
                    r(b, a, c, w) = -op(w, c);
                }
        }
    return r;
}

double sectional_curvature(const MatrixAlgebra& alg, const BilinearMap& mu, const Vector& x, const Vector& y) {
    const Vector xy = apply(alg.bracket, x, y);
    // R(X,Y)Y = mu(X, mu(Y,Y)) - mu(Y, mu(X,Y)) - mu([X,Y], Y)
    const Vector ryy = apply(mu, x, apply(mu, y, y)) - apply(mu, y, apply(mu, x, y)) - apply(mu, xy, y);
    const double area = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
    if (area <= 0) throw PreconditionError("sectional curvature needs independent vectors");
    return ryy.dot(x) / area;
}

Matrix killing_ricci(const MatrixAlgebra& alg) { return -0.25 * alg.killing; }

EinsteinReport ricci(const MatrixAlgebra& alg, const BilinearMap& mu, double tol) {
    const int d = alg.dim();
    const auto l = nomizu_all(mu);
    EinsteinReport rep;
    rep.ricci = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int x = 0; x < d; ++x) {
            if (i == x) continue;
            const Matrix op = curvature_operator(alg, l, i, x);
            rep.curvature_norm = std::max(rep.curvature_norm, op.cwiseAbs().maxCoeff());
            // Ric(X,Y) += <R(e_i,X)Y, e_i>
            for (int y = 0; y < d; ++y) rep.ricci(x, y) += op(i, y);
        }
    rep.ric_sym = 0.5 * (rep.ricci + rep.ricci.transpose());
    rep.ric_alt = 0.5 * (rep.ricci - rep.ricci.transpose());
    rep.scal = rep.ricci.trace();
    rep.einstein_constant = rep.scal / d;
    rep.residual = (rep.ric_sym - rep.einstein_constant * Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    rep.is_einstein = rep.residual < tol;
    Eigen::SelfAdjointEigenSolver<Matrix> es(rep.ric_sym, Eigen::EigenvaluesOnly);
    for (int k = 0; k < d; ++k)
        if (std::abs(es.eigenvalues()[k]) < tol) ++rep.null_directions;
    return rep;
}

EinsteinReport einstein_check(const MatrixAlgebra& alg, const BilinearMap& mu, double tol) {
    if (!is_metric(mu, tol).ok) throw PreconditionError("einstein_check needs a metric connection");
    return ricci(alg, mu, tol);
}

Matrix ricci_skew_path(const MatrixAlgebra& alg, const Tensor& t, double tol) {
    const int d = alg.dim();
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                if (std::abs(t(x, y, z) + t(y, x, z)) > tol || std::abs(t(x, y, z) + t(x, z, y)) > tol)
                    throw PreconditionError("ricci_skew_path needs a totally skew torsion");
    Matrix ric = killing_ricci(alg);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            double s = 0;
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) s += t(i, x, k) * t(i, y, k);
            ric(x, y) -= 0.25 * s;
        }
    // (delta T)(X,Y) = -sum_i (nabla^g_{e_i} T)(e_i, X, Y)
    const Tensor nt = covariant_derivative(levi_civita(alg), t, false);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            double delta = 0;
            for (int i = 0; i < d; ++i) delta -= nt(i, i, x, y);
            ric(x, y) -= 0.5 * delta;
        }
    return ric;
}

BilinearMap vectorial_connection(const MatrixAlgebra& alg, const Vector& xi) {
    const int d = alg.dim();
    BilinearMap mu = 0.5 * alg.bracket;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int k = 0; k < d; ++k) mu(x, y, k) += (x == y ? xi[k] : 0.0) - (x == k ? xi[y] : 0.0);
    return mu;
}

Matrix vectorial_ricci(const MatrixAlgebra& alg, const Vector& xi) {
    const int d = alg.dim();
    const double xi2 = xi.squaredNorm();
    if (xi2 == 0) throw PreconditionError("vectorial_ricci needs a non-zero potential");
    Matrix ric = killing_ricci(alg);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            double bracket_xi = 0;
            for (int k = 0; k < d; ++k) bracket_xi += alg.bracket(x, y, k) * xi[k];
            ric(x, y) += (d - 2) * xi[x] * xi[y] + (2 - d) * xi2 * (x == y ? 1.0 : 0.0) + (2.0 - d) / 2 * bracket_xi;
        }
    return ric;
}

Tensor covariant_derivative(const BilinearMap& mu, const Tensor& f, bool vector_valued) {
    const int d = f.dim();
    const int r = f.rank();
    if (mu.dim() != d) throw PreconditionError("covariant_derivative: dimension mismatch");
    const size_t block = f.data().size();
    Tensor out(d, r + 1);
    std::vector<size_t> stride(r);
    for (int s = r - 1, st = 1; s >= 0; --s, st *= d) stride[s] = st;
    const double* fv = f.data().data();
    for (int z = 0; z < d; ++z) {
        double* o = out.data().data() + z * block;
        for (int s = 0; s < r; ++s) {
            const bool output = vector_valued && s == r - 1;
            const size_t st = stride[s];
            for (size_t idx = 0; idx < block; ++idx) {
                const int cur = static_cast<int>((idx / st) % d);
                const size_t base = idx - cur * st;
                double acc = 0;
                if (output) {
                    // Lambda(Z) applied to the value: sum_m F(.., m) c(z, m, cur)
                    for (int m = 0; m < d; ++m) acc += fv[base + m * st] * mu(z, m, cur);
                    o[idx] += acc;
                } else {
                    // F(.., Lambda(Z) e_cur, ..)
                    for (int k = 0; k < d; ++k) acc += mu(z, cur, k) * fv[base + k * st];
                    o[idx] -= acc;
                }
            }
        }
    }
    return out;
}

Tensor der_tensor(const MatrixAlgebra& alg, const BilinearMap& mu) {
    return covariant_derivative(mu, alg.bracket, true);
}

double derivation_defect(const MatrixAlgebra& alg, const BilinearMap& mu) {
    const Tensor der = der_tensor(alg, mu);
    const int d = alg.dim();
    double m = 0;
    for (int z = 0; z < d; ++z)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                double s = 0;
                for (int k = 0; k < d; ++k) s += der(z, x, y, k) * der(z, x, y, k);
                m = std::max(m, std::sqrt(s));
            }
    return m;
}

Tensor c_tensor(const BilinearMap& mu) {
    const Tensor dm = covariant_derivative(mu, mu, true);
    const int d = mu.dim();
    Tensor c(d, 4);
    for (int z = 0; z < d; ++z)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int k = 0; k < d; ++k) c(z, x, y, k) = dm(z, x, y, k) - dm(z, y, x, k);
    return c;
}

Tensor u_tensor(const MatrixAlgebra& alg, const Matrix& gram) {
    const int d = alg.dim();
    if (gram.rows() != d || gram.cols() != d) throw PreconditionError("u_tensor: Gram matrix has wrong size");
    Eigen::LLT<Matrix> llt(gram);
    if (llt.info() != Eigen::Success) throw PreconditionError("u_tensor: inner product is not positive definite");
    Tensor u(d, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            // rhs_z = <[e_z, e_x], e_y> + <e_x, [e_z, e_y]>
            Vector rhs(d);
            for (int z = 0; z < d; ++z) {
                double s = 0;
                for (int m = 0; m < d; ++m) s += alg.bracket(z, x, m) * gram(m, y) + gram(x, m) * alg.bracket(z, y, m);
                rhs[z] = 0.5 * s;
            }
            const Vector c = llt.solve(rhs);
            for (int k = 0; k < d; ++k) u(x, y, k) = c[k];
        }
    return u;
}

Tensor u_tensor(const MatrixAlgebra& alg) { return u_tensor(alg, Matrix::Identity(alg.dim(), alg.dim())); }

}  // namespace invconn::conncalc
