#include <cmath>

#include "invconn/conncalc.hpp"
#include "invconn/error.hpp"

namespace invconn::conncalc {

namespace {

Vector trace_vector(const Tensor& a) {
    const int d = a.dim();
    Vector phi = Vector::Zero(d);
    for (int i = 0; i < d; ++i)
        for (int z = 0; z < d; ++z) phi[z] += a(i, i, z);
    return phi;
}

Tensor vectorial_from(const Vector& phi) {
    const int d = static_cast<int>(phi.size());
    Tensor t(d, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            if (x == y)
                for (int z = 0; z < d; ++z) t(x, y, z) += phi[z];
            t(x, y, x) -= phi[y];
        }
    return t;
}

}  // namespace

Tensor project_vectorial(const Tensor& a) {
    const int d = a.dim();
    if (d < 2) throw PreconditionError("vectorial projection needs dimension >= 2");
    return vectorial_from(trace_vector(a) / (d - 1));
}

Tensor project_skew(const Tensor& a) {
    const int d = a.dim();
    Tensor t(d, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) t(x, y, z) = (a(x, y, z) + a(y, z, x) + a(z, x, y)) / 3;
    return t;
}

Tensor project_cyclic_traceless(const Tensor& a) { return a - project_vectorial(a) - project_skew(a); }

TypeDecomposition classify_type(const Tensor& a, double tol) {
    const int d = a.dim();
    double asym = 0;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) asym = std::max(asym, std::abs(a(x, y, z) + a(x, z, y)));
    if (asym > tol * std::max(1.0, a.max_abs()))
        throw PreconditionError("classify_type: tensor is not skew in its last two slots (metric connection)");
    TypeDecomposition t;
    t.phi = trace_vector(a) / (d - 1);
    t.xi = t.phi;
    t.a1 = vectorial_from(t.phi);
    t.a3 = project_skew(a);
    t.a2 = a - t.a1 - t.a3;
    t.a1_norm = t.a1.norm();
    t.a2_norm = t.a2.norm();
    t.a3_norm = t.a3.norm();
    return t;
}

std::array<int, 3> projector_ranks(int d, double tol) {
    // Basis of tensors skew in the last two slots.
    std::vector<Tensor> basis;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = y + 1; z < d; ++z) {
                Tensor e(d, 3);
                e(x, y, z) = 1;
                e(x, z, y) = -1;
                basis.push_back(e);
            }
    const size_t rows = static_cast<size_t>(d) * d * d;
    std::array<int, 3> ranks{};
    Tensor (*proj[3])(const Tensor&) = {project_vectorial, project_cyclic_traceless, project_skew};
    for (int p = 0; p < 3; ++p) {
        Matrix m(rows, basis.size());
        for (size_t c = 0; c < basis.size(); ++c) {
            const Tensor img = proj[p](basis[c]);
            for (size_t r = 0; r < rows; ++r) m(r, c) = img.data()[r];
        }
        Eigen::JacobiSVD<Matrix> svd(m);
        int rank = 0;
        for (int k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()[k] > tol) ++rank;
        ranks[p] = rank;
    }
    return ranks;
}

TorsionTypeReport torsion_type_conditions(const MatrixAlgebra& alg, const BilinearMap& mu, Presentation p, double tol) {
    if (!is_metric(mu, tol).ok) throw PreconditionError("torsion type conditions need a metric connection");
    // In the symmetric-pair presentation the bracket terms vanish, so the
    // conditions read directly on mu.
    const Tensor a = p == Presentation::LeftInvariant ? a_tensor(alg, mu) : mu;
    TorsionTypeReport r;
    r.trace = trace_vector(mu);
    r.phi = trace_vector(a) / (alg.dim() - 1);
    const Tensor skew = project_skew(a);
    r.vectorial_defect = (a - vectorial_from(r.phi)).max_abs();
    r.cyclic_defect = skew.max_abs();
    r.vectorial = r.vectorial_defect < tol;
    r.cyclic = r.cyclic_defect < tol;
    r.traceless = trace_vector(a).cwiseAbs().maxCoeff() < tol;
    r.skew = (a - skew).max_abs() < tol;
    return r;
}

}  // namespace invconn::conncalc
