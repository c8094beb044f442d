#include <cmath>
#include <sstream>

#include "invconn/battery.hpp"
#include "invconn/chars.hpp"
#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

namespace invconn::battery {

using namespace conncalc;

namespace {

CheckResult bound(std::string name, double value, double tol, std::string detail = {}) {
    return {std::move(name), value < tol, value, tol, std::move(detail)};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

std::vector<CheckResult> verify_unitary(int n, double tol, uint64_t seed) {
    if (n < 3) throw RangeError("the unitary checks need n >= 3");
    const MatrixAlgebra alg = build_algebra(AlgebraKind::U, n);
    const int d = alg.dim();
    const UnitaryMaps maps = unitary_maps(alg);
    const BilinearMap raw = maps.mu[3] - maps.mu[4];
    const BilinearMap mu = to_left_invariant(alg, raw);
    std::vector<CheckResult> out;

    out.push_back(bound("basis orthonormal", alg.orthonormality_defect(), tol));
    out.push_back(bound("Jacobi identity", alg.jacobi_defect(), tol));

    Matrix txy(d, d), tt(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            txy(a, b) = (alg.basis[a] * alg.basis[b]).trace().real();
            tt(a, b) = (alg.basis[a].trace() * alg.basis[b].trace()).real();
        }
    out.push_back(bound("Killing form = 2n trXY - 2 trX trY",
                        (alg.killing - (2.0 * n * txy - 2.0 * tt)).cwiseAbs().maxCoeff(), tol));

    for (int k = 0; k < 6; ++k) {
        out.push_back(bound("mu_" + std::to_string(k + 1) + " equivariant", is_equivariant(alg, maps.mu[k], tol).defect,
                            tol));
    }
    out.push_back(bound("mu_4 - mu_5 metric", is_metric(raw, tol).defect, tol));
    out.push_back(bound("mu_4 - mu_5 + 1/2 [.,.] metric", is_metric(mu, tol).defect, tol));
    {
        const Check c = is_metric(maps.nu, tol);
        out.push_back({"nu not metric", !c.ok, c.defect, tol, "defect " + fmt(c.defect)});
    }
    out.push_back(bound("torsion of mu_4 - mu_5 = -nu - [X,Y]",
                        (torsion(alg, raw) - (-1.0 * maps.nu - alg.bracket)).max_abs(), tol));

    // Difference tensor of the left-invariant form is pure vectorial with
    // phi(Z) = -i tr Z.
    const TypeDecomposition td = classify_type(a_tensor(alg, mu), tol);
    Vector phi_expected(d);
    for (int k = 0; k < d; ++k) phi_expected[k] = (std::complex<double>(0, -1) * alg.basis[k].trace()).real();
    out.push_back(bound("difference tensor pure vectorial", std::max(td.a2_norm, td.a3_norm), tol));
    out.push_back(bound("vectorial potential phi(Z) = -i tr Z", (td.phi - phi_expected).cwiseAbs().maxCoeff(), tol));
    {
        const TorsionTypeReport tr = torsion_type_conditions(alg, mu, Presentation::LeftInvariant, tol);
        const TorsionTypeReport ts = torsion_type_conditions(alg, raw, Presentation::SymmetricPair, tol);
        const bool same = tr.vectorial == ts.vectorial && tr.cyclic == ts.cyclic && tr.traceless == ts.traceless;
        out.push_back({"vectorial condition holds in both presentations", tr.vectorial && ts.vectorial && same,
                       std::max(tr.vectorial_defect, ts.vectorial_defect), tol,
                       "trace sum_i mu(e_i,e_i) has norm " + fmt(tr.trace.norm())});
    }

    const Matrix ric_g = ricci(alg, levi_civita(alg), tol).ricci;
    out.push_back(bound("calibration Ric^g = -1/4 B", (ric_g - killing_ricci(alg)).cwiseAbs().maxCoeff(), tol));

    const EinsteinReport rep = ricci(alg, mu, tol);
    const Matrix printed = 0.5 * ((n - 4.0) * txy + (5.0 - 2 * n) * tt);
    // Both sides lie in span(trXY, trX trY); read off the coefficients on an
    // off-diagonal and a diagonal basis element.
    const double c1 = rep.ricci(n, n) / txy(n, n);
    const double c2 = (rep.ricci(0, 0) - c1 * txy(0, 0)) / tt(0, 0);
    out.push_back(bound("Ricci = 1/2((n-4) trXY + (5-2n) trX trY)", (rep.ricci - printed).cwiseAbs().maxCoeff(), tol,
                        "computed Ric = " + fmt(c1) + " trXY + " + fmt(c2) + " trX trY"));
    const Vector xi = alg.coords(std::complex<double>(0, 1) * CMatrix::Identity(n, n));
    out.push_back(bound("Ricci = vectorial formula with xi = i Id, |xi|^2 = " + fmt(xi.squaredNorm()),
                        (rep.ricci - vectorial_ricci(alg, xi)).cwiseAbs().maxCoeff(), tol));
    out.push_back(bound("Ricci symmetric", rep.ric_alt.cwiseAbs().maxCoeff(), tol));
    {
        double m = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) m = std::max(m, std::abs(apply(alg.bracket, Vector::Unit(d, a), Vector::Unit(d, b)).dot(xi)));
        out.push_back(bound("<[X,Y], xi> = 0", m, tol));
    }
    if (n == 4) {
        out.push_back(bound("Ricci = -3/2 trX trY at n = 4", (rep.ricci + 1.5 * tt).cwiseAbs().maxCoeff(), tol));
    }
    if (n == 3) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> nd;
        int negative = 0;
        double worst = INFINITY;
        for (int t = 0; t < 1000; ++t) {
            Vector x(d);
            for (int k = 0; k < d; ++k) x[k] = nd(rng);
            const double v = x.dot(rep.ricci * x) / x.squaredNorm();
            worst = std::min(worst, v);
            if (!(v > 0)) ++negative;
        }
        out.push_back({"Ric(X,X) > 0 on 1000 random X", negative == 0, static_cast<double>(negative), 0,
                       std::to_string(negative) + " non-positive samples, min Ric(X,X)/|X|^2 = " + fmt(worst)});
    }

    // Counting side: u(n) = 1 + su(n) as a module over SU(n).
    {
        auto rs = rootsys::build_root_system({rootsys::make_type('A', n - 1)});
        chars::Character chi = chars::trivial_character(rs) + chars::adjoint_character(rs);
        const siiclass::SIIReport r = siiclass::classify_reducible(chi);
        const bool ok = r.N == 6 && r.a == 2 && r.l == 1 && r.epsilon == 1;
        out.push_back({"invariant counts N=6 a=2 l=1 eps=1", ok, 0, 0,
                       "N=" + std::to_string(r.N) + " a=" + std::to_string(r.a) + " l=" + std::to_string(r.l) +
                           " eps=" + std::to_string(r.epsilon)});
    }
    return out;
}

EinsteinRow einstein_row(const MatrixAlgebra& alg, double alpha, double tol, double flat_tol) {
    EinsteinRow row;
    row.algebra = alg.name;
    row.alpha = alpha;
    const BilinearMap mu = lie_family(alg, alpha);
    row.report = einstein_check(alg, mu, tol);
    const Tensor t = torsion(alg, mu);
    row.parallel_torsion = covariant_derivative(mu, t).max_abs();
    row.flat = row.report.curvature_norm < flat_tol;
    if (!row.report.is_einstein && row.report.null_directions > 0)
        row.note = std::to_string(row.report.null_directions) + " Ricci-flat direction(s) (center)";
    return row;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.tol > 0) os << "  [" << fmt(c.value) << " vs tol " << fmt(c.tol) << "]";
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace invconn::battery
