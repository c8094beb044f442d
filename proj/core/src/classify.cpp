#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

namespace invconn::siiclass {

using chars::multiplicity;
using chars::Plethysm;
using chars::PointEvaluator;

const char* status_name(Status s) {
    switch (s) {
        case Status::Match: return "match";
        case Status::Mismatch: return "mismatch";
        case Status::Skipped: return "skipped: infeasible";
        case Status::Computed: return "computed";
    }
    return "?";
}

RepType duality_type(const RootSystemPtr& rs, const std::vector<Weight>& constituents) {
    if (constituents.size() == 1) {
        if (rootsys::dual_weight(*rs, constituents[0]) == constituents[0]) return RepType::Real;
        throw DataError("single constituent " + rs->format(constituents[0]) + " is not self-dual");
    }
    if (constituents.size() == 2) {
        const Weight& p = constituents[0];
        const Weight& q = constituents[1];
        if (p != q && rootsys::dual_weight(*rs, p) == q) return RepType::Complex;
    }
    std::string s;
    for (auto& w : constituents) s += (s.empty() ? "" : " + ") + rs->format(w);
    throw DataError("m^C = " + s + " is neither irreducible self-dual nor a dual pair");
}

namespace {

std::string fmt_count(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::vector<Constituent> constituent_list(const IsotropyDatum& e, size_t candidate) {
    return e.candidates.empty() ? e.constituents : e.candidates.at(candidate);
}

Feasibility assess_list(const IsotropyDatum& entry, const std::vector<Constituent>& list, const Budget& budget) {
    Feasibility f;
    auto rs = entry.root_system();
    f.weyl_order = rs->weyl_order();
    for (auto& c : list) {
        // Dominant-weight enumeration is cheap even when the support is not.
        f.support += chars::support_estimate(rs, entry.weight(*rs, c));
    }
    // Materializing the square plus point queries over the rho-orbit.
    f.cost_estimate = f.support * f.support + f.support * std::min(f.weyl_order, 1e12);
    if (budget.unlimited) return f;
    if (f.weyl_order > budget.max_weyl_order) {
        f.feasible = false;
        f.reason = "|W_K| = " + fmt_count(f.weyl_order) + " exceeds " + fmt_count(budget.max_weyl_order);
    } else if (f.support > budget.max_support) {
        f.feasible = false;
        f.reason = "support " + fmt_count(f.support) + " exceeds " + fmt_count(budget.max_support);
    }
    return f;
}

struct Counts {
    int64_t a = 0, s = 0, N = 0, l = 0, epsilon = 0;
};

// a and s summed over the constituent highest weights; the tensor square is
// only needed when s is asked for through N.
Counts count(const Character& chi, const std::vector<Weight>& constituents) {
    PointEvaluator ev(chi);
    Counts c;
    for (auto& w : constituents) {
        c.a += multiplicity(ev, Plethysm::Alt2, w);
        c.s += multiplicity(ev, Plethysm::Sym2, w);
    }
    c.N = c.a + c.s;
    c.l = multiplicity(ev, Plethysm::Alt3, Weight{});
    c.epsilon = multiplicity(ev, Plethysm::TensorAlt2, Weight{}) - c.l;
    return c;
}

}  // namespace

Feasibility assess(const IsotropyDatum& entry, const Budget& budget) {
    // The most expensive candidate decides.
    Feasibility worst;
    const size_t n = std::max<size_t>(1, entry.candidates.size());
    for (size_t k = 0; k < n; ++k) {
        Feasibility f = assess_list(entry, constituent_list(entry, k), budget);
        if (!f.feasible) return f;
        if (k == 0 || f.cost_estimate > worst.cost_estimate) worst = f;
    }
    return worst;
}

std::vector<SIIReport> classify(const IsotropyDatum& entry, const Budget& budget) {
    entry.validate();
    std::vector<SIIReport> out;
    const size_t n = std::max<size_t>(1, entry.candidates.size());
    for (size_t k = 0; k < n; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto list = constituent_list(entry, k);
        IsotropyDatum row = entry;
        row.constituents = list;

        SIIReport r;
        r.id = entry.id;
        r.m_description = row.describe_m();
        r.candidate = static_cast<int>(k);
        r.dim_m = row.isotropy_dimension();
        r.expected = entry.expected;
        r.feasibility = assess_list(entry, list, budget);
        if (!r.feasibility.feasible) {
            r.status = Status::Skipped;
            r.notes.push_back(r.feasibility.reason);
            out.push_back(std::move(r));
            continue;
        }

        auto rs = entry.root_system();
        std::vector<Weight> ws;
        Character chi(rs);
        for (auto& c : list) {
            ws.push_back(entry.weight(*rs, c));
            chi += chars::irrep_character(rs, ws.back());
        }
        r.rep_type = duality_type(rs, ws);
        Counts c = count(chi, ws);
        r.a = c.a;
        r.s = c.s;
        r.N = c.N;
        r.l = c.l;
        r.epsilon = c.epsilon;

        if (!(1 <= r.l && r.l <= r.a && r.a <= r.N)) r.notes.push_back("violates 1 <= l <= a <= N");
        if (r.epsilon < 0 || r.epsilon != r.a - r.l) r.notes.push_back("epsilon != a - l");
        if (r.rep_type == RepType::Complex && (r.a % 2 || r.s % 2 || r.l % 2))
            r.notes.push_back("complex type with an odd count");

        if (entry.expected) {
            const Expected& e = *entry.expected;
            const bool same = e.a == r.a && e.s == r.s && e.N == r.N && e.l == r.l && e.type == r.rep_type;
            r.status = same && r.notes.empty() ? Status::Match : Status::Mismatch;
        } else {
            r.status = r.notes.empty() ? Status::Computed : Status::Mismatch;
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

SIIReport classify_reducible(const Character& chi) {
    if (!chi.is_genuine()) throw DataError("classify_reducible: virtual character");
    auto rs = chi.rs_ptr();
    auto parts = chars::decompose(chi);
    std::vector<Weight> ws;
    for (auto& [w, m] : parts.terms) {
        if (m != 1)
            throw PreconditionError("classify_reducible: " + rs->format(w) + " occurs " + std::to_string(m) +
                                    " times; only multiplicity-free modules are supported");
        ws.push_back(w);
    }
    SIIReport r;
    r.id = "reducible";
    r.m_description = parts.format();
    r.dim_m = chi.dimension();
    PointEvaluator ev(chi);
    for (auto& w : ws) {
        r.N += multiplicity(ev, Plethysm::Square, w);
        r.a += multiplicity(ev, Plethysm::Alt2, w);
    }
    r.s = r.N - r.a;
    r.l = multiplicity(ev, Plethysm::Alt3, Weight{});
    r.epsilon = multiplicity(ev, Plethysm::TensorAlt2, Weight{}) - r.l;
    bool self_dual = std::all_of(ws.begin(), ws.end(), [&](auto& w) { return rootsys::dual_weight(*rs, w) == w; });
    r.rep_type = self_dual ? RepType::Real : RepType::Complex;
    r.status = Status::Computed;
    return r;
}

Character isotropy_from_embedding(Host host, const Character& pi) {
    if (!pi.is_genuine()) throw PreconditionError("isotropy_from_embedding: pi must be a genuine character");
    auto rs = pi.rs_ptr();
    Character chi(rs);
    switch (host) {
        case Host::Orthogonal: chi = chars::alt2(pi) - chars::adjoint_character(rs); break;
        case Host::Unitary:
            chi = chars::tensor(pi, chars::dual(pi)) - chars::trivial_character(rs) - chars::adjoint_character(rs);
            break;
        case Host::Symplectic: chi = chars::sym2(pi) - chars::adjoint_character(rs); break;
    }
    if (!chi.is_genuine())
        throw DataError("isotropy_from_embedding: negative multiplicity; embedding data inconsistent with host");
    // A virtual difference can still have non-negative weights; check the
    // irreducible decomposition as well.
    chars::decompose(chi, SIZE_MAX);
    return chi;
}

CrossCheck external_cross_check(const IsotropyDatum& entry) {
    if (entry.factors.size() < 2) throw PreconditionError(entry.id + ": external product needs at least two factors");
    if (entry.constituents.size() != 1)
        throw PreconditionError(entry.id + ": external product needs a single constituent");
    auto rs = entry.root_system();
    const Constituent& c = entry.constituents[0];
    std::vector<SimpleType> vf(entry.factors.begin(), entry.factors.end() - 1);
    auto rs_v = rootsys::build_root_system(vf);
    auto rs_w = rootsys::build_root_system({entry.factors.back()});
    std::vector<int> lv;
    for (size_t f = 0; f + 1 < c.size(); ++f) lv.insert(lv.end(), c[f].begin(), c[f].end());
    const Character& v = chars::irrep_character(rs_v, rs_v->make_weight(lv));
    const Character& w = chars::irrep_character(rs_w, rs_w->make_weight(c.back()));
    const Weight lambda = entry.weight(*rs, c);
    const Character& chi = chars::irrep_character(rs, lambda);

    using chars::outer;
    const Character alt2_f = outer(chars::alt2(v), chars::sym2(w), rs) + outer(chars::sym2(v), chars::alt2(w), rs);
    const Character sym2_f = outer(chars::sym2(v), chars::sym2(w), rs) + outer(chars::alt2(v), chars::alt2(w), rs);
    const Character alt3_f = outer(chars::alt3(v), chars::sym3(w), rs) +
                             outer(chars::schur21(v), chars::schur21(w), rs) +
                             outer(chars::sym3(v), chars::alt3(w), rs);

    CrossCheck x;
    x.characters_agree = chars::alt2(chi) == alt2_f && chars::sym2(chi) == sym2_f && chars::alt3(chi) == alt3_f;
    Counts d = count(chi, {lambda});
    x.a_direct = d.a;
    x.s_direct = d.s;
    x.l_direct = d.l;
    x.a_factored = multiplicity(alt2_f, lambda);
    x.s_factored = multiplicity(sym2_f, lambda);
    x.l_factored = multiplicity(alt3_f, Weight{});
    return x;
}

}  // namespace invconn::siiclass
