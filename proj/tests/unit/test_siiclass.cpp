#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

using namespace invconn;
using namespace invconn::siiclass;
using rootsys::build_root_system;
using rootsys::parse_factors;

namespace {

const IsotropyDatum& row(const std::string& id) {
    static std::map<std::string, IsotropyDatum> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, select(default_catalog(), id).at(0)).first;
    return it->second;
}

SIIReport run(const IsotropyDatum& d) { return classify(d).at(0); }

void expect_counts(const SIIReport& r, int a, int s, int N, int l, int eps) {
    EXPECT_EQ(r.a, a) << r.id;
    EXPECT_EQ(r.s, s) << r.id;
    EXPECT_EQ(r.N, N) << r.id;
    EXPECT_EQ(r.l, l) << r.id;
    EXPECT_EQ(r.epsilon, eps) << r.id;
}

bool same_expected(const std::optional<Expected>& x, const std::optional<Expected>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->a == y->a && x->s == y->s && x->N == y->N && x->l == y->l && x->type == y->type;
}

}  // namespace

TEST(Catalog, RowsValidate) {
    const auto& cat = default_catalog();
    EXPECT_EQ(cat.size(), 54u);
    std::set<std::string> ids;
    for (auto& r : cat) {
        EXPECT_NO_THROW(r.validate()) << r.id;
        EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
        EXPECT_TRUE(r.source == "table4" || r.source == "table5") << r.id;
        EXPECT_EQ(r.isotropy_dimension(), r.ambient_dimension() - r.subgroup_dimension()) << r.id;
    }
}

TEST(Catalog, Dimensions) {
    EXPECT_EQ(row("SO14/G2").isotropy_dimension(), 77);
    EXPECT_EQ(row("SO7/G2").isotropy_dimension(), 7);
    EXPECT_EQ(row("G2/SU3").isotropy_dimension(), 6);
    EXPECT_EQ(row("SU10/SU5").isotropy_dimension(), 75);
    EXPECT_EQ(algebra_dimension(rootsys::make_type('E', 8)), 248);
}

TEST(Catalog, FamilyRowsMatchGenerators) {
    for (auto& r : default_catalog()) {
        if (r.family.empty()) continue;
        const IsotropyDatum g = instantiate_family(r.family, r.params);
        EXPECT_EQ(g.id, r.id);
        EXPECT_EQ(g.ambient, r.ambient) << r.id;
        EXPECT_EQ(g.factors, r.factors) << r.id;
        EXPECT_EQ(g.constituents, r.constituents) << r.id;
        EXPECT_TRUE(same_expected(g.expected, r.expected)) << r.id;
    }
}

TEST(Catalog, FamilyExtension) {
    const IsotropyDatum d = instantiate_family("SU_pq", {{"p", 3}, {"q", 4}});
    EXPECT_EQ(d.id, "SU12/SU3xSU4");
    EXPECT_NO_THROW(d.validate());
    const IsotropyDatum e = instantiate_family("SO_adSU", {{"n", 5}});
    EXPECT_NO_THROW(e.validate());
    EXPECT_EQ(e.isotropy_dimension(), algebra_dimension(e.ambient) - 24);
}

TEST(Catalog, RangeErrors) {
    EXPECT_THROW(instantiate_family("SU_Lambda2", {{"n", 4}}), RangeError);
    EXPECT_THROW(instantiate_family("SU_pq", {{"p", 1}, {"q", 5}}), RangeError);
    EXPECT_THROW(instantiate_family("SO_Lambda2SO", {{"n", 6}}), RangeError);
    EXPECT_THROW(instantiate_family("SU_Sym2", {}), ConfigError);
    EXPECT_THROW(instantiate_family("nope", {{"n", 3}}), ConfigError);
}

TEST(Catalog, Select) {
    const auto& cat = default_catalog();
    EXPECT_EQ(select(cat, "all").size(), cat.size());
    const auto t4 = select(cat, "table4"), t5 = select(cat, "exceptions");
    EXPECT_EQ(t4.size() + t5.size(), cat.size());
    EXPECT_EQ(select(cat, "classical").size(), t4.size());
    for (auto& r : t5) EXPECT_EQ(r.source, "table5");
    EXPECT_EQ(select(cat, "g2/su3").at(0).id, "G2/SU3");
    EXPECT_EQ(select(cat, "F4/(G2 x SU2)").at(0).id, "F4/G2xSU2");
    EXPECT_EQ(select(cat, "SU_pq", {{"p", 3}, {"q", 3}}).at(0).id, "SU9/SU3xSU3");
    EXPECT_GE(select(cat, "SU_pq").size(), 2u);
    EXPECT_THROW(select(cat, "nope"), ConfigError);
}

TEST(Catalog, JsonRoundTrip) {
    const auto& cat = default_catalog();
    const auto back = parse_catalog(dump_catalog(cat));
    ASSERT_EQ(back.size(), cat.size());
    for (size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(back[i].id, cat[i].id);
        EXPECT_EQ(back[i].constituents, cat[i].constituents);
        EXPECT_EQ(back[i].candidates, cat[i].candidates);
        EXPECT_TRUE(same_expected(back[i].expected, cat[i].expected));
    }
    EXPECT_THROW(parse_catalog("{"), DataError);
}

TEST(Catalog, ExampleRows) {
    const IsotropyDatum& g = row("G2/SU3");
    EXPECT_EQ(g.constituents.size(), 2u);
    EXPECT_EQ(g.expected->type, RepType::Complex);
    const IsotropyDatum& s = row("SO10/Sp2");
    EXPECT_EQ(s.constituents, (std::vector<Constituent>{{{2, 1}}}));
    const IsotropyDatum& p = row("SU6/SU2xSU3");
    EXPECT_EQ(p.constituents, (std::vector<Constituent>{{{2}, {1, 1}}}));
}

TEST(Budget, Parse) {
    EXPECT_EQ(Budget::parse("default").max_weyl_order, 1e6);
    EXPECT_TRUE(Budget::parse("unlimited").unlimited);
    const Budget b = Budget::parse("1e3:200");
    EXPECT_EQ(b.max_weyl_order, 1e3);
    EXPECT_EQ(b.max_support, 200);
    EXPECT_THROW(Budget::parse("x"), ConfigError);
    EXPECT_THROW(Budget::parse("-1"), ConfigError);
}

TEST(Classify, DualityType) {
    auto g2 = build_root_system(parse_factors("G2"));
    EXPECT_EQ(duality_type(g2, {g2->make_weight({1, 0})}), RepType::Real);
    auto a2 = build_root_system(parse_factors("A2"));
    EXPECT_EQ(duality_type(a2, {a2->make_weight({3, 0}), a2->make_weight({0, 3})}), RepType::Complex);
    auto a8 = build_root_system(parse_factors("A8"));
    EXPECT_EQ(duality_type(a8, {a8->make_weight({0, 0, 1, 0, 0, 0, 0, 0}), a8->make_weight({0, 0, 0, 0, 0, 1, 0, 0})}),
              RepType::Complex);
    EXPECT_THROW(duality_type(a2, {a2->make_weight({1, 0})}), DataError);
    EXPECT_THROW(duality_type(a2, {a2->make_weight({1, 1}), a2->make_weight({1, 1})}), DataError);
}

TEST(Classify, Examples) {
    expect_counts(run(row("G2/SU3")), 2, 0, 2, 2, 0);
    expect_counts(run(row("SO14/Sp3")), 1, 0, 1, 1, 0);
    expect_counts(run(row("SO14/SO5")), 3, 1, 4, 2, 1);
    EXPECT_EQ(run(row("G2/SU3")).status, Status::Match);
    EXPECT_EQ(run(row("G2/SU3")).rep_type, RepType::Complex);
}

TEST(Classify, Invariants) {
    for (auto& id : {"SU10/SU5", "SO8/SU3", "SO21/SO7", "Sp3/SO3xSp1", "G2/SO3", "SO7/G2", "E6/G2", "SO16/Spin9"}) {
        const SIIReport r = run(row(id));
        EXPECT_GE(r.a, 1) << id;
        EXPECT_LE(1, r.l) << id;
        EXPECT_LE(r.l, r.a) << id;
        EXPECT_LE(r.a, r.N) << id;
        EXPECT_EQ(r.epsilon, r.a - r.l) << id;
        EXPECT_EQ(r.N, r.a + r.s) << id;
        EXPECT_TRUE(r.notes.empty()) << id;
        if (r.rep_type == RepType::Complex) {
            EXPECT_EQ(r.a % 2, 0) << id;
            EXPECT_EQ(r.s % 2, 0) << id;
            EXPECT_EQ(r.l % 2, 0) << id;
        }
    }
}

TEST(Classify, EpsilonIsTrivialInSchur21) {
    for (auto& id : {"SO14/SO5", "SO10/Sp2", "G2/SO3"}) {
        const IsotropyDatum& d = row(id);
        auto rs = d.root_system();
        Character chi(rs);
        for (auto& c : d.constituents) chi += chars::irrep_character(rs, d.weight(*rs, c));
        const SIIReport r = run(d);
        EXPECT_EQ(chars::multiplicity(chars::schur21(chi), Weight{}), r.epsilon)
            << id;
    }
}

TEST(Classify, SkippedRows) {
    for (auto& id : {"SO248/E8", "SO128/Spin16"}) {
        const auto reports = classify(row(id));
        ASSERT_EQ(reports.size(), 1u);
        EXPECT_EQ(reports[0].status, Status::Skipped) << id;
        EXPECT_FALSE(reports[0].feasibility.feasible);
        EXPECT_GT(reports[0].feasibility.cost_estimate, 0);
        EXPECT_EQ(std::string(status_name(reports[0].status)), "skipped: infeasible");
    }
    EXPECT_TRUE(assess(row("G2/SU3"), Budget{}).feasible);
    EXPECT_FALSE(assess(row("G2/SU3"), Budget::parse("1:1")).feasible);
}

TEST(Classify, AmbiguousRowRunsBothCandidates) {
    const auto reports = classify(row("Sp16/Spin12"));
    ASSERT_EQ(reports.size(), 2u);
    for (auto& r : reports) EXPECT_EQ(r.status, Status::Match);
    EXPECT_EQ(reports[0].candidate, 0);
    EXPECT_EQ(reports[1].candidate, 1);
}

TEST(Classify, ExplicitDataWithoutExpectation) {
    IsotropyDatum d = row("SO7/G2");
    d.expected.reset();
    const SIIReport r = run(d);
    EXPECT_EQ(r.status, Status::Computed);
    EXPECT_EQ(r.a, 1);
}

TEST(Classify, Reducible) {
    for (int n : {3, 4, 5}) {
        auto rs = build_root_system({rootsys::make_type('A', n - 1)});
        const SIIReport u = classify_reducible(chars::trivial_character(rs) + chars::adjoint_character(rs));
        EXPECT_EQ(u.N, 6);
        EXPECT_EQ(u.a, 2);
        EXPECT_EQ(u.l, 1);
        EXPECT_EQ(u.epsilon, 1);
    }
    auto a2 = build_root_system(parse_factors("A2"));
    const SIIReport su = classify_reducible(chars::adjoint_character(a2));
    EXPECT_EQ(su.N, 2);
    EXPECT_EQ(su.a, 1);
    EXPECT_EQ(su.l, 1);
    EXPECT_EQ(su.epsilon, 0);
    const SIIReport triv = classify_reducible(chars::trivial_character(a2));
    EXPECT_EQ(triv.N, 1);
    EXPECT_EQ(triv.a, 0);
    EXPECT_EQ(triv.l, 0);
    EXPECT_THROW(classify_reducible(2 * chars::adjoint_character(a2)), PreconditionError);
}

TEST(Classify, IsotropyFromEmbedding) {
    auto g2 = build_root_system(parse_factors("G2"));
    const Character m = isotropy_from_embedding(Host::Orthogonal, chars::irrep_character(g2, g2->make_weight({1, 0})));
    EXPECT_TRUE(m == chars::irrep_character(g2, g2->make_weight({1, 0})));

    auto p = build_root_system(parse_factors("A1xA1"));
    const Character pi = chars::irrep_character(p, p->make_weight({2, 1}));
    EXPECT_EQ(pi.dimension(), 6);
    const Character ms = isotropy_from_embedding(Host::Symplectic, pi);
    EXPECT_TRUE(ms == chars::irrep_character(p, p->make_weight({4, 2})));

    auto a3 = build_root_system(parse_factors("A3"));
    const Character std4 = chars::irrep_character(a3, a3->make_weight({1, 0, 0}));
    const Character mu = isotropy_from_embedding(Host::Unitary, std4);
    EXPECT_EQ(mu.support(), 0u);
    // The adjoint embedding gives SU(n^2-1)/SU(n) with m = pi (x) pi* - 1 - ad.
    const Character adj = chars::adjoint_character(a3);
    EXPECT_EQ(isotropy_from_embedding(Host::Orthogonal, adj).dimension(), 105 - 15);
}

TEST(Classify, ExternalCrossCheck) {
    for (auto& id : {"SU6/SU2xSU3", "SU9/SU3xSU3", "Sp3/SO3xSp1", "Sp4/SO4xSp1"}) {
        const CrossCheck c = external_cross_check(row(id));
        EXPECT_TRUE(c.ok()) << id;
        EXPECT_EQ(c.a_direct, run(row(id)).a) << id;
    }
    const CrossCheck c = external_cross_check(row("SU6/SU2xSU3"));
    EXPECT_EQ(c.a_factored, 1);
    EXPECT_EQ(c.s_factored, 1);
    EXPECT_EQ(c.l_factored, 1);
    EXPECT_THROW(external_cross_check(row("G2/SU3")), PreconditionError);
}

TEST(Report, TablesAreDeterministic) {
    std::vector<SIIReport> reps;
    for (auto& id : {"SO7/G2", "G2/SU3", "SO248/E8"})
        for (auto& r : classify(row(id))) reps.push_back(r);
    for (auto f : {Format::Markdown, Format::Json, Format::Csv}) EXPECT_EQ(emit_tables(reps, f), emit_tables(reps, f));

    const auto j = nlohmann::json::parse(emit_tables(reps, Format::Json));
    ASSERT_EQ(j["reports"].size(), 3u);
    EXPECT_EQ(j["reports"][0]["id"], "SO7/G2");
    for (auto& key : {"id", "dims", "computed", "expected", "status", "elapsed_ms"})
        EXPECT_TRUE(j["reports"][0].contains(key)) << key;
    EXPECT_EQ(j["reports"][0]["dims"]["m"], 7);
    EXPECT_EQ(j["reports"][0]["computed"]["epsilon"], 0);
    EXPECT_TRUE(j["reports"][0]["elapsed_ms"].is_null());
    EXPECT_EQ(j["reports"][2]["status"], "skipped: infeasible");
    EXPECT_TRUE(j["reports"][2]["computed"].is_null());
    EXPECT_EQ(summary_line(reps), "matched 2 / skipped 1 / mismatched 0");
    EXPECT_EQ(parse_format("markdown"), Format::Markdown);
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Report, InjectedMismatch) {
    IsotropyDatum bad = row("SO7/G2");
    bad.expected->s = 5;
    bad.expected->N = 6;
    std::vector<SIIReport> reps = {run(row("G2/SO3")), run(bad)};
    EXPECT_EQ(reps[0].status, Status::Match);
    EXPECT_EQ(reps[1].status, Status::Mismatch);
    EXPECT_EQ(summary_line(reps), "matched 1 / skipped 0 / mismatched 1");
    const std::string md = emit_tables(reps, Format::Markdown);
    EXPECT_NE(md.find("mismatch"), std::string::npos);
}
