#include <gtest/gtest.h>

#include "invconn/error.hpp"
#include "invconn/rootsys.hpp"
#include "oracles.hpp"

using namespace invconn;
using namespace invconn::rootsys;

namespace {

RootSystemPtr rs_of(const std::string& factors) { return build_root_system(parse_factors(factors)); }

oracle::Labels labels(const RootSystem& rs, const Weight& w) {
    oracle::Labels l(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) l[i] = w[i];
    return l;
}

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};

}  // namespace

TEST(RootSystem, CartanMatchesEuclideanRoots) {
    for (auto& t : {"A1", "A4", "B3", "C4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
        auto rs = rs_of(t);
        auto c = oracle::cartan(t[0], rs->rank());
        for (int i = 0; i < rs->rank(); ++i)
            for (int j = 0; j < rs->rank(); ++j) EXPECT_EQ(rs->cartan(i, j), c[i][j]) << t << " " << i << "," << j;
    }
}

TEST(RootSystem, BasicExamples) {
    auto a1 = rs_of("A1");
    EXPECT_EQ(a1->positive_roots().size(), 1u);
    EXPECT_EQ(a1->rho()[0], 1);

    auto g2 = rs_of("G2");
    EXPECT_EQ(g2->positive_roots().size(), 6u);
    EXPECT_EQ(g2->dimension(), 14);

    auto p = rs_of("A1xA2");
    EXPECT_EQ(p->positive_roots().size(), 4u);
    EXPECT_EQ(p->rank(), 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((i == 0) != (j == 0)) EXPECT_EQ(p->cartan(i, j), 0);
    auto a2 = rs_of("A2");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(p->cartan(i + 1, j + 1), a2->cartan(i, j));
    EXPECT_EQ(p->dimension(), 3 + 8);
}

TEST(RootSystem, MakeTypeRejectsInvalid) {
    EXPECT_THROW(make_type('E', 5), ConfigError);
    EXPECT_THROW(make_type('B', 1), ConfigError);
    EXPECT_THROW(make_type('D', 2), ConfigError);
    EXPECT_THROW(make_type('G', 3), ConfigError);
    EXPECT_THROW(make_type('X', 2), ConfigError);
    EXPECT_THROW(parse_type("Q7"), ConfigError);
    EXPECT_NO_THROW(make_type('C', 2));
}

TEST(RootSystem, WeylOrderAgainstEnumeration) {
    for (auto& t : kSmallTypes) {
        auto rs = rs_of(t);
        auto c = oracle::cartan(t[0], rs->rank());
        const size_t enumerated = oracle::orbit_depth(c, oracle::rho(rs->rank())).size();
        EXPECT_EQ(static_cast<size_t>(rs->weyl_order()), enumerated) << t;
    }
    EXPECT_EQ(rs_of("F4")->weyl_order(), 1152.0);
    EXPECT_EQ(rs_of("E6")->weyl_order(), 51840.0);
    EXPECT_EQ(rs_of("E7")->weyl_order(), 2903040.0);
    EXPECT_EQ(rs_of("E8")->weyl_order(), 696729600.0);
    EXPECT_EQ(rs_of("A2xG2")->weyl_order(), 6.0 * 12.0);
}

TEST(RootSystem, OrbitsAgainstEnumeration) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> lab(0, 2);
    for (auto& t : kSmallTypes) {
        auto rs = rs_of(t);
        auto c = oracle::cartan(t[0], rs->rank());
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> l(rs->rank());
            for (auto& x : l) x = lab(rng);
            const Weight w = rs->make_weight(l);
            auto ref = oracle::orbit_depth(c, l);
            auto got = orbit(*rs, w);
            EXPECT_EQ(got.size(), ref.size()) << t;
            EXPECT_EQ(static_cast<size_t>(rs->orbit_size(w)), ref.size()) << t;
            for (auto& v : got) EXPECT_TRUE(ref.count(labels(*rs, v))) << t;
        }
    }
}

TEST(RootSystem, ToDominantSignAgainstEnumeration) {
    // Regular weights: the sign is the parity of the unique Weyl element.
    for (auto& t : kSmallTypes) {
        auto rs = rs_of(t);
        auto c = oracle::cartan(t[0], rs->rank());
        const oracle::Labels start = oracle::add(oracle::rho(rs->rank()), oracle::Labels(rs->rank(), 1));
        for (auto& [v, depth] : oracle::orbit_depth(c, start)) {
            const Dominant d = to_dominant(*rs, rs->make_weight(v));
            EXPECT_EQ(labels(*rs, d.weight), start) << t;
            EXPECT_EQ(d.sign, depth % 2 ? -1 : 1) << t;
        }
    }
}

TEST(RootSystem, ToDominantExamples) {
    auto a1 = rs_of("A1");
    auto d = to_dominant(*a1, a1->make_weight({-3}));
    EXPECT_EQ(d.weight[0], 3);
    EXPECT_EQ(d.sign, -1);
    EXPECT_EQ(to_dominant(*a1, a1->make_weight({0}), true).sign, 0);

    auto a2 = rs_of("A2");
    d = to_dominant(*a2, a2->make_weight({-1, 2}));
    EXPECT_TRUE(a2->is_dominant(d.weight));
    EXPECT_EQ(d.sign, -1);
    EXPECT_EQ(a2->format(d.weight), "(1,1)");
}

TEST(RootSystem, WeylDimensionExamples) {
    EXPECT_EQ(weyl_dimension(*rs_of("A2"), rs_of("A2")->make_weight({1, 1})), 8);
    EXPECT_EQ(weyl_dimension(*rs_of("A1"), rs_of("A1")->make_weight({0})), 1);
    auto a4 = rs_of("A4");
    EXPECT_EQ(weyl_dimension(*a4, a4->make_weight({0, 1, 1, 0})), 99 - 24);
    EXPECT_THROW(weyl_dimension(*a4, a4->make_weight({0, -1, 1, 0})), PreconditionError);
}

TEST(RootSystem, AdjointDimensions) {
    for (auto& t : {"A1", "A5", "B4", "C3", "D6", "G2", "F4", "E6", "E7", "E8"}) {
        auto rs = rs_of(t);
        EXPECT_EQ(weyl_dimension(*rs, rs->highest_root(0)), rs->dimension()) << t;
    }
}

TEST(RootSystem, FundamentalDimensions) {
    const std::map<std::string, std::vector<const char*>> table = {
        {"G2", {"7", "14"}},
        {"F4", {"52", "1274", "273", "26"}},
        {"E6", {"27", "78", "351", "2925", "351", "27"}},
        {"E7", {"133", "912", "8645", "365750", "27664", "1539", "56"}},
        {"E8", {"3875", "147250", "6696000", "6899079264", "146325270", "2450240", "30380", "248"}},
    };
    for (auto& [t, dims] : table) {
        auto rs = rs_of(t);
        for (int i = 0; i < rs->rank(); ++i) {
            std::vector<int> l(rs->rank(), 0);
            l[i] = 1;
            EXPECT_EQ(weyl_dimension(*rs, rs->make_weight(l)), boost::multiprecision::cpp_int(dims[i])) << t << " w" << i + 1;
        }
    }
}

TEST(RootSystem, DualWeight) {
    auto a2 = rs_of("A2");
    EXPECT_EQ(a2->format(dual_weight(*a2, a2->make_weight({3, 0}))), "(0,3)");
    auto g2 = rs_of("G2");
    EXPECT_EQ(g2->format(dual_weight(*g2, g2->make_weight({1, 0}))), "(1,0)");
    auto a3 = rs_of("A3");
    EXPECT_EQ(a3->format(dual_weight(*a3, a3->make_weight({1, 0, 0}))), "(0,0,1)");
    auto d5 = rs_of("D5");
    EXPECT_EQ(d5->format(dual_weight(*d5, d5->make_weight({0, 0, 0, 1, 0}))), "(0,0,0,0,1)");
    auto e6 = rs_of("E6");
    EXPECT_EQ(e6->format(dual_weight(*e6, e6->make_weight({1, 0, 0, 0, 0, 0}))), "(0,0,0,0,0,1)");

    // Lowest weight of the orbit, negated, is the dual highest weight.
    for (auto& t : kSmallTypes) {
        auto rs = rs_of(t);
        auto c = oracle::cartan(t[0], rs->rank());
        std::vector<int> l(rs->rank(), 0);
        l[0] = 2;
        if (rs->rank() > 1) l[rs->rank() - 1] = 1;
        const Weight w = rs->make_weight(l);
        Weight lowest{};
        int64_t best = INT64_MAX;
        for (auto& [v, depth] : oracle::orbit_depth(c, l)) {
            const Weight u = rs->make_weight(v);
            if (rs->height(u) < best) best = rs->height(u), lowest = u;
        }
        EXPECT_EQ(dual_weight(*rs, w), -lowest) << t;
        EXPECT_EQ(dual_weight(*rs, dual_weight(*rs, w)), w) << t;
    }
}

TEST(RootSystem, ReflectionIsInvolution) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> lab(-3, 3);
    for (auto& t : {"A3", "B3", "G2", "F4", "E6"}) {
        auto rs = rs_of(t);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> l(rs->rank());
            for (auto& x : l) x = lab(rng);
            const Weight w = rs->make_weight(l);
            for (int i = 0; i < rs->rank(); ++i) {
                EXPECT_EQ(rs->reflect(i, rs->reflect(i, w)), w);
                EXPECT_EQ(rs->pairing_scaled(rs->reflect(i, w), rs->reflect(i, w)), rs->pairing_scaled(w, w));
            }
        }
    }
}

TEST(RootSystem, HeightIncreasesAlongPositiveRoots) {
    for (auto& t : {"A3", "B3", "G2", "F4", "A1xC3"}) {
        auto rs = rs_of(t);
        for (auto& a : rs->positive_roots()) EXPECT_GT(rs->height(a), 0) << t;
    }
}

TEST(RootSystem, ParseWeight) {
    auto a2 = rs_of("A2");
    EXPECT_EQ(a2->format(a2->parse_weight("2,1")), "(2,1)");
    EXPECT_THROW(a2->parse_weight("1,2,3"), ConfigError);
    EXPECT_THROW(a2->parse_weight("x,1"), ConfigError);
}
