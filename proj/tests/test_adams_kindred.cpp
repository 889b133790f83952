#include "crosscap/adams_kindred.hpp"
#include "crosscap/error.hpp"
#include "crosscap/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>

using namespace crosscap;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFigureEight = "X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)";

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(MinMgon, Examples) {
    EXPECT_EQ(min_mgon(parse_pd("X(1,2,2,1)")).m, 1);
    const auto f8 = min_mgon(parse_pd(kFigureEight));
    EXPECT_EQ(f8.m, 2);
    EXPECT_GE(f8.faces.size(), 2u);
    for (const auto& f : f8.faces) EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(min_mgon(parse_pd("U(1)")).m, 0);
}

TEST(MinMgon, BigonFreeDiagramHasTriangles) {
    // One crossing per edge of K4: every face is a triangle.
    const auto d = ribbon_link(k4_graph(), std::vector<int>(6, 1));
    EXPECT_EQ(d.crossing_count(), 6);
    const auto mf = min_mgon(d);
    EXPECT_EQ(mf.m, 3);
    EXPECT_EQ(mf.faces.size(), 8u);
}

TEST(AKSearch, FigureEight) {
    const auto r = ak_search(parse_pd(kFigureEight));
    EXPECT_EQ(r.max_chi, -1);
    EXPECT_TRUE(r.nonorientable_at_max);
    EXPECT_TRUE(r.orientable_at_max);
    EXPECT_EQ(r.crosscap, 2);
    ASSERT_TRUE(r.nonorientable_witness.has_value());
    EXPECT_FALSE(is_orientable(parse_pd(kFigureEight), *r.nonorientable_witness));
}

TEST(AKSearch, Trefoil) {
    const auto r = ak_search(parse_pd(kTrefoil));
    EXPECT_EQ(r.max_chi, 0);
    EXPECT_TRUE(r.nonorientable_at_max);
    EXPECT_EQ(r.crosscap, 1);
}

TEST(AKSearch, TenThreeIsOrientableAtMax) {
    const auto d = oracle::census_diagram("10_3");
    const auto r = crosscap_alternating(d);
    EXPECT_FALSE(r.nonorientable_at_max);
    EXPECT_TRUE(r.orientable_at_max);
    ASSERT_TRUE(r.genus.has_value());
    EXPECT_EQ(*r.genus, 1);
    EXPECT_EQ(r.crosscap, 3);
    EXPECT_EQ(r.crosscap, twist_number(d) + 1);
    for (const auto& w : r.witness_states()) EXPECT_TRUE(is_orientable(d, w));
}

TEST(AKSearch, TenOneTwentyThree) {
    EXPECT_EQ(crosscap_alternating(oracle::census_diagram("10_123")).crosscap, 5);
}

TEST(AKSearch, Pretzels) {
    EXPECT_EQ(crosscap_alternating(pretzel({3, 3, 4})).crosscap, 2);
    EXPECT_EQ(crosscap_alternating(pretzel({3, 3, 3})).crosscap, 3);
}

TEST(AKSearch, WitnessesRealiseMaximum) {
    for (const auto& name : {"4_1", "6_2", "7_7", "8_12", "9_40", "L4a1"}) {
        const auto d = oracle::census_diagram(name);
        const auto r = ak_search(d);
        for (const auto& w : r.witness_states())
            EXPECT_EQ(state_circles(d, w) - d.crossing_count(), r.max_chi) << name;
    }
}

TEST(AKSearch, MatchesBruteForce) {
    int checked = 0;
    for (const auto& rec : oracle::census()) {
        const auto d = parse_pd(rec.pd);
        if (d.crossing_count() > 10 || !is_alternating(d) || !is_connected(d)) continue;
        const auto bf = oracle::brute_force_surfaces(d);
        const auto r = ak_search(d);
        EXPECT_EQ(r.max_chi, bf.max_chi) << rec.name;
        EXPECT_EQ(r.nonorientable_at_max, bf.nonorientable_at_max) << rec.name;
        EXPECT_EQ(r.orientable_at_max, bf.orientable_at_max) << rec.name;
        ++checked;
    }
    EXPECT_GE(checked, 100);
}

TEST(AKSearch, KnownCrosscaps) {
    for (const auto& rec : oracle::census()) {
        if (!rec.known_crosscap) continue;
        const auto d = parse_pd(rec.pd);
        if (!is_alternating(d) || !is_connected(d)) continue;
        EXPECT_EQ(crosscap_alternating(d).crosscap, *rec.known_crosscap) << rec.name;
    }
}

TEST(AKSearch, Deterministic) {
    const auto d = oracle::census_diagram("12a_1285");
    const auto a = ak_search(d);
    const auto b = ak_search(d);
    EXPECT_EQ(a.witness_states(), b.witness_states());
    EXPECT_EQ(a.stats.nodes, b.stats.nodes);
    EXPECT_EQ(a.crosscap, b.crosscap);
}

TEST(AKSearch, RelabelInvariant) {
    const auto d = oracle::census_diagram("9_40");
    EXPECT_EQ(ak_search(d).crosscap, ak_search(mirror(d)).crosscap);
}

TEST(AKSearch, Unknot) {
    const auto r = crosscap_alternating(parse_pd("U(1)"));
    EXPECT_EQ(r.max_chi, 1);
    EXPECT_FALSE(r.nonorientable_at_max);
}

TEST(AKSearch, Errors) {
    EXPECT_EQ(kind_of([] { (void)ak_search(oracle::census_diagram("8_19")); }), ErrorKind::NotAlternating);
    EXPECT_EQ(kind_of([] { (void)ak_search(parse_pd(std::string("U(1) ") + kTrefoil)); }), ErrorKind::NotConnected);
    SearchConfig tiny;
    tiny.node_budget = 3;
    EXPECT_EQ(kind_of([&] { (void)ak_search(pretzel({5, 5, 5, 5, 5}), tiny); }), ErrorKind::SearchBudgetExceeded);
}

TEST(SearchConfig, Environment) {
    ::setenv("CROSSCAP_BUDGET", "1234", 1);
    EXPECT_EQ(SearchConfig::from_environment().node_budget, 1234u);
    ::unsetenv("CROSSCAP_BUDGET");
    EXPECT_EQ(SearchConfig::from_environment().node_budget, kDefaultNodeBudget);
}
