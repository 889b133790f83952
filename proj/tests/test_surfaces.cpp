#include "crosscap/error.hpp"
#include "crosscap/generators.hpp"
#include "crosscap/state_kernels.hpp"
#include "crosscap/surfaces.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace crosscap;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFigureEight = "X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)";
const char* kKink = "X(1,2,2,1)";

KauffmanState best_state(const Diagram& d) {
    const int c = d.crossing_count();
    KauffmanState best = KauffmanState::uniform(c, Smoothing::A);
    int most = 0;
    for (StateMask m = 0; m < (StateMask{1} << c); ++m) {
        const auto s = KauffmanState::from_mask(c, m);
        if (const int v = state_circles(d, s); v > most) {
            most = v;
            best = s;
        }
    }
    return best;
}

}  // namespace

TEST(KauffmanState, MaskRoundTrip) {
    const auto s = KauffmanState::from_mask(4, 0b0110);
    EXPECT_EQ(s.to_string(), "ABBA");
    EXPECT_EQ(s.mask(), 0b0110u);
    EXPECT_EQ(KauffmanState::uniform(3, Smoothing::B).to_string(), "BBB");
}

TEST(StateCircles, Trefoil) {
    const auto d = parse_pd(kTrefoil);
    EXPECT_EQ(state_circles(d, best_state(d)), 3);
    const auto seif = seifert_states(d);
    ASSERT_EQ(seif.size(), 1u);
    EXPECT_EQ(state_circles(d, seif.front()), 2);
}

TEST(StateCircles, FigureEightSeifert) {
    const auto d = parse_pd(kFigureEight);
    const auto seif = seifert_states(d);
    ASSERT_EQ(seif.size(), 1u);
    EXPECT_EQ(state_circles(d, seif.front()), 3);
}

TEST(StateCircles, UnknotComponentsCount) {
    const auto d = parse_pd("U(2) X(1,2,2,1)");
    EXPECT_EQ(state_circles(d, KauffmanState::uniform(1, Smoothing::A)), 3);
    EXPECT_EQ(state_circles(d, KauffmanState::uniform(1, Smoothing::B)), 4);
}

TEST(SeifertStates, Counts) {
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        const auto seif = seifert_states(d);
        const int k = components(d);
        if (k == 1) EXPECT_EQ(seif.size(), 1u) << r.name;
        EXPECT_LE(seif.size(), std::size_t{1} << (k - 1)) << r.name;
    }
    const auto hopf = seifert_states(parse_pd("X(1,3,2,4) X(3,1,4,2)"));
    EXPECT_GE(hopf.size(), 1u);
    EXPECT_LE(hopf.size(), 2u);
}

TEST(SeifertStates, KinkSeparatesTheLoop) {
    const auto d = parse_pd(kKink);
    const auto seif = seifert_states(d);
    ASSERT_EQ(seif.size(), 1u);
    EXPECT_EQ(state_circles(d, seif.front()), 2);
}

TEST(Orientability, Examples) {
    const auto t = parse_pd(kTrefoil);
    EXPECT_TRUE(is_orientable(t, seifert_states(t).front()));
    EXPECT_FALSE(is_orientable(t, best_state(t)));

    const auto k = parse_pd(kKink);
    for (auto s : {Smoothing::A, Smoothing::B}) {
        const auto st = KauffmanState::uniform(1, s);
        EXPECT_EQ(is_orientable(k, st), state_circles(k, st) == 2);
    }
}

TEST(Orientability, DisconnectedThrows) {
    const auto d = parse_pd(std::string("U(1) ") + kTrefoil);
    try {
        (void)is_orientable(d, KauffmanState::uniform(3, Smoothing::A));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
    }
}

TEST(Orientability, MatchesParityOracle) {
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        const int c = d.crossing_count();
        if (c > 9) continue;
        int orientable = 0;
        for (StateMask m = 0; m < (StateMask{1} << c); ++m) {
            const auto s = KauffmanState::from_mask(c, m);
            const bool o = is_orientable(d, s);
            ASSERT_EQ(o, oracle::parity_orientable(d, s)) << r.name << ' ' << s.to_string();
            orientable += o;
        }
        EXPECT_EQ(static_cast<std::size_t>(orientable), seifert_states(d).size()) << r.name;
    }
}

TEST(SurfaceSummary, TrefoilMobius) {
    const auto d = parse_pd(kTrefoil);
    const auto s = surface_summary(d, best_state(d));
    EXPECT_EQ(s.circles, 3);
    EXPECT_EQ(s.chi, 0);
    EXPECT_FALSE(s.orientable);
    EXPECT_EQ(s.k, 1);
    EXPECT_EQ(s.crosscap_of_surface, 1);
}

TEST(SurfaceSummary, FigureEight) {
    const auto d = parse_pd(kFigureEight);
    const auto seif = surface_summary(d, seifert_states(d).front());
    EXPECT_EQ(seif.circles, 3);
    EXPECT_EQ(seif.chi, -1);
    EXPECT_TRUE(seif.orientable);

    // Best non-orientable state.
    int best_chi = -100;
    for (StateMask m = 0; m < 16; ++m) {
        const auto st = KauffmanState::from_mask(4, m);
        const auto s = surface_summary(d, st);
        if (!s.orientable) best_chi = std::max(best_chi, s.chi);
    }
    EXPECT_EQ(best_chi, -1);
    EXPECT_EQ(2 - best_chi - 1, 2);
}

TEST(SurfaceSummary, ChiRange) {
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        const int c = d.crossing_count();
        for (auto s : {Smoothing::A, Smoothing::B}) {
            const auto sum = surface_summary(d, KauffmanState::uniform(c, s));
            EXPECT_GE(sum.chi, 1 - c) << r.name;
            EXPECT_LE(sum.chi, 1) << r.name;
        }
    }
}

TEST(Adequacy, Examples) {
    EXPECT_FALSE(is_adequate(parse_pd(kKink)));
    EXPECT_TRUE(is_adequate(pretzel({3, 3, 3})));
    int checked = 0;
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        if (!is_alternating(d) || has_nugatory_crossing(d)) continue;
        EXPECT_TRUE(is_adequate(d)) << r.name;
        ++checked;
    }
    EXPECT_GT(checked, 0);
}

TEST(Adequacy, NonAlternatingCanFail) {
    EXPECT_FALSE(is_adequate(add_kink(parse_pd(kTrefoil), 1, KinkSign::Positive)));
}
