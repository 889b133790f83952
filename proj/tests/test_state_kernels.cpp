#include "crosscap/error.hpp"
#include "crosscap/state_kernels.hpp"
#include "crosscap/surfaces.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace crosscap;

TEST(StateKernels, CounterMatchesTracing) {
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        if (d.crossing_count() > 8) continue;
        const StateCircleCounter counter(d);
        for (StateMask s = 0; s < (StateMask{1} << d.crossing_count()); ++s)
            ASSERT_EQ(counter.count(s), state_circles(d, KauffmanState::from_mask(d.crossing_count(), s))) << r.name;
    }
}

TEST(StateKernels, SerialAndParallelSpectraAgree) {
    for (const auto& r : oracle::census()) {
        const auto d = parse_pd(r.pd);
        if (d.crossing_count() > 12) continue;
        EXPECT_EQ(state_spectrum(d, Execution::Serial), state_spectrum(d, Execution::Parallel)) << r.name;
    }
}

TEST(StateKernels, SpectrumCountsEveryState) {
    const auto d = oracle::census_diagram("7_4");
    const auto s = state_spectrum(d, Execution::Parallel);
    std::uint64_t total = 0;
    for (const auto& row : s.counts)
        for (auto n : row) total += n;
    EXPECT_EQ(total, std::uint64_t{1} << 7);
}

TEST(StateKernels, MaxScanSerialAndParallelAgree) {
    for (const auto& name : {"4_1", "8_19", "10_123", "L6a4", "12a_1285"}) {
        const auto d = oracle::census_diagram(name);
        const auto seif = seifert_states(d);
        std::vector<StateMask> excluded;
        for (const auto& s : seif) excluded.push_back(s.mask());
        EXPECT_EQ(scan_max_states(d, excluded, Execution::Serial), scan_max_states(d, excluded, Execution::Parallel)) << name;
    }
}

TEST(StateKernels, TooLarge) {
    std::string pd;
    // Chain of kinks far beyond the exhaustive cap.
    Diagram d = parse_pd("X(1,2,2,1)");
    for (int i = 0; i < kExhaustiveCap; ++i) d = add_kink(d, 1, KinkSign::Positive);
    try {
        (void)state_spectrum(d, Execution::Serial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}
