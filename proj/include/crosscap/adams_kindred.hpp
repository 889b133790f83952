#ifndef CROSSCAP_ADAMS_KINDRED_HPP
#define CROSSCAP_ADAMS_KINDRED_HPP

#include "crosscap/diagram.hpp"
#include "crosscap/surfaces.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crosscap {

inline constexpr std::uint64_t kDefaultNodeBudget = 4'000'000;

struct MinFaces {
    int m = 0;
    std::vector<Face> faces;  // every face of size m
};

// Smallest face size over every piece of the diagram.  c == 0 gives m = 0.
MinFaces min_mgon(const Diagram& d);

struct BranchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t monogon_steps = 0;
    std::uint64_t bigon_branches = 0;
    std::uint64_t triangle_branches = 0;
};

struct AKResult {
    int crossings = 0;
    int k = 0;
    int max_circles = 0;
    int max_chi = 0;
    bool nonorientable_at_max = false;
    bool orientable_at_max = false;
    std::optional<KauffmanState> orientable_witness;
    std::optional<KauffmanState> nonorientable_witness;
    int crosscap = 0;
    std::optional<int> genus;  // set when every maximal surface is orientable
    BranchStats stats;

    std::vector<KauffmanState> witness_states() const;
};

struct SearchConfig {
    std::uint64_t node_budget = kDefaultNodeBudget;

    // Reads CROSSCAP_BUDGET when set.
    static SearchConfig from_environment();
};

// Max-Euler-characteristic state surface of a connected alternating diagram,
// found by resolving monogons, then bigon chains, then triangles.  Throws
// NotConnected, NotAlternating or SearchBudgetExceeded.
AKResult ak_search(const Diagram& d, const SearchConfig& config = {});

// ak_search plus the crosscap formula; k is taken from the diagram.
AKResult crosscap_alternating(const Diagram& d, const SearchConfig& config = {});

}  // namespace crosscap

#endif  // CROSSCAP_ADAMS_KINDRED_HPP
