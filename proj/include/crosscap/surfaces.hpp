#ifndef CROSSCAP_SURFACES_HPP
#define CROSSCAP_SURFACES_HPP

#include "crosscap/diagram.hpp"
#include "crosscap/state_kernels.hpp"

#include <string>
#include <vector>

namespace crosscap {

// One smoothing per crossing of a fixed diagram.
struct KauffmanState {
    std::vector<Smoothing> choices;

    static KauffmanState uniform(int crossings, Smoothing s) {
        return KauffmanState{std::vector<Smoothing>(static_cast<std::size_t>(crossings), s)};
    }
    static KauffmanState from_mask(int crossings, StateMask mask);
    StateMask mask() const;
    std::string to_string() const;  // e.g. "ABBA"

    friend bool operator==(const KauffmanState&, const KauffmanState&) = default;
    friend auto operator<=>(const KauffmanState&, const KauffmanState&) = default;
};

struct SurfaceSummary {
    int circles = 0;
    int chi = 0;
    bool orientable = false;
    int k = 0;
    int crosscap_of_surface = 0;  // 2 - chi - k
};

// Number of state circles, traced through the smoothed crossings.
int state_circles(const Diagram& d, const KauffmanState& state);

// The oriented smoothing for each orientation class, without duplicates.
std::vector<KauffmanState> seifert_states(const Diagram& d);

// Throws Disconnected.  A connected state surface is orientable exactly
// when its state is a Seifert state.
bool is_orientable(const Diagram& d, const KauffmanState& state);

SurfaceSummary surface_summary(const Diagram& d, const KauffmanState& state);

// Neither the all-A nor the all-B state has a band with both ends on one
// circle.
bool is_adequate(const Diagram& d);
bool is_state_adequate(const Diagram& d, Smoothing which);

}  // namespace crosscap

#endif  // CROSSCAP_SURFACES_HPP
