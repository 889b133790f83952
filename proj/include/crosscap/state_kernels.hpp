#ifndef CROSSCAP_STATE_KERNELS_HPP
#define CROSSCAP_STATE_KERNELS_HPP

// Exhaustive loops over all 2^c Kauffman states of a diagram.  Each kernel
// has a serial reference and an OpenMP version that must agree exactly.

#include "crosscap/diagram.hpp"
#include "crosscap/laurent.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace crosscap {

enum class Execution { Serial, Parallel };

// Bit x set means crossing x takes the B smoothing.
using StateMask = std::uint64_t;

inline constexpr int kExhaustiveCap = 26;

// Counts circles of a full state by union-find over arc labels.
class StateCircleCounter {
public:
    explicit StateCircleCounter(const Diagram& d);

    int crossings() const noexcept { return static_cast<int>(pairs_.size()); }
    int count(StateMask state) const noexcept;

private:
    // Per crossing: label pairs joined by A (index 0) and B (index 1).
    struct Joins {
        std::uint8_t a0, a1, a2, a3;
        std::uint8_t b0, b1, b2, b3;
    };
    std::vector<Joins> pairs_;
    int labels_ = 0;
    int unknots_ = 0;
};

// counts[a][v] = number of states with `a` A-smoothings and v circles.
struct StateSpectrum {
    int crossings = 0;
    std::vector<std::vector<std::uint64_t>> counts;

    friend bool operator==(const StateSpectrum&, const StateSpectrum&) = default;
};

// Throws TooLarge beyond kExhaustiveCap crossings.
StateSpectrum state_spectrum(const Diagram& d, Execution exec);

// <D> = sum over states of A^(a-b) (-A^2-A^-2)^(v-1).
LaurentPoly bracket_from_spectrum(const StateSpectrum& s);

LaurentPoly bracket_exhaustive(const Diagram& d, Execution exec);

struct MaxStateScan {
    int max_circles = 0;
    std::uint64_t states_at_max = 0;
    // Some state at the maximum is not in the supplied exclusion list.
    bool other_state_at_max = false;
    StateMask first_at_max = 0;

    friend bool operator==(const MaxStateScan&, const MaxStateScan&) = default;
};

MaxStateScan scan_max_states(const Diagram& d, std::span<const StateMask> excluded, Execution exec);

}  // namespace crosscap

#endif  // CROSSCAP_STATE_KERNELS_HPP
