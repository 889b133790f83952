#ifndef CROSSCAP_JONES_HPP
#define CROSSCAP_JONES_HPP

#include "crosscap/diagram.hpp"
#include "crosscap/laurent.hpp"

#include <optional>

namespace crosscap {

inline constexpr int kDefaultBracketCap = 20;

// Kauffman bracket by sweeping crossings in a frontier-minimising order and
// memoising on the pairing of open arc ends.  Conventions: <O> = 1,
// <X> = A<A-smoothing> + A^-1<B-smoothing>, each extra circle contributes
// delta = -A^2 - A^-2.  Throws TooLarge when c > cap.
LaurentPoly bracket(const Diagram& d, int cap = kDefaultBracketCap);

struct JonesData {
    LaurentPoly bracket_A{Variable::A};
    LaurentPoly jones_A{Variable::A};
    std::optional<LaurentPoly> jones_t;  // present iff every A-exponent is divisible by 4
    int T = 0;
    // All exponents of jones_A lie in one class mod 4, so the t-span is integral.
    int span_t = 0;
    int writhe = 0;
};

JonesData jones(const Diagram& d, const Orientation& orientation, int cap = kDefaultBracketCap);
JonesData jones(const Diagram& d, int cap = kDefaultBracketCap);

// |second coefficient| + |penultimate coefficient|, read on the A-lattice
// with step 4.  Zero when there are fewer than two lattice points.
int t_k(const JonesData& j);
int t_k(const LaurentPoly& jones_A);

// First Betti number of the reduced all-A (or all-B) state graph.  Throws
// NotAdequate when some crossing joins a state circle to itself.
int beta_from_state_graph(const Diagram& d, Smoothing which);

}  // namespace crosscap

#endif  // CROSSCAP_JONES_HPP
