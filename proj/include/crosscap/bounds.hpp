#ifndef CROSSCAP_BOUNDS_HPP
#define CROSSCAP_BOUNDS_HPP

#include "crosscap/diagram.hpp"

#include <string>
#include <vector>

namespace crosscap {

enum class BoundSource {
    JonesLink,      // ceil(T/3) + 2 - k .. T + 2 - k
    JonesKnot,      // ceil(T/3) + 1 .. min(T + 1, span/2)
    Twist,          // ceil(t/3) + 2 - k .. t + 2 - k
    AdequateJones,  // ceil(T/6) + 2 - k .. 3T - k - 1
    AdequateTwist,  // same shape as Twist, for long twist regions
    CrossingNumber, // .. floor(c/2)
    Genus,          // .. 2g + 1
    ConnectSum,     // c1 + c2 - 1 ..
};

std::string to_string(BoundSource s);

struct BoundInterval {
    int lower = 0;
    int upper = 0;
    BoundSource source = BoundSource::JonesLink;
    bool applicable = true;
    std::string reason;  // why the hypotheses fail, empty when applicable

    bool contains(int v) const noexcept { return lower <= v && v <= upper; }
};

// ceil(n / d) for n >= 0, d > 0.
constexpr int ceil_div(int n, int d) noexcept { return (n + d - 1) / d; }

BoundInterval bounds_jones_link(int T, int k);
BoundInterval bounds_jones_knot(int T, int span);
BoundInterval bounds_twist(int t, int k);  // throws BadTwistCount when t < 2
int upper_crossing(int c);
int upper_clark(int genus);
BoundInterval bounds_adequate(int T, int k);
BoundInterval bounds_adequate_twist(int t, int k);  // throws BadTwistCount when t < 2
int crosscap_trivalent(int t, int epsilon, int k);
int crosscap_pretzel(const std::vector<int>& p);  // throws NotAKnot, InvalidArgument
int connect_sum_lower(int c1, int c2);

// Everything the diagram predicates say about which bounds apply.
struct Hypotheses {
    int k = 0;
    int c = 0;
    int t = 0;
    bool connected = false;
    bool alternating = false;
    bool prime = false;
    bool twist_reduced = false;
    bool adequate = false;
    bool torus_2p = false;
    bool reduced = false;  // no nugatory crossing
    int shortest_twist_region = 0;

    static Hypotheses of(const Diagram& d);
};

// Every bound with its applicability resolved.  `seifert_genus` is the genus
// of the Seifert-state surface, used for the genus bound on alternating knots.
std::vector<BoundInterval> applicable_bounds(const Hypotheses& h, int T, int span, int seifert_genus);

// Only the Jones-polynomial intervals.
std::vector<BoundInterval> jones_bounds(const Hypotheses& h, int T, int span);

}  // namespace crosscap

#endif  // CROSSCAP_BOUNDS_HPP
