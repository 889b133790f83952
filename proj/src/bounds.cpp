#include "crosscap/bounds.hpp"

#include "crosscap/error.hpp"
#include "crosscap/surfaces.hpp"

#include <algorithm>

namespace crosscap {

std::string to_string(BoundSource s) {
    switch (s) {
        case BoundSource::JonesLink: return "jones_link";
        case BoundSource::JonesKnot: return "jones_knot";
        case BoundSource::Twist: return "twist";
        case BoundSource::AdequateJones: return "adequate_jones";
        case BoundSource::AdequateTwist: return "adequate_twist";
        case BoundSource::CrossingNumber: return "crossing_number";
        case BoundSource::Genus: return "genus";
        case BoundSource::ConnectSum: return "connect_sum";
    }
    return "unknown";
}

BoundInterval bounds_jones_link(int T, int k) {
    BoundInterval b{ceil_div(T, 3) + 2 - k, T + 2 - k, BoundSource::JonesLink, true, {}};
    if (T < 1) {
        b.applicable = false;
        b.reason = "T is zero";
    }
    return b;
}

BoundInterval bounds_jones_knot(int T, int span) {
    return BoundInterval{ceil_div(T, 3) + 1, std::min(T + 1, span / 2), BoundSource::JonesKnot, true, {}};
}

BoundInterval bounds_twist(int t, int k) {
    if (t < 2) throw Error(ErrorKind::BadTwistCount, "twist bound needs t >= 2, got " + std::to_string(t));
    return BoundInterval{ceil_div(t, 3) + 2 - k, t + 2 - k, BoundSource::Twist, true, {}};
}

int upper_crossing(int c) { return c / 2; }

int upper_clark(int genus) { return 2 * genus + 1; }

BoundInterval bounds_adequate(int T, int k) {
    return BoundInterval{ceil_div(T, 6) + 2 - k, 3 * T - k - 1, BoundSource::AdequateJones, true, {}};
}

BoundInterval bounds_adequate_twist(int t, int k) {
    if (t < 2) throw Error(ErrorKind::BadTwistCount, "twist bound needs t >= 2, got " + std::to_string(t));
    return BoundInterval{ceil_div(t, 3) + 2 - k, t + 2 - k, BoundSource::AdequateTwist, true, {}};
}

int crosscap_trivalent(int t, int epsilon, int k) {
    if (epsilon != 2 && epsilon != 3) throw Error(ErrorKind::InvalidArgument, "epsilon must be 2 or 3");
    return ceil_div(t, 3) + epsilon - k;
}

int crosscap_pretzel(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "pretzel needs at least 3 tangles");
    const bool positive = p.front() > 0;
    int even = 0;
    for (int v : p) {
        if ((v > 0) != positive) throw Error(ErrorKind::MixedSigns, "pretzel entries must share one sign");
        if (v > -3 && v < 3) throw Error(ErrorKind::InvalidArgument, "pretzel entries need |p| > 2");
        if (v % 2 == 0) ++even;
    }
    if (even >= 2) throw Error(ErrorKind::NotAKnot, std::to_string(even) + " even tangles give a link");
    if (even == 0 && n % 2 == 0) throw Error(ErrorKind::NotAKnot, "an even number of odd tangles gives a link");
    return even == 0 ? n : n - 1;
}

int connect_sum_lower(int c1, int c2) { return c1 + c2 - 1; }

Hypotheses Hypotheses::of(const Diagram& d) {
    Hypotheses h;
    h.k = components(d);
    h.c = d.crossing_count();
    h.connected = is_connected(d);
    h.alternating = is_alternating(d);
    if (h.c == 0) return h;
    const auto regions = twist_regions(d);
    h.t = static_cast<int>(regions.size());
    h.shortest_twist_region = static_cast<int>(regions.front().length());
    for (const auto& r : regions) h.shortest_twist_region = std::min(h.shortest_twist_region, static_cast<int>(r.length()));
    h.reduced = !has_nugatory_crossing(d);
    if (h.connected) {
        h.prime = is_prime_diagram(d);
        h.torus_2p = is_torus_2p_diagram(d);
    }
    h.twist_reduced = is_twist_reduced(d);
    h.adequate = is_adequate(d);
    return h;
}

namespace {

// First failing requirement, or empty.
std::string missing(std::initializer_list<std::pair<bool, const char*>> checks) {
    for (const auto& [ok, what] : checks)
        if (!ok) return what;
    return {};
}

void settle(BoundInterval& b, const std::string& why) {
    if (!why.empty()) {
        b.applicable = false;
        b.reason = why;
    }
}

}  // namespace

std::vector<BoundInterval> jones_bounds(const Hypotheses& h, int T, int span) {
    std::vector<BoundInterval> out;

    BoundInterval link = bounds_jones_link(T, std::max(h.k, 1));
    if (link.applicable)
        settle(link, missing({{h.connected, "diagram is split"},
                              {h.alternating, "diagram is not alternating"},
                              {h.reduced, "diagram has a nugatory crossing"},
                              {h.prime, "diagram is not prime"},
                              {!h.torus_2p, "(2,p) torus diagram"}}));
    out.push_back(link);

    BoundInterval knot = bounds_jones_knot(T, span);
    settle(knot, missing({{h.k == 1, "not a knot"},
                          {h.connected, "diagram is split"},
                          {h.alternating, "diagram is not alternating"},
                          {h.reduced, "diagram has a nugatory crossing"},
                          {!h.torus_2p, "(2,p) torus diagram"}}));
    out.push_back(knot);
    return out;
}

std::vector<BoundInterval> applicable_bounds(const Hypotheses& h, int T, int span, int seifert_genus) {
    auto out = jones_bounds(h, T, span);
    const int k = std::max(h.k, 1);

    const std::string twist_why = missing({{h.connected, "diagram is split"},
                                           {h.alternating, "diagram is not alternating"},
                                           {h.prime, "diagram is not prime"},
                                           {h.twist_reduced, "diagram is not twist-reduced"},
                                           {h.t >= 2, "fewer than two twist regions"}});
    if (h.t >= 2) {
        BoundInterval b = bounds_twist(h.t, k);
        settle(b, twist_why);
        out.push_back(b);
    } else {
        out.push_back(BoundInterval{0, 0, BoundSource::Twist, false, "fewer than two twist regions"});
    }

    const std::string long_why = missing({{h.connected, "diagram is split"},
                                          {h.twist_reduced, "diagram is not twist-reduced"},
                                          {h.t >= 2, "fewer than two twist regions"},
                                          {h.shortest_twist_region >= 6, "a twist region has fewer than six crossings"}});
    if (h.t >= 2) {
        BoundInterval b = bounds_adequate_twist(h.t, k);
        settle(b, long_why);
        out.push_back(b);
    } else {
        out.push_back(BoundInterval{0, 0, BoundSource::AdequateTwist, false, "fewer than two twist regions"});
    }
    BoundInterval adequate = bounds_adequate(T, k);
    settle(adequate, long_why.empty() ? missing({{h.adequate, "diagram is not adequate"}}) : long_why);
    out.push_back(adequate);

    BoundInterval crossing{1, upper_crossing(h.c), BoundSource::CrossingNumber, true, {}};
    settle(crossing, missing({{h.k == 1, "not a knot"},
                              {h.connected, "diagram is split"},
                              {h.alternating, "diagram is not alternating"},
                              {h.reduced, "diagram has a nugatory crossing"},
                              {h.c >= 2, "trivial diagram"}}));
    out.push_back(crossing);

    BoundInterval genus{1, upper_clark(seifert_genus), BoundSource::Genus, true, {}};
    settle(genus, missing({{h.k == 1, "not a knot"},
                           {h.connected, "diagram is split"},
                           {h.alternating, "diagram is not alternating"},
                           {h.c >= 1, "trivial diagram"}}));
    out.push_back(genus);
    return out;
}

}  // namespace crosscap
