#include "crosscap/jones.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crosscap {

namespace {

const LaurentPoly& delta() {
    static const LaurentPoly d(Variable::A, {{2, -1}, {-2, -1}});
    return d;
}

// Greedy sweep order: always take the crossing with the most already-open
// arc ends, which keeps the frontier (and so the state count) small.
std::vector<int> sweep_order(const Diagram& d) {
    const int c = d.crossing_count();
    std::vector<bool> used(static_cast<std::size_t>(c), false);
    std::vector<int> open_count(static_cast<std::size_t>(d.arc_count() + 1), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(c));
    for (int step = 0; step < c; ++step) {
        int best = -1;
        int best_score = -1;
        for (int x = 0; x < c; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            int score = 0;
            for (int l : d.crossing(x).slots) score += open_count[static_cast<std::size_t>(l)] > 0 ? 1 : 0;
            if (score > best_score) {
                best = x;
                best_score = score;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        for (int l : d.crossing(best).slots) ++open_count[static_cast<std::size_t>(l)];
    }
    return order;
}

// Open arc ends paired along the partial smoothing, stored as sorted (lo, hi).
using Frontier = std::vector<std::pair<std::int16_t, std::int16_t>>;

}  // namespace

LaurentPoly bracket(const Diagram& d, int cap) {
    const int c = d.crossing_count();
    if (c > cap)
        throw Error(ErrorKind::TooLarge, std::to_string(c) + " crossings exceeds the bracket cap of " + std::to_string(cap));
    if (c == 0) {
        if (d.unknot_components() == 0) throw Error(ErrorKind::InvalidArgument, "empty diagram has no bracket");
        LaurentPoly out = LaurentPoly::constant(Variable::A, 1);
        for (int i = 1; i < d.unknot_components(); ++i) out *= delta();
        return out;
    }

    std::map<Frontier, LaurentPoly> states;
    states.emplace(Frontier{}, LaurentPoly::constant(Variable::A, 1));
    std::vector<int> partner(static_cast<std::size_t>(d.arc_count() + 1), -1);

    for (int x : sweep_order(d)) {
        const auto& sl = d.crossing(x).slots;
        std::map<Frontier, LaurentPoly> next;
        for (const auto& [frontier, poly] : states) {
            for (Smoothing choice : {Smoothing::A, Smoothing::B}) {
                std::fill(partner.begin(), partner.end(), -1);
                for (auto [lo, hi] : frontier) {
                    partner[static_cast<std::size_t>(lo)] = hi;
                    partner[static_cast<std::size_t>(hi)] = lo;
                }
                const std::array<std::pair<int, int>, 2> joins =
                    choice == Smoothing::A ? std::array<std::pair<int, int>, 2>{{{sl[0], sl[1]}, {sl[2], sl[3]}}}
                                           : std::array<std::pair<int, int>, 2>{{{sl[0], sl[3]}, {sl[1], sl[2]}}};
                int loops = 0;
                for (auto [p, q] : joins) {
                    auto& pp = partner[static_cast<std::size_t>(p)];
                    auto& pq = partner[static_cast<std::size_t>(q)];
                    if (p == q) {
                        ++loops;
                    } else if (pp >= 0 && pq >= 0) {
                        if (pp == q) {
                            ++loops;
                        } else {
                            partner[static_cast<std::size_t>(pp)] = pq;
                            partner[static_cast<std::size_t>(pq)] = pp;
                        }
                        pp = -1;
                        pq = -1;
                    } else if (pp >= 0) {
                        const int far = pp;
                        pp = -1;
                        partner[static_cast<std::size_t>(far)] = q;
                        pq = far;
                    } else if (pq >= 0) {
                        const int far = pq;
                        pq = -1;
                        partner[static_cast<std::size_t>(far)] = p;
                        pp = far;
                    } else {
                        pp = q;
                        pq = p;
                    }
                }
                Frontier key;
                for (int l = 1; l <= d.arc_count(); ++l) {
                    const int m = partner[static_cast<std::size_t>(l)];
                    if (m > l) key.emplace_back(static_cast<std::int16_t>(l), static_cast<std::int16_t>(m));
                }
                LaurentPoly term = poly.scalar_shift(1, choice == Smoothing::A ? 1 : -1);
                for (int i = 0; i < loops; ++i) term *= delta();
                auto [it, inserted] = next.try_emplace(std::move(key), term);
                if (!inserted) it->second += term;
            }
        }
        states = std::move(next);
    }

    // Every closed state has at least one loop, so dividing by delta is exact.
    LaurentPoly total(Variable::A);
    for (const auto& [frontier, poly] : states) total += poly;
    LaurentPoly out = total.divide_exact(delta());
    for (int i = 0; i < d.unknot_components(); ++i) out *= delta();
    return out;
}

int t_k(const LaurentPoly& jones_A) {
    if (jones_A.is_zero() || jones_A.span() < 4) return 0;
    const BigInt second = abs(jones_A.coefficient_at(jones_A.max_degree() - 4));
    const BigInt penultimate = abs(jones_A.coefficient_at(jones_A.min_degree() + 4));
    return static_cast<int>(second + penultimate);
}

int t_k(const JonesData& j) { return t_k(j.jones_A); }

JonesData jones(const Diagram& d, const Orientation& orientation, int cap) {
    JonesData out;
    out.bracket_A = bracket(d, cap);
    out.writhe = writhe(d, orientation);
    // (-A)^(-3w) = (-1)^w A^(-3w)
    out.jones_A = out.bracket_A.scalar_shift(out.writhe % 2 == 0 ? 1 : -1, -3 * out.writhe);

    const int lo = out.jones_A.min_degree();
    for (const auto& [e, coeff] : out.jones_A.terms())
        if (((e - lo) % 4 + 4) % 4 != 0) throw Error(ErrorKind::InvalidArgument, "bracket exponents span several classes mod 4");
    out.span_t = out.jones_A.span() / 4;
    out.T = t_k(out.jones_A);

    if (((lo % 4) + 4) % 4 == 0) {
        LaurentPoly::Terms terms;
        for (const auto& [e, coeff] : out.jones_A.terms()) terms.emplace(-e / 4, coeff);
        out.jones_t = LaurentPoly(Variable::t, terms);
    }
    return out;
}

JonesData jones(const Diagram& d, int cap) { return jones(d, default_orientation(d), cap); }

int beta_from_state_graph(const Diagram& d, Smoothing which) {
    const int c = d.crossing_count();
    if (c == 0) return 0;
    // State circles as label classes of the all-A / all-B state.
    std::vector<int> parent(static_cast<std::size_t>(d.arc_count() + 1));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (const auto& x : d.crossings()) {
        const auto& s = x.slots;
        if (which == Smoothing::A) {
            parent[static_cast<std::size_t>(find(s[1]))] = find(s[0]);
            parent[static_cast<std::size_t>(find(s[3]))] = find(s[2]);
        } else {
            parent[static_cast<std::size_t>(find(s[3]))] = find(s[0]);
            parent[static_cast<std::size_t>(find(s[2]))] = find(s[1]);
        }
    }
    std::set<int> circles;
    std::set<std::pair<int, int>> edges;
    for (int x = 0; x < c; ++x) {
        const auto& s = d.crossing(x).slots;
        // The band at x joins the two arcs of the smoothing.
        const int u = find(s[0]);
        const int v = which == Smoothing::A ? find(s[2]) : find(s[1]);
        if (u == v)
            throw Error(ErrorKind::NotAdequate, std::string("all-") + to_char(which) + " state has a band at crossing " +
                                                    std::to_string(x) + " with both ends on one circle");
        edges.insert({std::min(u, v), std::max(u, v)});
        circles.insert(u);
        circles.insert(v);
    }
    return static_cast<int>(edges.size()) - static_cast<int>(circles.size()) + 1;
}

}  // namespace crosscap
