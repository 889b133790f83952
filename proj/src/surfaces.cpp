#include "crosscap/surfaces.hpp"

#include "crosscap/error.hpp"

#include <algorithm>

namespace crosscap {

KauffmanState KauffmanState::from_mask(int crossings, StateMask mask) {
    KauffmanState s;
    s.choices.reserve(static_cast<std::size_t>(crossings));
    for (int x = 0; x < crossings; ++x) s.choices.push_back(((mask >> x) & 1U) ? Smoothing::B : Smoothing::A);
    return s;
}

StateMask KauffmanState::mask() const {
    StateMask m = 0;
    for (std::size_t x = 0; x < choices.size(); ++x)
        if (choices[x] == Smoothing::B) m |= StateMask{1} << x;
    return m;
}

std::string KauffmanState::to_string() const {
    std::string s;
    for (auto c : choices) s.push_back(to_char(c));
    return s;
}

namespace {

void require_total(const Diagram& d, const KauffmanState& state) {
    if (static_cast<int>(state.choices.size()) != d.crossing_count())
        throw Error(ErrorKind::InvalidArgument, "state has " + std::to_string(state.choices.size()) +
                                                    " choices for " + std::to_string(d.crossing_count()) +
                                                    " crossings");
}

// Slot joined to `slot` by the smoothing.
int smoothing_partner(int slot, Smoothing s) {
    static constexpr int kA[4] = {1, 0, 3, 2};
    static constexpr int kB[4] = {3, 2, 1, 0};
    return s == Smoothing::A ? kA[slot] : kB[slot];
}

// Circle id of every dart after smoothing.
std::vector<int> trace_state(const Diagram& d, const KauffmanState& state, int* circles) {
    std::vector<int> circle_of(static_cast<std::size_t>(4 * d.crossing_count()), -1);
    int count = 0;
    for (Dart start = 0; start < static_cast<Dart>(circle_of.size()); ++start) {
        if (circle_of[static_cast<std::size_t>(start)] >= 0) continue;
        Dart cur = start;
        do {
            circle_of[static_cast<std::size_t>(cur)] = count;
            const Dart arrive = d.mate(cur);
            circle_of[static_cast<std::size_t>(arrive)] = count;
            const int x = dart_crossing(arrive);
            cur = make_dart(x, smoothing_partner(dart_slot(arrive), state.choices[static_cast<std::size_t>(x)]));
        } while (cur != start);
        ++count;
    }
    *circles = count + d.unknot_components();
    return circle_of;
}

}  // namespace

int state_circles(const Diagram& d, const KauffmanState& state) {
    require_total(d, state);
    int circles = 0;
    trace_state(d, state, &circles);
    return circles;
}

std::vector<KauffmanState> seifert_states(const Diagram& d) {
    std::vector<KauffmanState> out;
    for (const auto& o : orientation_classes(d)) {
        const auto signs = crossing_signs(d, o);
        KauffmanState s;
        for (int sign : signs) s.choices.push_back(sign > 0 ? Smoothing::A : Smoothing::B);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

bool is_orientable(const Diagram& d, const KauffmanState& state) {
    require_total(d, state);
    if (!is_connected(d)) throw Error(ErrorKind::Disconnected, "state surface of a split diagram");
    const auto seifert = seifert_states(d);
    return std::find(seifert.begin(), seifert.end(), state) != seifert.end();
}

SurfaceSummary surface_summary(const Diagram& d, const KauffmanState& state) {
    SurfaceSummary s;
    s.circles = state_circles(d, state);
    s.chi = s.circles - d.crossing_count();
    s.orientable = is_orientable(d, state);
    s.k = components(d);
    s.crosscap_of_surface = 2 - s.chi - s.k;
    return s;
}

bool is_state_adequate(const Diagram& d, Smoothing which) {
    const auto state = KauffmanState::uniform(d.crossing_count(), which);
    int circles = 0;
    const auto circle_of = trace_state(d, state, &circles);
    for (int x = 0; x < d.crossing_count(); ++x) {
        // The two smoothing arcs at x are the ones through slot 0 and slot 2.
        if (circle_of[static_cast<std::size_t>(make_dart(x, 0))] == circle_of[static_cast<std::size_t>(make_dart(x, 2))])
            return false;
    }
    return true;
}

bool is_adequate(const Diagram& d) {
    return is_state_adequate(d, Smoothing::A) && is_state_adequate(d, Smoothing::B);
}

}  // namespace crosscap
