#include "crosscap/diagram.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crosscap {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Face orbit successor: arrive through the arc, turn to the next slot.
Dart face_next(const Diagram& d, Dart leaving) {
    const Dart m = d.mate(leaving);
    return make_dart(dart_crossing(m), dart_slot(m) + 1);
}

struct FaceTrace {
    std::vector<Face> faces;
    std::vector<int> face_of_dart;  // leaving dart -> face index
};

FaceTrace trace_faces(const Diagram& d, const std::vector<int>* piece) {
    const int n = 4 * d.crossing_count();
    FaceTrace out;
    out.face_of_dart.assign(static_cast<std::size_t>(n), -1);
    std::vector<Dart> starts;
    if (piece) {
        for (int x : *piece)
            for (int s = 0; s < 4; ++s) starts.push_back(make_dart(x, s));
    } else {
        starts.resize(static_cast<std::size_t>(n));
        std::iota(starts.begin(), starts.end(), 0);
    }
    for (Dart start : starts) {
        if (out.face_of_dart[static_cast<std::size_t>(start)] >= 0) continue;
        Face f;
        const int id = static_cast<int>(out.faces.size());
        Dart cur = start;
        do {
            out.face_of_dart[static_cast<std::size_t>(cur)] = id;
            const Dart m = d.mate(cur);
            f.edges.push_back(d.label(cur));
            f.corners.push_back(Corner{dart_crossing(m), dart_slot(m)});
            cur = face_next(d, cur);
        } while (cur != start);
        out.faces.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<int>> pieces_from_mates(int c, const std::vector<Dart>& mate) {
    UnionFind uf(static_cast<std::size_t>(c));
    for (std::size_t dart = 0; dart < mate.size(); ++dart)
        uf.unite(dart_crossing(static_cast<Dart>(dart)), dart_crossing(mate[dart]));
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < c; ++x) groups[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int unknot_components)
    : crossings_(std::move(crossings)), unknots_(unknot_components) {
    if (unknots_ < 0) throw Error(ErrorKind::BadLabels, "negative unknot component count");
    const int c = crossing_count();
    const int arcs = 2 * c;
    arc_ends_.assign(static_cast<std::size_t>(arcs), {-1, -1});
    std::vector<int> seen(static_cast<std::size_t>(arcs), 0);
    for (int x = 0; x < c; ++x) {
        for (int s = 0; s < 4; ++s) {
            const int l = crossings_[static_cast<std::size_t>(x)].slots[static_cast<std::size_t>(s)];
            if (l < 1 || l > arcs)
                throw Error(ErrorKind::BadLabels,
                            "arc label " + std::to_string(l) + " outside 1.." + std::to_string(arcs));
            auto& cnt = seen[static_cast<std::size_t>(l - 1)];
            if (cnt >= 2) throw Error(ErrorKind::BadLabels, "arc label " + std::to_string(l) + " appears more than twice");
            arc_ends_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(cnt)] = make_dart(x, s);
            ++cnt;
        }
    }
    for (int l = 1; l <= arcs; ++l)
        if (seen[static_cast<std::size_t>(l - 1)] != 2)
            throw Error(ErrorKind::BadLabels, "arc label " + std::to_string(l) + " does not appear exactly twice");

    mate_.assign(static_cast<std::size_t>(4 * c), -1);
    for (const auto& ends : arc_ends_) {
        mate_[static_cast<std::size_t>(ends[0])] = ends[1];
        mate_[static_cast<std::size_t>(ends[1])] = ends[0];
    }

    // Euler characteristic of every connected piece must be that of the sphere.
    for (const auto& piece : pieces_from_mates(c, mate_)) {
        const auto trace = trace_faces(*this, &piece);
        const int v = static_cast<int>(piece.size());
        const int f = static_cast<int>(trace.faces.size());
        if (v - 2 * v + f != 2)
            throw Error(ErrorKind::NonPlanar, "face tracing gives V - E + F = " + std::to_string(f - v) +
                                                  " on a piece with " + std::to_string(v) + " crossings");
    }
}

std::string Diagram::serialize() const {
    std::ostringstream os;
    bool first = true;
    if (unknots_ > 0) {
        os << "U(" << unknots_ << ")";
        first = false;
    }
    for (const auto& x : crossings_) {
        if (!first) os << ' ';
        os << "X(" << x.slots[0] << ',' << x.slots[1] << ',' << x.slots[2] << ',' << x.slots[3] << ')';
        first = false;
    }
    return os.str();
}

// --- parsing ---------------------------------------------------------------

namespace {

class PdScanner {
public:
    explicit PdScanner(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char ch) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    int positive_int() {
        skip_ws();
        int value = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) fail("expected a positive integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::MalformedCode, why + " at offset " + std::to_string(pos_));
    }

    std::size_t pos_ = 0;

private:
    std::string_view s_;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
    PdScanner sc(text);
    int unknots = 0;
    std::vector<Crossing> crossings;
    bool saw_unknots = false;
    while (!sc.done()) {
        const char head = sc.peek();
        if (head == 'U') {
            if (saw_unknots || !crossings.empty()) sc.fail("U(n) must appear once, before crossings");
            ++sc.pos_;
            sc.expect('(');
            sc.skip_ws();
            unknots = sc.positive_int();
            sc.expect(')');
            saw_unknots = true;
        } else if (head == 'X') {
            ++sc.pos_;
            sc.expect('(');
            Crossing x;
            for (int i = 0; i < 4; ++i) {
                if (i > 0) sc.expect(',');
                x.slots[static_cast<std::size_t>(i)] = sc.positive_int();
                if (x.slots[static_cast<std::size_t>(i)] <= 0) sc.fail("arc labels must be positive");
            }
            sc.expect(')');
            crossings.push_back(x);
        } else {
            sc.fail(std::string("unexpected character '") + head + "'");
        }
    }
    return Diagram(std::move(crossings), unknots);
}

// --- structure -------------------------------------------------------------

std::vector<LinkComponent> link_components(const Diagram& d) {
    const int n = 4 * d.crossing_count();
    std::vector<bool> arc_seen(static_cast<std::size_t>(d.arc_count()), false);
    std::vector<LinkComponent> out;
    for (Dart d0 = 0; d0 < n; ++d0) {
        if (arc_seen[static_cast<std::size_t>(d.label(d0) - 1)]) continue;
        LinkComponent comp;
        Dart leave = d0;
        do {
            const Dart in = d.mate(leave);
            arc_seen[static_cast<std::size_t>(d.label(in) - 1)] = true;
            comp.incoming.push_back(in);
            leave = Diagram::across(in);
        } while (leave != d0);

        // Default direction: at the lowest-numbered crossing where this
        // component runs under, it enters through slot 0 (the PD convention).
        // Components that never run under keep the traced direction.
        int best_under = -1;
        bool enters_slot0 = true;
        for (Dart in : comp.incoming) {
            if (dart_slot(in) % 2 != 0) continue;
            const int x = dart_crossing(in);
            if (best_under < 0 || x < best_under) {
                best_under = x;
                enters_slot0 = dart_slot(in) == 0;
            }
        }
        if (best_under >= 0 && !enters_slot0) {
            std::vector<Dart> rev;
            rev.reserve(comp.incoming.size());
            for (auto it = comp.incoming.rbegin(); it != comp.incoming.rend(); ++it) rev.push_back(Diagram::across(*it));
            comp.incoming = std::move(rev);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

int components(const Diagram& d) {
    return static_cast<int>(link_components(d).size()) + d.unknot_components();
}

std::vector<std::vector<int>> map_pieces(const Diagram& d) {
    std::vector<Dart> mate(static_cast<std::size_t>(4 * d.crossing_count()));
    for (Dart x = 0; x < static_cast<Dart>(mate.size()); ++x) mate[static_cast<std::size_t>(x)] = d.mate(x);
    return pieces_from_mates(d.crossing_count(), mate);
}

bool is_connected(const Diagram& d) {
    if (d.crossing_count() == 0) return d.unknot_components() <= 1;
    return d.unknot_components() == 0 && map_pieces(d).size() == 1;
}

std::vector<Face> faces(const Diagram& d) { return trace_faces(d, nullptr).faces; }

std::vector<Face> faces_of_piece(const Diagram& d, const std::vector<int>& piece) {
    return trace_faces(d, &piece).faces;
}

bool is_alternating(const Diagram& d) {
    for (const auto& comp : link_components(d)) {
        const auto& seq = comp.incoming;
        if (seq.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const bool under = dart_slot(seq[i]) % 2 == 0;
            const bool next_under = dart_slot(seq[(i + 1) % seq.size()]) % 2 == 0;
            if (under == next_under) return false;
        }
    }
    return true;
}

bool has_nugatory_crossing(const Diagram& d) {
    for (const auto& f : faces(d)) {
        std::set<int> seen;
        for (const auto& corner : f.corners)
            if (!seen.insert(corner.crossing).second) return true;
    }
    return false;
}

namespace {

bool removal_splits(const Diagram& d, int arc1, int arc2) {
    const int c = d.crossing_count();
    std::vector<bool> reached(static_cast<std::size_t>(c), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            const Dart dt = make_dart(x, s);
            const int l = d.label(dt);
            if (l == arc1 || l == arc2) continue;
            const int y = dart_crossing(d.mate(dt));
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return std::find(reached.begin(), reached.end(), false) != reached.end();
}

}  // namespace

bool is_prime_diagram(const Diagram& d) {
    if (d.crossing_count() == 0 || !is_connected(d))
        throw Error(ErrorKind::Disconnected, "primeness needs a connected diagram with crossings");
    if (has_nugatory_crossing(d)) return false;

    const auto trace = trace_faces(d, nullptr);
    // Group arcs by the unordered pair of faces on their two sides.
    std::map<std::pair<int, int>, std::vector<int>> by_faces;
    for (int l = 1; l <= d.arc_count(); ++l) {
        const auto ends = d.arc_darts(l);
        int f1 = trace.face_of_dart[static_cast<std::size_t>(ends[0])];
        int f2 = trace.face_of_dart[static_cast<std::size_t>(ends[1])];
        if (f1 == f2) continue;
        if (f2 < f1) std::swap(f1, f2);
        by_faces[{f1, f2}].push_back(l);
    }
    for (const auto& [pair, arcs] : by_faces) {
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t j = i + 1; j < arcs.size(); ++j)
                if (removal_splits(d, arcs[i], arcs[j])) return false;
    }
    return true;
}

namespace {

bool is_bigon_between_distinct(const Face& f) {
    return f.size() == 2 && f.corners[0].crossing != f.corners[1].crossing;
}

}  // namespace

std::vector<TwistRegion> twist_regions(const Diagram& d) {
    const int c = d.crossing_count();
    UnionFind uf(static_cast<std::size_t>(c));
    std::vector<std::set<int>> adj(static_cast<std::size_t>(c));
    for (const auto& f : faces(d)) {
        if (!is_bigon_between_distinct(f)) continue;
        const int a = f.corners[0].crossing;
        const int b = f.corners[1].crossing;
        uf.unite(a, b);
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < c; ++x) groups[uf.find(x)].push_back(x);

    std::vector<TwistRegion> out;
    for (const auto& [root, members] : groups) {
        // Walk the chain from an end (or from the smallest member if cyclic).
        int start = members.front();
        for (int x : members)
            if (adj[static_cast<std::size_t>(x)].size() <= 1) {
                start = x;
                break;
            }
        TwistRegion region;
        std::set<int> visited;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            if (!visited.insert(x).second) continue;
            region.crossings.push_back(x);
            const auto& nbrs = adj[static_cast<std::size_t>(x)];
            for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
                if (!visited.count(*it)) stack.push_back(*it);
        }
        out.push_back(std::move(region));
    }
    return out;
}

int twist_number(const Diagram& d) { return static_cast<int>(twist_regions(d).size()); }

bool is_twist_reduced(const Diagram& d) {
    const int c = d.crossing_count();
    if (c == 0) return true;
    const auto trace = trace_faces(d, nullptr);
    const auto& fs = trace.faces;
    const int nf = static_cast<int>(fs.size());

    // Face of each corner (x, j): the face containing the dart leaving via j+1.
    auto corner_face = [&](int x, int j) {
        return trace.face_of_dart[static_cast<std::size_t>(make_dart(x, j + 1))];
    };

    // Checkerboard colouring: faces across an arc get different colours.
    std::vector<int> colour(static_cast<std::size_t>(nf), -1);
    for (int seed = 0; seed < nf; ++seed) {
        if (colour[static_cast<std::size_t>(seed)] >= 0) continue;
        colour[static_cast<std::size_t>(seed)] = 0;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (int x = 0; x < c; ++x)
                for (int j = 0; j < 4; ++j) {
                    if (corner_face(x, j) != f) continue;
                    for (int nb : {corner_face(x, j + 1), corner_face(x, j + 3)}) {
                        if (colour[static_cast<std::size_t>(nb)] < 0) {
                            colour[static_cast<std::size_t>(nb)] = 1 - colour[static_cast<std::size_t>(f)];
                            stack.push_back(nb);
                        }
                    }
                }
        }
    }

    const auto regions = twist_regions(d);
    std::vector<int> region_of(static_cast<std::size_t>(c), -1);
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (int x : regions[r].crossings) region_of[static_cast<std::size_t>(x)] = static_cast<int>(r);

    // Two crossings that are parallel edges of a checkerboard graph bound a
    // two-crossing curve; it is harmless only inside one twist region.
    for (int col = 0; col < 2; ++col) {
        std::map<std::pair<int, int>, int> owner;
        for (int x = 0; x < c; ++x) {
            const int j = colour[static_cast<std::size_t>(corner_face(x, 0))] == col ? 0 : 1;
            const int u = corner_face(x, j);
            const int v = corner_face(x, j + 2);
            if (u == v) continue;
            const auto key = std::make_pair(std::min(u, v), std::max(u, v));
            const int r = region_of[static_cast<std::size_t>(x)];
            auto [it, fresh] = owner.emplace(key, r);
            if (!fresh && it->second != r) return false;
        }
    }
    return true;
}

bool is_torus_2p_diagram(const Diagram& d) {
    return d.crossing_count() > 0 && is_connected(d) && is_alternating(d) && twist_number(d) == 1;
}

// --- orientation -----------------------------------------------------------

Orientation default_orientation(const Diagram& d) {
    return Orientation{std::vector<bool>(link_components(d).size(), false)};
}

std::vector<bool> incoming_darts(const Diagram& d, const Orientation& o) {
    std::vector<bool> in(static_cast<std::size_t>(4 * d.crossing_count()), false);
    const auto comps = link_components(d);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const bool flip = i < o.flips.size() && o.flips[i];
        for (Dart dt : comps[i].incoming) in[static_cast<std::size_t>(flip ? Diagram::across(dt) : dt)] = true;
    }
    return in;
}

std::vector<int> crossing_signs(const Diagram& d, const Orientation& o) {
    const auto in = incoming_darts(d, o);
    std::vector<int> signs(static_cast<std::size_t>(d.crossing_count()));
    for (int x = 0; x < d.crossing_count(); ++x) {
        const bool under_forward = in[static_cast<std::size_t>(make_dart(x, 0))];
        const bool over_from_3 = in[static_cast<std::size_t>(make_dart(x, 3))];
        signs[static_cast<std::size_t>(x)] = under_forward == over_from_3 ? 1 : -1;
    }
    return signs;
}

int writhe(const Diagram& d, const Orientation& o) {
    const auto s = crossing_signs(d, o);
    return std::accumulate(s.begin(), s.end(), 0);
}

std::vector<Orientation> orientation_classes(const Diagram& d) {
    const std::size_t k = link_components(d).size();
    std::vector<Orientation> out;
    if (k == 0) return {Orientation{}};
    const std::size_t count = std::size_t{1} << (k - 1);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Orientation o;
        o.flips.assign(k, false);
        for (std::size_t i = 1; i < k; ++i) o.flips[i] = ((mask >> (i - 1)) & 1U) != 0;
        out.push_back(std::move(o));
    }
    return out;
}

// --- moves -----------------------------------------------------------------

Diagram smooth(const Diagram& d, int crossing, Smoothing choice) {
    const int c = d.crossing_count();
    if (crossing < 0 || crossing >= c)
        throw Error(ErrorKind::InvalidArgument, "no crossing " + std::to_string(crossing));
    const auto& sl = d.crossing(crossing).slots;
    UnionFind uf(static_cast<std::size_t>(2 * c + 1));
    int closed = 0;
    const std::array<std::pair<int, int>, 2> pairs =
        choice == Smoothing::A ? std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}}
                               : std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}};
    for (auto [i, j] : pairs)
        if (!uf.unite(sl[static_cast<std::size_t>(i)], sl[static_cast<std::size_t>(j)])) ++closed;

    std::vector<Crossing> rest;
    rest.reserve(static_cast<std::size_t>(c - 1));
    for (int x = 0; x < c; ++x) {
        if (x == crossing) continue;
        Crossing nx = d.crossing(x);
        for (auto& l : nx.slots) l = uf.find(l);
        rest.push_back(nx);
    }
    // Union-find roots are the smallest label of each class, so ordering by
    // root is ordering by ascending old label.
    std::set<int> roots;
    for (const auto& x : rest)
        for (int l : x.slots) roots.insert(l);
    std::map<int, int> renumber;
    int next = 1;
    for (int r : roots) renumber[r] = next++;
    for (auto& x : rest)
        for (auto& l : x.slots) l = renumber[l];
    return Diagram(std::move(rest), d.unknot_components() + closed);
}

Diagram add_kink(const Diagram& d, int arc, KinkSign sign) {
    const int c = d.crossing_count();
    std::vector<Crossing> xs = d.crossings();
    int unknots = d.unknot_components();
    int e = 0;
    int exit_label = 0;
    int loop = 0;
    if (c == 0) {
        if (unknots < 1) throw Error(ErrorKind::InvalidArgument, "no circle to put a kink on");
        --unknots;
        e = exit_label = 1;
        loop = 2;
    } else {
        if (arc < 1 || arc > d.arc_count()) throw Error(ErrorKind::InvalidArgument, "no arc " + std::to_string(arc));
        e = arc;
        loop = 2 * c + 1;
        exit_label = 2 * c + 2;
        const Dart far = d.arc_darts(arc)[1];
        xs[static_cast<std::size_t>(dart_crossing(far))].slots[static_cast<std::size_t>(dart_slot(far))] = exit_label;
    }
    Crossing k;
    if (sign == KinkSign::Positive) k.slots = {e, exit_label, loop, loop};
    else k.slots = {e, loop, loop, exit_label};
    xs.push_back(k);
    return Diagram(std::move(xs), unknots);
}

Diagram mirror(const Diagram& d) {
    std::vector<Crossing> xs = d.crossings();
    for (auto& x : xs) x.slots = {x.slots[3], x.slots[0], x.slots[1], x.slots[2]};
    return Diagram(std::move(xs), d.unknot_components());
}

Diagram relabel_canonical(const Diagram& d) {
    std::map<int, int> renumber;
    std::vector<Crossing> xs = d.crossings();
    for (auto& x : xs)
        for (auto& l : x.slots) {
            auto [it, inserted] = renumber.try_emplace(l, static_cast<int>(renumber.size()) + 1);
            l = it->second;
        }
    return Diagram(std::move(xs), d.unknot_components());
}

}  // namespace crosscap
