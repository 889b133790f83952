#include "crosscap/generators.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crosscap {

namespace {

// Crossing i owns darts 4i..4i+3 listed counterclockwise as NE, NW, SW, SE.
enum Compass { NE = 0, NW = 1, SW = 2, SE = 3 };

struct DartGraph {
    std::vector<int> start;  // per crossing: which dart becomes PD slot 0
    std::vector<std::pair<int, int>> links;
    int unknots = 0;

    int add_crossing(int slot0) {
        start.push_back(slot0);
        return static_cast<int>(start.size()) - 1;
    }
    void link(int a, int b) { links.emplace_back(a, b); }

    Diagram build() const {
        std::vector<int> label(4 * start.size(), 0);
        int next = 1;
        for (auto [a, b] : links) {
            label[static_cast<std::size_t>(a)] = next;
            label[static_cast<std::size_t>(b)] = next;
            ++next;
        }
        std::vector<Crossing> xs(start.size());
        for (std::size_t i = 0; i < start.size(); ++i)
            for (int s = 0; s < 4; ++s)
                xs[i].slots[static_cast<std::size_t>(s)] = label[4 * i + static_cast<std::size_t>((start[i] + s) & 3)];
        return relabel_canonical(Diagram(std::move(xs), unknots));
    }
};

int dart(int crossing, Compass c) { return 4 * crossing + c; }

void require_planar(const RibbonGraph& g) {
    const int v = g.vertex_count();
    const int e = g.edge_count();
    // Edge end -> (vertex, position).
    std::vector<std::vector<std::pair<int, int>>> ends(static_cast<std::size_t>(e));
    for (int u = 0; u < v; ++u)
        for (std::size_t i = 0; i < g.rotation[static_cast<std::size_t>(u)].size(); ++i) {
            const int id = g.rotation[static_cast<std::size_t>(u)][i];
            if (id < 0 || id >= e) throw Error(ErrorKind::InvalidArgument, "edge id out of range");
            ends[static_cast<std::size_t>(id)].emplace_back(u, static_cast<int>(i));
        }
    for (int id = 0; id < e; ++id)
        if (ends[static_cast<std::size_t>(id)].size() != 2)
            throw Error(ErrorKind::MalformedCode, "edge " + g.edge_names[static_cast<std::size_t>(id)] + " must appear exactly twice");

    auto other_end = [&](int u, int i) {
        const int id = g.rotation[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        const auto& pair = ends[static_cast<std::size_t>(id)];
        return pair[0] == std::make_pair(u, i) ? pair[1] : pair[0];
    };
    std::map<std::pair<int, int>, bool> used;
    int faces = 0;
    for (int u = 0; u < v; ++u)
        for (int i = 0; i < static_cast<int>(g.rotation[static_cast<std::size_t>(u)].size()); ++i) {
            if (used[{u, i}]) continue;
            ++faces;
            std::pair<int, int> cur{u, i};
            while (!used[cur]) {
                used[cur] = true;
                const auto [w, j] = other_end(cur.first, cur.second);
                const int deg = static_cast<int>(g.rotation[static_cast<std::size_t>(w)].size());
                cur = {w, (j + 1) % deg};
            }
        }

    std::vector<int> parent(static_cast<std::size_t>(v));
    for (int u = 0; u < v; ++u) parent[static_cast<std::size_t>(u)] = u;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    int pieces = v;
    for (const auto& pair : ends) {
        const int a = find(pair[0].first);
        const int b = find(pair[1].first);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --pieces;
        }
    }
    if (pieces != 1) throw Error(ErrorKind::NotPlanar, "graph is disconnected");
    if (v - e + faces != 2)
        throw Error(ErrorKind::NotPlanar, "rotation system has Euler characteristic " + std::to_string(v - e + faces));
}

}  // namespace

RibbonGraph parse_ribbon_graph(std::string_view text) {
    RibbonGraph g;
    std::map<std::string, int> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::MalformedCode, "line " + std::to_string(line_no) + ": expected 'vertex: edges...'");
        std::istringstream edges(line.substr(colon + 1));
        std::vector<int> rot;
        for (std::string name; edges >> name;) {
            auto [it, fresh] = ids.emplace(name, static_cast<int>(g.edge_names.size()));
            if (fresh) g.edge_names.push_back(name);
            rot.push_back(it->second);
        }
        if (rot.empty()) throw Error(ErrorKind::MalformedCode, "line " + std::to_string(line_no) + ": vertex without edges");
        g.rotation.push_back(std::move(rot));
    }
    if (g.rotation.empty()) throw Error(ErrorKind::MalformedCode, "graph has no vertices");
    return g;
}

RibbonGraph theta_graph(int edges) {
    RibbonGraph g;
    std::vector<int> bottom;
    std::vector<int> top;
    for (int i = 0; i < edges; ++i) {
        g.edge_names.push_back(std::to_string(i + 1));
        top.push_back(i);
        bottom.insert(bottom.begin(), i);
    }
    g.rotation = {bottom, top};
    return g;
}

RibbonGraph k4_graph() {
    // a=0-1 b=0-2 c=0-3 d=1-2 e=2-3 f=3-1
    return parse_ribbon_graph("0: a b c\n1: d a f\n2: e b d\n3: f c e\n");
}

Diagram ribbon_link(const RibbonGraph& g, const std::vector<int>& twists) {
    if (static_cast<int>(twists.size()) != g.edge_count())
        throw Error(ErrorKind::InvalidArgument, "need one twist count per edge (" + std::to_string(g.edge_count()) + ")");
    require_planar(g);
    const bool positive = twists.front() > 0;
    for (int n : twists) {
        if (n == 0) throw Error(ErrorKind::InvalidArgument, "every band needs at least one crossing");
        if ((n > 0) != positive) throw Error(ErrorKind::MixedSigns, "twist counts must share one sign");
    }
    const int slot0 = positive ? NE : NW;

    DartGraph dg;
    // Band ends as seen from the vertex looking out along the edge.
    struct BandEnd {
        int left;
        int right;
    };
    std::vector<std::vector<BandEnd>> band_ends(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const int n = std::abs(twists[static_cast<std::size_t>(e)]);
        int first = -1;
        int prev = -1;
        for (int k = 0; k < n; ++k) {
            const int x = dg.add_crossing(slot0);
            if (prev >= 0) {
                dg.link(dart(prev, NW), dart(x, SW));
                dg.link(dart(prev, NE), dart(x, SE));
            } else {
                first = x;
            }
            prev = x;
        }
        band_ends[static_cast<std::size_t>(e)] = {BandEnd{dart(first, SW), dart(first, SE)},
                                                  BandEnd{dart(prev, NE), dart(prev, NW)}};
    }

    std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::vector<BandEnd>> around(g.rotation.size());
    for (std::size_t v = 0; v < g.rotation.size(); ++v)
        for (int e : g.rotation[v]) around[v].push_back(band_ends[static_cast<std::size_t>(e)][static_cast<std::size_t>(seen[static_cast<std::size_t>(e)]++)]);
    for (const auto& ring : around)
        for (std::size_t i = 0; i < ring.size(); ++i) dg.link(ring[i].left, ring[(i + 1) % ring.size()].right);

    Diagram d = dg.build();
    if (!is_alternating(d)) throw Error(ErrorKind::InvalidArgument, "generated diagram is not alternating");
    return d;
}

Diagram trivalent_graph_link(const RibbonGraph& g, const std::vector<int>& twists) {
    for (std::size_t v = 0; v < g.rotation.size(); ++v)
        if (g.rotation[v].size() != 3)
            throw Error(ErrorKind::NotTrivalent, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.rotation[v].size()));
    return ribbon_link(g, twists);
}

Diagram pretzel(const std::vector<int>& p) {
    if (p.size() < 3) throw Error(ErrorKind::InvalidArgument, "pretzel needs at least 3 tangles");
    return ribbon_link(theta_graph(static_cast<int>(p.size())), p);
}

Diagram inflate_twist(const Diagram& d, int crossing, int extra) {
    const int c = d.crossing_count();
    if (crossing < 0 || crossing >= c) throw Error(ErrorKind::InvalidArgument, "no crossing " + std::to_string(crossing));
    if (extra < 0 || extra % 2 != 0) throw Error(ErrorKind::InvalidArgument, "extra crossings must be even and nonnegative");
    if (extra == 0) return d;

    // Stack the new crossings toward a corner that already holds a bigon, so
    // the existing twist region grows instead of a new one appearing.
    int K = 0;
    for (const auto& f : faces(d)) {
        if (f.size() != 2 || f.corners[0].crossing == f.corners[1].crossing) continue;
        auto it = std::find_if(f.corners.begin(), f.corners.end(), [&](const Corner& k) { return k.crossing == crossing; });
        if (it != f.corners.end()) {
            K = it->slot;
            break;
        }
    }

    // Original slot s of `crossing` sits at compass position (s - K) mod 4.
    DartGraph dg;
    dg.unknots = d.unknot_components();
    std::vector<int> new_index(static_cast<std::size_t>(c));
    std::vector<int> chain;
    for (int x = 0; x < c; ++x) {
        if (x == crossing) {
            for (int k = 0; k <= extra; ++k) chain.push_back(dg.add_crossing((4 - K) & 3));
            new_index[static_cast<std::size_t>(x)] = chain.front();
        } else {
            new_index[static_cast<std::size_t>(x)] = dg.add_crossing(0);
        }
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        dg.link(dart(chain[k], NW), dart(chain[k + 1], SW));
        dg.link(dart(chain[k], NE), dart(chain[k + 1], SE));
    }
    auto map_dart = [&](Dart old) {
        const int x = dart_crossing(old);
        if (x != crossing) return 4 * new_index[static_cast<std::size_t>(x)] + dart_slot(old);
        const auto pos = static_cast<Compass>((dart_slot(old) - K + 4) & 3);
        return dart(pos == NE || pos == NW ? chain.back() : chain.front(), pos);
    };
    for (int l = 1; l <= d.arc_count(); ++l) {
        const auto ends = d.arc_darts(l);
        dg.link(map_dart(ends[0]), map_dart(ends[1]));
    }
    return dg.build();
}

Diagram inflate_all_regions(const Diagram& d, int extra) {
    // New crossings are inserted in place, so later indices shift by `extra`.
    std::vector<int> reps;
    for (const auto& r : twist_regions(d)) reps.push_back(r.crossings.front());
    std::sort(reps.begin(), reps.end());
    Diagram out = d;
    int shift = 0;
    for (int rep : reps) {
        out = inflate_twist(out, rep + shift, extra);
        shift += extra;
    }
    return out;
}

}  // namespace crosscap
