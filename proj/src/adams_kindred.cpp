#include "crosscap/adams_kindred.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

namespace crosscap {

MinFaces min_mgon(const Diagram& d) {
    MinFaces out;
    if (d.crossing_count() == 0) return out;
    const auto fs = faces(d);
    std::size_t m = fs.front().size();
    for (const auto& f : fs) m = std::min(m, f.size());
    out.m = static_cast<int>(m);
    for (const auto& f : fs)
        if (f.size() == m) out.faces.push_back(f);
    return out;
}

std::vector<KauffmanState> AKResult::witness_states() const {
    std::vector<KauffmanState> out;
    if (orientable_witness) out.push_back(*orientable_witness);
    if (nonorientable_witness) out.push_back(*nonorientable_witness);
    return out;
}

SearchConfig SearchConfig::from_environment() {
    SearchConfig config;
    if (const char* env = std::getenv("CROSSCAP_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw Error(ErrorKind::InvalidArgument, std::string("CROSSCAP_BUDGET must be a positive integer, got '") + env + "'");
        config.node_budget = v;
    }
    return config;
}

namespace {

// (original crossing, smoothing) pairs applied together as one branch.
using Assignment = std::vector<std::pair<int, Smoothing>>;

class Search {
public:
    Search(const Diagram& d, const SearchConfig& config) : root_(d), config_(config) {
        const int c = d.crossing_count();
        seifert_ = seifert_states(d);
        if (seifert_.size() > 64) throw Error(ErrorKind::TooLarge, "more than 64 Seifert states");
        agree_.assign(static_cast<std::size_t>(c), {0, 0});
        for (std::size_t j = 0; j < seifert_.size(); ++j)
            for (int x = 0; x < c; ++x) {
                const auto s = seifert_[j].choices[static_cast<std::size_t>(x)];
                agree_[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] |= std::uint64_t{1} << j;
            }
        full_mask_ = seifert_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << seifert_.size()) - 1;
    }

    AKResult run() {
        Node root;
        root.diagram = root_;
        for (int x = 0; x < root_.crossing_count(); ++x) root.original.push_back(x);
        root.choices.assign(static_cast<std::size_t>(root_.crossing_count()), Smoothing::A);
        root.mask = full_mask_;
        seen_.insert(key(root));
        visit(root);

        result_.crossings = root_.crossing_count();
        result_.max_circles = best_circles_;
        result_.max_chi = best_circles_ - root_.crossing_count();
        return result_;
    }

private:
    struct Node {
        Diagram diagram;
        std::vector<int> original;  // current crossing index -> root index
        std::vector<Smoothing> choices;
        std::uint64_t mask = 0;  // Seifert states still agreeing with every choice made
    };

    std::string key(const Node& n) const {
        const Diagram canon = relabel_canonical(n.diagram);
        std::string k;
        k.reserve(static_cast<std::size_t>(24 * canon.crossing_count() + 24));
        for (int i = 0; i < canon.crossing_count(); ++i) {
            k += std::to_string(n.original[static_cast<std::size_t>(i)]);
            k += ':';
            for (int l : canon.crossing(i).slots) {
                k += std::to_string(l);
                k += ',';
            }
        }
        k += '|';
        k += std::to_string(canon.unknot_components());
        k += '|';
        k += std::to_string(n.mask);
        return k;
    }

    void leaf(const Node& n) {
        ++result_.stats.leaves;
        const int circles = n.diagram.unknot_components();
        if (circles < best_circles_) return;
        if (circles > best_circles_) {
            best_circles_ = circles;
            result_.orientable_at_max = false;
            result_.nonorientable_at_max = false;
            result_.orientable_witness.reset();
            result_.nonorientable_witness.reset();
        }
        const KauffmanState state{n.choices};
        if (n.mask != 0) {
            result_.orientable_at_max = true;
            if (!result_.orientable_witness) result_.orientable_witness = state;
        } else {
            result_.nonorientable_at_max = true;
            if (!result_.nonorientable_witness) result_.nonorientable_witness = state;
        }
    }

    Node apply(const Node& n, const Assignment& a) const {
        Node child = n;
        for (auto [orig, s] : a) {
            const auto it = std::find(child.original.begin(), child.original.end(), orig);
            const int idx = static_cast<int>(it - child.original.begin());
            child.diagram = smooth(child.diagram, idx, s);
            child.original.erase(it);
            child.choices[static_cast<std::size_t>(orig)] = s;
            child.mask &= agree_[static_cast<std::size_t>(orig)][static_cast<std::size_t>(s)];
        }
        return child;
    }

    // Adds `x := s` to the assignment; false on a conflicting request.
    static bool assign(std::map<int, Smoothing>& a, int x, Smoothing s) {
        auto [it, fresh] = a.emplace(x, s);
        return fresh || it->second == s;
    }

    static Assignment to_assignment(const std::map<int, Smoothing>& m) { return Assignment(m.begin(), m.end()); }

    std::vector<Assignment> branches(const Node& n) {
        const Diagram& d = n.diagram;
        const auto& orig = n.original;
        const auto fs = faces(d);
        std::size_t m = fs.front().size();
        for (const auto& f : fs) m = std::min(m, f.size());

        std::vector<Assignment> out;
        std::set<Assignment> distinct;
        auto push = [&](const std::map<int, Smoothing>& a) {
            auto as = to_assignment(a);
            if (distinct.insert(as).second) out.push_back(std::move(as));
        };

        if (m == 1) {
            for (const auto& f : fs) {
                if (f.size() != 1) continue;
                const Corner& k = f.corners.front();
                ++result_.stats.monogon_steps;
                push({{orig[static_cast<std::size_t>(k.crossing)], k.hugging_smoothing()}});
                return out;
            }
        }

        if (m == 2) {
            // Bigons reachable through opposite corners form one twist region.
            std::map<std::pair<int, int>, std::size_t> face_at;
            for (std::size_t i = 0; i < fs.size(); ++i)
                for (const auto& k : fs[i].corners) face_at[{k.crossing, k.slot}] = i;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (fs[i].size() != 2) continue;
                std::map<int, Smoothing> a;
                std::set<std::size_t> done{i};
                std::vector<std::size_t> stack{i};
                bool ok = true;
                while (!stack.empty() && ok) {
                    const Face& f = fs[stack.back()];
                    stack.pop_back();
                    for (const auto& k : f.corners) {
                        ok = ok && assign(a, orig[static_cast<std::size_t>(k.crossing)], k.hugging_smoothing());
                        const std::size_t across = face_at.at({k.crossing, (k.slot + 2) & 3});
                        if (fs[across].size() == 2 && done.insert(across).second) stack.push_back(across);
                    }
                }
                if (!ok) continue;
                ++result_.stats.bigon_branches;
                push(a);
            }
            if (!out.empty()) return out;
        }

        for (const auto& f : fs) {
            if (f.size() != m) continue;
            for (bool hug : {true, false}) {
                std::map<int, Smoothing> a;
                bool ok = true;
                for (const auto& k : f.corners) {
                    const Smoothing s = hug ? k.hugging_smoothing() : opposite(k.hugging_smoothing());
                    ok = ok && assign(a, orig[static_cast<std::size_t>(k.crossing)], s);
                }
                if (!ok) continue;
                ++result_.stats.triangle_branches;
                push(a);
            }
        }
        if (out.empty()) throw Error(ErrorKind::NotAlternating, "no admissible branch in a partial diagram");
        return out;
    }

    void visit(const Node& n) {
        if (++result_.stats.nodes > config_.node_budget)
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "explored more than " + std::to_string(config_.node_budget) + " search nodes");
        if (n.diagram.crossing_count() == 0) {
            leaf(n);
            return;
        }
        for (const auto& a : branches(n)) {
            Node child = apply(n, a);
            if (!seen_.insert(key(child)).second) {
                ++result_.stats.memo_hits;
                continue;
            }
            visit(child);
        }
    }

    const Diagram& root_;
    SearchConfig config_;
    std::vector<KauffmanState> seifert_;
    std::vector<std::array<std::uint64_t, 2>> agree_;
    std::uint64_t full_mask_ = 0;
    std::unordered_set<std::string> seen_;
    int best_circles_ = -1;
    AKResult result_;
};

}  // namespace

AKResult ak_search(const Diagram& d, const SearchConfig& config) {
    if (!is_connected(d)) throw Error(ErrorKind::NotConnected, "search needs a connected diagram");
    if (!is_alternating(d)) throw Error(ErrorKind::NotAlternating, "search needs an alternating diagram");
    AKResult r;
    if (d.crossing_count() == 0) {
        r.max_circles = 1;
        r.max_chi = 1;
        r.orientable_at_max = true;
        r.orientable_witness = KauffmanState{};
        r.stats.nodes = r.stats.leaves = 1;
    } else {
        r = Search(d, config).run();
    }
    r.k = components(d);
    if (r.nonorientable_at_max) {
        r.crosscap = 2 - r.max_chi - r.k;
    } else {
        r.crosscap = 3 - r.max_chi - r.k;
        r.genus = (2 - r.max_chi - r.k) / 2;
    }
    return r;
}

AKResult crosscap_alternating(const Diagram& d, const SearchConfig& config) { return ak_search(d, config); }

}  // namespace crosscap
