#include "crosscap/state_kernels.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crosscap {

namespace {

inline int uf_find(std::array<std::uint8_t, 64>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

void require_exhaustive_size(const Diagram& d) {
    if (d.crossing_count() > kExhaustiveCap)
        throw Error(ErrorKind::TooLarge, "exhaustive state enumeration is capped at " +
                                             std::to_string(kExhaustiveCap) + " crossings");
}

}  // namespace

StateCircleCounter::StateCircleCounter(const Diagram& d)
    : labels_(d.arc_count()), unknots_(d.unknot_components()) {
    require_exhaustive_size(d);
    pairs_.reserve(static_cast<std::size_t>(d.crossing_count()));
    for (const auto& x : d.crossings()) {
        auto l = [&](int s) { return static_cast<std::uint8_t>(x.slots[static_cast<std::size_t>(s)] - 1); };
        pairs_.push_back(Joins{l(0), l(1), l(2), l(3), l(0), l(3), l(1), l(2)});
    }
}

int StateCircleCounter::count(StateMask state) const noexcept {
    std::array<std::uint8_t, 64> parent;
    for (int i = 0; i < labels_; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    int merges = 0;
    auto join = [&](int p, int q) {
        p = uf_find(parent, p);
        q = uf_find(parent, q);
        if (p != q) {
            parent[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(p);
            ++merges;
        }
    };
    for (std::size_t x = 0; x < pairs_.size(); ++x) {
        const Joins& j = pairs_[x];
        if ((state >> x) & 1U) {
            join(j.b0, j.b1);
            join(j.b2, j.b3);
        } else {
            join(j.a0, j.a1);
            join(j.a2, j.a3);
        }
    }
    return labels_ - merges + unknots_;
}

StateSpectrum state_spectrum(const Diagram& d, Execution exec) {
    const StateCircleCounter counter(d);
    const int c = d.crossing_count();
    const int max_v = c + 1 + d.unknot_components();
    const StateMask total = StateMask{1} << c;
    const std::size_t rows = static_cast<std::size_t>(c + 1);
    const std::size_t cols = static_cast<std::size_t>(max_v + 1);

    StateSpectrum out;
    out.crossings = c;
    out.counts.assign(rows, std::vector<std::uint64_t>(cols, 0));

    if (exec == Execution::Serial) {
        for (StateMask s = 0; s < total; ++s) {
            const int b = __builtin_popcountll(s);
            ++out.counts[static_cast<std::size_t>(c - b)][static_cast<std::size_t>(counter.count(s))];
        }
        return out;
    }

    std::vector<std::uint64_t> flat(rows * cols, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(rows * cols, 0);
#pragma omp for schedule(static) nowait
        for (long long si = 0; si < static_cast<long long>(total); ++si) {
            const auto s = static_cast<StateMask>(si);
            const int b = __builtin_popcountll(s);
            ++local[static_cast<std::size_t>(c - b) * cols + static_cast<std::size_t>(counter.count(s))];
        }
#pragma omp critical
        for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += local[i];
    }
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t v = 0; v < cols; ++v) out.counts[a][v] = flat[a * cols + v];
    return out;
}

LaurentPoly bracket_from_spectrum(const StateSpectrum& s) {
    const LaurentPoly delta(Variable::A, {{2, -1}, {-2, -1}});
    std::size_t max_v = 0;
    for (const auto& row : s.counts) max_v = std::max(max_v, row.size());
    if (max_v < 2) throw Error(ErrorKind::InvalidArgument, "empty diagram has no bracket");
    std::vector<LaurentPoly> delta_pow;
    delta_pow.emplace_back(LaurentPoly::constant(Variable::A, 1));
    for (std::size_t i = 1; i < max_v; ++i) delta_pow.push_back(delta_pow.back() * delta);

    LaurentPoly out(Variable::A);
    const int c = s.crossings;
    for (std::size_t a = 0; a < s.counts.size(); ++a) {
        const int shift = 2 * static_cast<int>(a) - c;
        for (std::size_t v = 1; v < s.counts[a].size(); ++v) {
            const auto n = s.counts[a][v];
            if (n == 0) continue;
            out += delta_pow[v - 1].scalar_shift(BigInt(n), shift);
        }
    }
    return out;
}

LaurentPoly bracket_exhaustive(const Diagram& d, Execution exec) {
    return bracket_from_spectrum(state_spectrum(d, exec));
}

MaxStateScan scan_max_states(const Diagram& d, std::span<const StateMask> excluded, Execution exec) {
    const StateCircleCounter counter(d);
    const StateMask total = StateMask{1} << d.crossing_count();
    auto is_excluded = [&](StateMask s) {
        return std::find(excluded.begin(), excluded.end(), s) != excluded.end();
    };
    auto fold = [&](MaxStateScan& acc, StateMask s, int v) {
        if (v > acc.max_circles) {
            acc = MaxStateScan{v, 1, !is_excluded(s), s};
        } else if (v == acc.max_circles) {
            ++acc.states_at_max;
            if (!acc.other_state_at_max && !is_excluded(s)) acc.other_state_at_max = true;
            acc.first_at_max = std::min(acc.first_at_max, s);
        }
    };

    MaxStateScan result;
    if (exec == Execution::Serial) {
        for (StateMask s = 0; s < total; ++s) fold(result, s, counter.count(s));
        return result;
    }
#pragma omp parallel
    {
        MaxStateScan local;
#pragma omp for schedule(static) nowait
        for (long long si = 0; si < static_cast<long long>(total); ++si) {
            const auto s = static_cast<StateMask>(si);
            fold(local, s, counter.count(s));
        }
#pragma omp critical
        {
            if (local.max_circles > result.max_circles) {
                result = local;
            } else if (local.max_circles == result.max_circles && local.states_at_max > 0) {
                result.states_at_max += local.states_at_max;
                result.other_state_at_max = result.other_state_at_max || local.other_state_at_max;
                result.first_at_max = std::min(result.first_at_max, local.first_at_max);
            }
        }
    }
    return result;
}

}  // namespace crosscap
