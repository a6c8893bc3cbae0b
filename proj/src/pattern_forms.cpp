#include "patsym/pattern_forms.hpp"

#include <stdexcept>

namespace patsym {

Permutation source_pattern(const Permutation& q, const Permutation& t, int u) {
    return direct_sum(skew_sum(q, t), increasing(u));
}

Permutation target_pattern(const Permutation& q, const Permutation& t, int u) {
    return skew_sum(direct_sum(q, increasing(u)), t);
}

Permutation split_pattern(const Permutation& q, const Permutation& t, int u, int v) {
    if (v < 1 || v >= u) throw std::invalid_argument("split_pattern: need 1 <= v < u");
    return direct_sum(skew_sum(direct_sum(q, increasing(v)), t), increasing(u - v));
}

namespace {

std::optional<Permutation> take_block(const Permutation& pat, int from, int len, int shift) {
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int v = pat.at(from + i) - shift;
        if (v < 1 || v > len) return std::nullopt;
        vals.push_back(v);
    }
    return Permutation(std::move(vals));  // bijection check rejects repeats
}

bool run_is(const Permutation& pat, int from, int len, int first_value) {
    for (int i = 0; i < len; ++i)
        if (pat.at(from + i) != first_value + i) return false;
    return true;
}

}  // namespace

std::optional<BlockSplit> match_source(const Permutation& pat, const Decomposition& d) {
    if (d.k < 1 || d.m < 1 || d.u < 1 || pat.size() != d.h()) return std::nullopt;
    // layout: q-block on values m+1..m+k, t-block on 1..m, top run last
    if (!run_is(pat, d.k + d.m + 1, d.u, d.k + d.m + 1)) return std::nullopt;
    auto q = take_block(pat, 1, d.k, d.m);
    auto t = take_block(pat, d.k + 1, d.m, 0);
    if (!q || !t) return std::nullopt;
    return BlockSplit{std::move(*q), std::move(*t)};
}

std::optional<BlockSplit> match_target(const Permutation& pat, const Decomposition& d) {
    if (d.k < 1 || d.m < 1 || d.u < 1 || pat.size() != d.h()) return std::nullopt;
    // layout: q-block on values m+1..m+k, top run in the middle, t-block last
    if (!run_is(pat, d.k + 1, d.u, d.k + d.m + 1)) return std::nullopt;
    auto q = take_block(pat, 1, d.k, d.m);
    auto t = take_block(pat, d.k + d.u + 1, d.m, 0);
    if (!q || !t) return std::nullopt;
    return BlockSplit{std::move(*q), std::move(*t)};
}

std::optional<BlockSplit> match_split(const Permutation& pat, int k, int m, int u, int v) {
    if (k < 1 || m < 1 || v < 1 || v >= u || pat.size() != k + m + u) return std::nullopt;
    // layout: q-block, run k+m+1..k+m+v, t-block, run k+m+v+1..k+m+u
    if (!run_is(pat, k + 1, v, k + m + 1)) return std::nullopt;
    if (!run_is(pat, k + v + m + 1, u - v, k + m + v + 1)) return std::nullopt;
    auto q = take_block(pat, 1, k, m);
    auto t = take_block(pat, k + v + 1, m, 0);
    if (!q || !t) return std::nullopt;
    return BlockSplit{std::move(*q), std::move(*t)};
}

}  // namespace patsym
