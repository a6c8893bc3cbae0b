#pragma once

#include <optional>

#include "patsym/permutation.hpp"

namespace patsym {

// Role decomposition of a composed pattern: k entries from q, m from t and a
// final increasing run of u entries. All three parts are nonempty.
struct Decomposition {
    int k = 1;
    int m = 1;
    int u = 1;
    int h() const { return k + m + u; }
    bool operator==(const Decomposition&) const = default;
};

// The two sides of the exchange identity, built from blocks q and t (each
// required to end in its largest entry wherever the identity is invoked):
//   source: (q skew-sum t) direct-sum increasing(u)   -- q-block, t-block, top run last
//   target: (q direct-sum increasing(u)) skew-sum t   -- q-block, top run, t-block last
Permutation source_pattern(const Permutation& q, const Permutation& t, int u);
Permutation target_pattern(const Permutation& q, const Permutation& t, int u);

// ((q direct-sum increasing(v)) skew-sum t) direct-sum increasing(u - v), the
// intermediate form obtained by splitting the top run (1 <= v < u).
Permutation split_pattern(const Permutation& q, const Permutation& t, int u, int v);

struct BlockSplit {
    Permutation q;
    Permutation t;
};

// Recover the blocks when `pat` has the stated shape for the given
// decomposition; value-layout checks only, no end-in-largest requirement.
std::optional<BlockSplit> match_source(const Permutation& pat, const Decomposition& d);
std::optional<BlockSplit> match_target(const Permutation& pat, const Decomposition& d);
std::optional<BlockSplit> match_split(const Permutation& pat, int k, int m, int u, int v);

}  // namespace patsym
