#pragma once

#include <string>
#include <vector>

#include "patsym/avoiders.hpp"
#include "patsym/pattern_forms.hpp"
#include "patsym/permutation.hpp"

namespace patsym {

// Patterns of a common length grouped by identical signature over the tested
// n-range. The degenerate class collects every pattern containing the avoided
// pattern; those have the all-zero signature.
struct EquivClass {
    std::vector<Permutation> members;  // lexicographic order
    std::vector<Int> signature;
    bool degenerate = false;
};

struct SearchLimits {
    int max_h = 6;
    int max_n = 12;
    bool override_guard = false;
};

// Partition of all h! patterns by exact signature on [n_min, n_max]. Classes
// are ordered by their lexicographically first member. Agreement on a finite
// range is evidence, not proof; reports must state the range.
std::vector<EquivClass> classify_patterns(int h, int n_min, int n_max,
                                          const Permutation& r = pattern_132(), int threads = 1,
                                          const SearchLimits& limits = {});

struct ExchangeWitness {
    Permutation q;
    Permutation t;
    int u = 1;
};

// One source/target pattern pair produced by the exchange construction,
// together with every (q,t,u) decomposition that yields it.
struct ExchangePair {
    Permutation source;
    Permutation target;
    std::vector<ExchangeWitness> witnesses;
    bool has_witness_with_u(int u) const;
};

// All pairs {source_pattern(q,t,u), target_pattern(q,t,u)} of total length h
// over 132-avoiding blocks q, t that end in their largest entry, deduplicated.
// The sub-count of pairs admitting a u = 1 witness is catalan(h-2).
std::vector<ExchangePair> exchange_pairs(int h);

// Why two patterns share a signature. Tags are tried in order: plain
// inversion, the exchange construction (directly or after inverting one
// side), then the split form of the exchange construction.
struct PairExplanation {
    enum class Tag { inverse_trivial, exchange, exchange_split, unexplained };
    Tag tag = Tag::unexplained;
    Permutation q, t;
    int u = 0;
    int v = 0;               // exchange_split only
    bool via_inverse = false;  // matched after inverting one side
    std::string describe() const;
};

// Verifies that the signatures agree on [n_min, n_max] (throws
// NotEquivalentError otherwise), then searches for an explanation.
PairExplanation explain_pair(const Permutation& a, const Permutation& b, int n_min, int n_max,
                             const Permutation& r = pattern_132(), int threads = 1);

// Explanation search alone, for callers that have already established equal
// signatures (e.g. members of one equivalence class).
PairExplanation explain_equal_pair(const Permutation& a, const Permutation& b);

}  // namespace patsym
