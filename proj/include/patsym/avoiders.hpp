#pragma once

#include <cstdint>
#include <vector>

#include "patsym/numbers.hpp"
#include "patsym/permutation.hpp"

namespace patsym {

// catalan(n) = C(2n,n)/(n+1); counts both the 132-avoiding permutations of
// length n and the binary plane trees on n nodes.
Int catalan(int n);

// Streams the r-avoiding permutations of length n in lexicographic order,
// each exactly once. The walk extends prefixes value by value and prunes a
// prefix as soon as it contains r, so the n! non-avoiders are never visited.
// For r = 132 the prune test is incremental: appending v is illegal exactly
// when some earlier entry pair straddles v, which a per-level forbidden-value
// mask answers in O(1). Streams are single-consumer.
class AvoiderStream {
public:
    AvoiderStream(int n, Permutation avoided = pattern_132());
    // Restricts the stream to permutations with the given first entry; used
    // to partition the avoider set across workers.
    AvoiderStream(int n, Permutation avoided, int first_entry);

    bool next(Permutation& out);

private:
    void push_level(int value);
    void pop_level();
    bool completes_avoided(int value) const;

    int n_ = 0;
    Permutation avoided_;
    bool fast132_ = false;
    bool pending_empty_ = false;
    bool done_ = false;
    std::uint64_t all_ = 0;
    std::uint64_t used_ = 0;
    std::vector<int> prefix_;
    std::vector<std::uint64_t> candidates_;  // values still to try per level
    std::vector<std::uint64_t> forbidden_;   // 132 fast path, state before each level
    std::vector<int> minval_;                // prefix minimum before each level
    std::vector<int> below_, above_;         // general path bound tables (last slot pinned)
};

std::vector<Permutation> list_avoiders(int n, const Permutation& avoided = pattern_132());

// Total number of q-occurrences summed over all r-avoiding permutations of
// length n. Counted per permutation and summed; with threads > 1 the avoider
// set is partitioned by first entry and the partial sums are combined in
// first-entry order, so the result does not depend on the thread count.
Int total_occurrences(int n, const Permutation& q, const Permutation& r = pattern_132(),
                      int threads = 1);

// values[j] = total_occurrences(n_min + j, q, r); the key used for
// equivalence classing.
struct Signature {
    Permutation q;
    int n_min = 0;
    int n_max = -1;
    std::vector<Int> values;
};

Signature signature(const Permutation& q, int n_min, int n_max,
                    const Permutation& r = pattern_132(), int threads = 1);

// Average number of length-k patterns in a uniformly random n-permutation:
// C(n,k)/k!, exactly.
Rat expected_random_count(int n, int k);

}  // namespace patsym
