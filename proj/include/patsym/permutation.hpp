#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "patsym/numbers.hpp"

namespace patsym {

// A permutation of {1..n} in one-line notation. The same type doubles as a
// pattern when used as the needle of an occurrence query. Values are
// immutable after construction and safe to share across threads.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);  // validates a bijection on 1..n

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-based access, matching the usual p_1 p_2 ... p_n indexing.
    int at(int position) const { return entries_[static_cast<std::size_t>(position) - 1]; }

    const std::vector<int>& entries() const { return entries_; }

    Permutation inverse() const;
    bool ends_in_largest() const;  // nonempty and last entry equals size()

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

// Text form: comma/space separated one-line notation; a compact digit string
// such as "214653" is accepted only for n <= 9. Printing mirrors this: the
// compact form for n <= 9, space separation otherwise.
Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Positions (1-based, strictly increasing) of one pattern occurrence.
struct Occurrence {
    std::vector<int> indices;
    bool operator==(const Occurrence&) const = default;
};
std::string to_string(const Occurrence& occ);
std::ostream& operator<<(std::ostream& os, const Occurrence& occ);

// Number of index subsets of p whose entries appear in the same relative
// order as q. Index tuples are enumerated lexicographically and a prefix is
// abandoned as soon as it stops matching the corresponding pattern prefix.
// q must be nonempty; the count is 0 whenever q is longer than p.
Int count_occurrences(const Permutation& p, const Permutation& q);
bool contains(const Permutation& p, const Permutation& q);
bool avoids(const Permutation& p, const Permutation& q);

// Visits every occurrence in lexicographic index order. Return false from
// the visitor to stop early.
void for_each_occurrence(const Permutation& p, const Permutation& q,
                         const std::function<bool(const Occurrence&)>& visit);
std::vector<Occurrence> list_occurrences(const Permutation& p, const Permutation& q);

// Reusable matcher for a fixed pattern; caches the per-prefix bound tables so
// that scanning many host permutations avoids repeated setup.
class PatternMatcher {
public:
    explicit PatternMatcher(Permutation pattern);

    const Permutation& pattern() const { return q_; }
    Int count(const Permutation& p) const;
    bool contained_in(const Permutation& p) const;
    void for_each(const Permutation& p, const std::function<bool(const Occurrence&)>& visit) const;

private:
    Permutation q_;
    // For pattern position t, the earlier position holding the largest entry
    // below q_t (resp. the smallest entry above), or -1 when none exists.
    std::vector<int> below_;
    std::vector<int> above_;
};

// Direct sum: q followed by t with t's entries shifted above q's.
Permutation direct_sum(const Permutation& q, const Permutation& t);
// Skew sum: q shifted above t's entries, followed by t unchanged.
Permutation skew_sum(const Permutation& q, const Permutation& t);
// The increasing pattern 1 2 ... u (u >= 1).
Permutation increasing(int u);

const Permutation& pattern_132();

}  // namespace patsym
