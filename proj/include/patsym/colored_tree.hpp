#pragma once

#include <string>
#include <vector>

#include "patsym/numbers.hpp"
#include "patsym/pattern_forms.hpp"
#include "patsym/plane_tree.hpp"

namespace patsym {

enum class Side { source, target };

// A binary plane tree with an increasing set of black in-order indices whose
// entry labels form a source- or target-side pattern for the stored (k,m,u)
// decomposition. The side is inferred on construction: the source shape ends
// in the largest black entry, the target shape does not, so the two never
// overlap.
class ColoredTree {
public:
    ColoredTree(const BinaryPlaneTree& tree, std::vector<int> black, Decomposition d);

    // Convenience entry point from a host permutation: the tree is its
    // encoding and the black set is the occurrence's positions (equal to
    // in-order indices). Rejects occ when its entries do not form a source-
    // or target-side pattern for d.
    static ColoredTree from_permutation(const Permutation& p, const Occurrence& occ,
                                        Decomposition d);

    const BinaryPlaneTree& tree() const { return tree_; }
    const std::vector<int>& black() const { return black_; }
    const Decomposition& decomposition() const { return d_; }
    Side side() const { return side_; }

    // Standardized labels at the black nodes, and the recovered blocks.
    const Permutation& black_pattern() const { return pattern_; }
    const Permutation& part_q() const { return q_; }
    const Permutation& part_t() const { return t_; }

    // "tree;black,indices;k,m,u" -- the side is recoverable from the content.
    std::string to_text() const;
    static ColoredTree from_text(const std::string& text);

    bool operator==(const ColoredTree& o) const {
        return tree_ == o.tree_ && black_ == o.black_ && d_ == o.d_;
    }

private:
    BinaryPlaneTree tree_;
    std::vector<int> black_;
    Decomposition d_;
    Side side_ = Side::source;
    Permutation pattern_, q_, t_;
};

// Dichotomy steering the map, for a source-side tree with anchors
//   B = k-th black, A = (k+m)-th black, C = last black:
// either A hangs in the right subtree of B (direct case), or the lowest
// common ancestor of B and A is a non-black pivot holding B on its left and
// A on its right (pivot case).
enum class CaseKind { direct_swap, pivot_swap };

struct CaseTag {
    CaseKind kind = CaseKind::direct_swap;
    int pivot = 0;  // in-order index, pivot case only
    bool operator==(const CaseTag&) const = default;
};

CaseTag classify(const ColoredTree& ct);

// The bijection between source-colored and target-colored trees. Direct
// case: swap the right subtrees of B and C. Pivot case: swap the right
// subtrees of the pivot and C, and recolor the pivot black in place of C.
// Black vertices keep their color through the move; indices are recomputed
// from the new tree. Both maps require part_q and part_t to end in their
// largest entries and reject trees of the wrong side.
ColoredTree bijection_forward(const ColoredTree& ct);
ColoredTree bijection_inverse(const ColoredTree& ct);

struct BijectionLimits {
    int max_n_three = 12;  // patterns of length 3
    int max_n_long = 11;   // longer patterns
    bool override_guard = false;
    int threads = 1;
};

// verify_bijection exhaustively checks the map on all colored trees of size n
// built from blocks q, t and top-run length u.
struct BijectionReport {
    int n = 0;
    Decomposition d;
    Permutation source_pat, target_pat;

    Int source_count = 0;  // colored source-side trees encountered
    Int target_count = 0;  // colored target-side trees encountered
    Int total_source = 0;  // independent brute-force total for the source pattern
    Int total_target = 0;  // likewise for the target pattern
    Int direct_count = 0;
    Int pivot_count = 0;

    bool injective = true;
    bool surjective = true;
    bool round_trips = true;            // inverse(forward(x)) == x and forward(inverse(y)) == y
    bool left_subtrees_preserved = true;  // of the first k+m blacks, through the forward map
    bool cases_consistent = true;  // direct images have a black ancestor of all blacks, pivot images do not
    bool direct_left_clause = true;  // in the direct case, the k-th black left-descends from the last
    bool counts_match = true;        // source_count/target_count equal the brute-force totals

    bool passed() const;
    std::string to_text() const;
};

BijectionReport verify_bijection(int n, const Permutation& q, const Permutation& t, int u,
                                 const BijectionLimits& limits = {});

}  // namespace patsym
