#pragma once

#include <string>
#include <utility>
#include <vector>

#include "patsym/permutation.hpp"

namespace patsym {

// Rooted unlabeled tree in which every node has an optional left child and an
// optional right child; the handedness of an only child is structural. Node
// identity is the in-order index (1..n), so all left-subtree indices of a node
// are smaller than the node and all right-subtree indices are larger.
//
// Canonical text form:  T ::= "." | "(" T T ")"   (left child first,
// whitespace ignored). The JSON alternative nests {"l": ..., "r": ...} with
// null for an absent child.
class BinaryPlaneTree {
public:
    BinaryPlaneTree() = default;  // the empty tree

    // children[i] = (left, right) of node i+1 in in-order indexing, 0 = none.
    // Validates that the structure is a single tree whose in-order walk visits
    // 1, 2, ..., n in that order.
    static BinaryPlaneTree from_children(const std::vector<std::pair<int, int>>& children);

    int size() const { return static_cast<int>(left_.empty() ? 0 : left_.size() - 1); }
    bool empty() const { return size() == 0; }
    int root() const { return root_; }

    int left(int v) const { return left_[v]; }
    int right(int v) const { return right_[v]; }
    int parent(int v) const { return parent_[v]; }  // 0 for the root

    // In-order index interval covered by v's subtree.
    int subtree_min(int v) const { return lo_[v]; }
    int subtree_max(int v) const { return hi_[v]; }

    std::string to_text() const;
    static BinaryPlaneTree parse(const std::string& text);
    std::string to_json() const;
    static BinaryPlaneTree from_json(const std::string& text);

    bool operator==(const BinaryPlaneTree& o) const {
        return left_ == o.left_ && right_ == o.right_;
    }

private:
    // 1-based arrays; index 0 unused.
    std::vector<int> left_, right_, parent_, lo_, hi_;
    int root_ = 0;
};

// Encodes a 132-avoiding permutation as a tree: the root is the position of
// the largest entry, the left subtree encodes the prefix before it and the
// right subtree the suffix after it, recursively. Rejects permutations that
// contain 132, since only for avoiders does the shape alone determine the
// entries.
BinaryPlaneTree perm_to_tree(const Permutation& p);

// Inverse direction: label the tree (below) and read the labels in-order.
Permutation tree_to_perm(const BinaryPlaneTree& t);

// labels[i-1] is the entry associated with in-order node i: every subtree
// root carries the largest label of its subtree, the left subtree takes the
// top remaining values and the right subtree the bottom ones.
std::vector<int> entry_labels(const BinaryPlaneTree& t);

// Whether a lies in the left (resp. right) subtree of b. A node is never a
// descendant of itself.
bool is_left_descendant(const BinaryPlaneTree& t, int a, int b);
bool is_right_descendant(const BinaryPlaneTree& t, int a, int b);

// Deepest node whose subtree contains both a and b; a node counts as its own
// ancestor here.
int lowest_common_ancestor(const BinaryPlaneTree& t, int a, int b);

}  // namespace patsym
