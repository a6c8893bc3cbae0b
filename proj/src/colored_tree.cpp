#include "patsym/colored_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "patsym/avoiders.hpp"
#include "patsym/errors.hpp"
#include "patsym/parallel.hpp"

namespace patsym {

namespace {

Permutation standardize(const std::vector<int>& values) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks;
    ranks.reserve(values.size());
    for (int v : values) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(ranks));
}

}  // namespace

ColoredTree::ColoredTree(const BinaryPlaneTree& tree, std::vector<int> black, Decomposition d)
    : tree_(tree), black_(std::move(black)), d_(d) {
    if (tree_.empty()) throw std::invalid_argument("colored tree must be nonempty");
    if (d_.k < 1 || d_.m < 1 || d_.u < 1)
        throw std::invalid_argument("decomposition parts must all be >= 1");
    if (static_cast<int>(black_.size()) != d_.h())
        throw std::invalid_argument("number of black vertices must equal k+m+u");
    for (std::size_t i = 0; i < black_.size(); ++i) {
        if (black_[i] < 1 || black_[i] > tree_.size())
            throw std::invalid_argument("black index out of range");
        if (i > 0 && black_[i] <= black_[i - 1])
            throw std::invalid_argument("black indices must be strictly increasing");
    }

    const std::vector<int> labels = entry_labels(tree_);
    std::vector<int> black_labels;
    black_labels.reserve(black_.size());
    for (int idx : black_) black_labels.push_back(labels[static_cast<std::size_t>(idx) - 1]);
    pattern_ = standardize(black_labels);

    if (auto s = match_source(pattern_, d_)) {
        side_ = Side::source;
        q_ = std::move(s->q);
        t_ = std::move(s->t);
    } else if (auto s = match_target(pattern_, d_)) {
        side_ = Side::target;
        q_ = std::move(s->q);
        t_ = std::move(s->t);
    } else {
        throw std::invalid_argument(
            "black vertices form neither the source nor the target pattern for (k,m,u)");
    }
}

ColoredTree ColoredTree::from_permutation(const Permutation& p, const Occurrence& occ,
                                          Decomposition d) {
    // In-order index equals position, so the occurrence positions are the
    // black indices directly.
    return ColoredTree(perm_to_tree(p), occ.indices, d);
}

std::string ColoredTree::to_text() const {
    std::ostringstream out;
    out << tree_.to_text() << ';';
    for (std::size_t i = 0; i < black_.size(); ++i) {
        if (i) out << ',';
        out << black_[i];
    }
    out << ';' << d_.k << ',' << d_.m << ',' << d_.u;
    return out.str();
}

ColoredTree ColoredTree::from_text(const std::string& text) {
    const auto first = text.find(';');
    const auto second = text.find(';', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("colored tree text must be 'tree;blacks;k,m,u'");
    const BinaryPlaneTree tree = BinaryPlaneTree::parse(text.substr(0, first));

    auto parse_ints = [](const std::string& s) {
        std::vector<int> out;
        std::string item;
        std::istringstream in(s);
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse integer '" + item + "'");
            }
        }
        return out;
    };

    const std::vector<int> blacks = parse_ints(text.substr(first + 1, second - first - 1));
    const std::vector<int> kmu = parse_ints(text.substr(second + 1));
    if (kmu.size() != 3) throw std::invalid_argument("decomposition must be 'k,m,u'");
    return ColoredTree(tree, blacks, Decomposition{kmu[0], kmu[1], kmu[2]});
}

CaseTag classify(const ColoredTree& ct) {
    if (ct.side() != Side::source)
        throw std::invalid_argument("classify expects a source-side colored tree");
    const auto& tr = ct.tree();
    const auto& d = ct.decomposition();
    const int anchor_b = ct.black()[static_cast<std::size_t>(d.k) - 1];
    const int anchor_a = ct.black()[static_cast<std::size_t>(d.k + d.m) - 1];
    if (is_right_descendant(tr, anchor_a, anchor_b)) return CaseTag{CaseKind::direct_swap, 0};
    const int pivot = lowest_common_ancestor(tr, anchor_b, anchor_a);
    // For a genuine source coloring the remaining option is a proper split.
    if (!is_left_descendant(tr, anchor_b, pivot) || !is_right_descendant(tr, anchor_a, pivot))
        throw std::logic_error("colored tree violates the case dichotomy");
    return CaseTag{CaseKind::pivot_swap, pivot};
}

namespace {

struct MapTrace {
    CaseTag tag;
    std::vector<int> new_index;  // old in-order index -> new in-order index
    int recolored_from = 0;      // old index losing color (pivot case)
    int recolored_to = 0;        // old index gaining color (pivot case)
};

bool subtree_contains(const BinaryPlaneTree& t, int sub_root, int x) {
    return sub_root != 0 && t.subtree_min(sub_root) <= x && x <= t.subtree_max(sub_root);
}

// Exchanges the right subtrees of a and b (either may be empty) and returns
// the relabeled tree plus the old-index -> new-index map.
std::pair<BinaryPlaneTree, std::vector<int>> swap_right_subtrees(const BinaryPlaneTree& t,
                                                                 int a, int b) {
    if (a == b) throw std::logic_error("cannot swap a right subtree with itself");
    if (subtree_contains(t, t.right(a), b) || subtree_contains(t, t.right(b), a))
        throw std::logic_error("right subtrees to swap are not disjoint");

    const int n = t.size();
    std::vector<int> left(static_cast<std::size_t>(n) + 1), right(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        left[static_cast<std::size_t>(v)] = t.left(v);
        right[static_cast<std::size_t>(v)] = t.right(v);
    }
    std::swap(right[static_cast<std::size_t>(a)], right[static_cast<std::size_t>(b)]);

    // Recompute in-order on the modified id graph.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack;
    int cur = t.root();
    while (cur != 0 || !stack.empty()) {
        while (cur != 0) {
            stack.push_back(cur);
            cur = left[static_cast<std::size_t>(cur)];
        }
        cur = stack.back();
        stack.pop_back();
        order.push_back(cur);
        cur = right[static_cast<std::size_t>(cur)];
    }
    if (static_cast<int>(order.size()) != n)
        throw std::logic_error("subtree swap corrupted the tree");

    std::vector<int> new_index(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> children(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        const int l = left[static_cast<std::size_t>(v)];
        const int r = right[static_cast<std::size_t>(v)];
        children[static_cast<std::size_t>(new_index[static_cast<std::size_t>(v)]) - 1] = {
            l ? new_index[static_cast<std::size_t>(l)] : 0,
            r ? new_index[static_cast<std::size_t>(r)] : 0};
    }
    return {BinaryPlaneTree::from_children(children), std::move(new_index)};
}

void require_block_shapes(const ColoredTree& ct) {
    if (!ct.part_q().ends_in_largest() || !ct.part_t().ends_in_largest())
        throw std::invalid_argument(
            "the map is defined only when both blocks end in their largest entry");
}

ColoredTree rebuilt(const BinaryPlaneTree& tree, const std::vector<int>& new_index,
                    const std::vector<int>& old_black, int drop, int add, Decomposition d) {
    std::vector<int> blacks;
    blacks.reserve(old_black.size());
    for (int idx : old_black)
        if (idx != drop) blacks.push_back(new_index[static_cast<std::size_t>(idx)]);
    if (add != 0) blacks.push_back(new_index[static_cast<std::size_t>(add)]);
    std::sort(blacks.begin(), blacks.end());
    return ColoredTree(tree, std::move(blacks), d);
}

ColoredTree forward_impl(const ColoredTree& ct, MapTrace* trace) {
    if (ct.side() != Side::source)
        throw std::invalid_argument("bijection_forward expects a source-side colored tree");
    require_block_shapes(ct);

    const auto& d = ct.decomposition();
    const auto& blacks = ct.black();
    const int last = blacks.back();
    const CaseTag tag = classify(ct);

    int swap_at = 0, drop = 0, add = 0;
    if (tag.kind == CaseKind::direct_swap) {
        swap_at = blacks[static_cast<std::size_t>(d.k) - 1];
    } else {
        swap_at = tag.pivot;
        if (std::binary_search(blacks.begin(), blacks.end(), swap_at))
            throw std::logic_error("pivot vertex must not be black");
        drop = last;
        add = swap_at;
    }

    auto [tree, new_index] = swap_right_subtrees(ct.tree(), swap_at, last);
    ColoredTree result = rebuilt(tree, new_index, blacks, drop, add, d);
    if (result.side() != Side::target || !(result.part_q() == ct.part_q()) ||
        !(result.part_t() == ct.part_t()))
        throw std::logic_error("forward image is not the matching target-side coloring");
    if (trace) {
        trace->tag = tag;
        trace->new_index = std::move(new_index);
        trace->recolored_from = drop;
        trace->recolored_to = add;
    }
    return result;
}

bool black_ancestor_of_all(const ColoredTree& ct) {
    const auto& tr = ct.tree();
    for (int b : ct.black()) {
        bool all = true;
        for (int other : ct.black()) {
            if (other == b) continue;
            if (!(tr.subtree_min(b) <= other && other <= tr.subtree_max(b))) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

ColoredTree inverse_impl(const ColoredTree& ct) {
    if (ct.side() != Side::target)
        throw std::invalid_argument("bijection_inverse expects a target-side colored tree");
    require_block_shapes(ct);

    const auto& d = ct.decomposition();
    const auto& blacks = ct.black();

    if (black_ancestor_of_all(ct)) {
        // Direct-case image: the ancestor black is the one with the largest
        // label, i.e. the (k+u)-th; undo by swapping the same right subtrees.
        const int u_b = blacks[static_cast<std::size_t>(d.k) - 1];
        const int u_c = blacks[static_cast<std::size_t>(d.k + d.u) - 1];
        auto [tree, new_index] = swap_right_subtrees(ct.tree(), u_b, u_c);
        ColoredTree result = rebuilt(tree, new_index, blacks, 0, 0, d);
        if (result.side() != Side::source || !(result.part_q() == ct.part_q()) ||
            !(result.part_t() == ct.part_t()))
            throw std::logic_error("inverse image is not the matching source-side coloring");
        return result;
    }

    // Pivot-case image: the (k+1)-st black was the recolored pivot; the
    // vertex to re-color is the lowest common ancestor of that pivot and the
    // last black.
    const int u_x = blacks[static_cast<std::size_t>(d.k)];
    const int u_a = blacks.back();
    const int u_c = lowest_common_ancestor(ct.tree(), u_x, u_a);
    if (u_c == u_x || std::binary_search(blacks.begin(), blacks.end(), u_c))
        throw std::logic_error("pivot-case inverse found an inconsistent ancestor");
    auto [tree, new_index] = swap_right_subtrees(ct.tree(), u_x, u_c);
    ColoredTree result = rebuilt(tree, new_index, blacks, u_x, u_c, d);
    if (result.side() != Side::source || !(result.part_q() == ct.part_q()) ||
        !(result.part_t() == ct.part_t()))
        throw std::logic_error("inverse image is not the matching source-side coloring");
    return result;
}

// The left subtree of old node b must be carried over unchanged: same nodes,
// same shape, related through the index map.
bool left_subtree_preserved(const BinaryPlaneTree& before, const BinaryPlaneTree& after,
                            const std::vector<int>& new_index, int b) {
    std::vector<int> stack{b};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const int nv = new_index[static_cast<std::size_t>(v)];
        const int l = before.left(v);
        const int nl = after.left(nv);
        if ((l == 0) != (nl == 0)) return false;
        if (l != 0) {
            if (new_index[static_cast<std::size_t>(l)] != nl) return false;
            stack.push_back(l);
        }
        if (v != b) {  // the root's right subtree is allowed to move
            const int r = before.right(v);
            const int nr = after.right(nv);
            if ((r == 0) != (nr == 0)) return false;
            if (r != 0) {
                if (new_index[static_cast<std::size_t>(r)] != nr) return false;
                stack.push_back(r);
            }
        }
    }
    return true;
}

}  // namespace

ColoredTree bijection_forward(const ColoredTree& ct) { return forward_impl(ct, nullptr); }

ColoredTree bijection_inverse(const ColoredTree& ct) { return inverse_impl(ct); }

bool BijectionReport::passed() const {
    return injective && surjective && round_trips && left_subtrees_preserved &&
           cases_consistent && direct_left_clause && counts_match &&
           source_count == target_count;
}

std::string BijectionReport::to_text() const {
    std::ostringstream out;
    out << "n=" << n << " source=" << to_string(source_pat) << " target=" << to_string(target_pat)
        << " (k,m,u)=(" << d.k << ',' << d.m << ',' << d.u << ")\n"
        << "  |source side| = " << source_count << " (direct " << direct_count << ", pivot "
        << pivot_count << "), brute-force total " << total_source << "\n"
        << "  |target side| = " << target_count << ", brute-force total " << total_target << "\n"
        << "  injective: " << (injective ? "yes" : "NO")
        << "  surjective: " << (surjective ? "yes" : "NO")
        << "  round trips: " << (round_trips ? "yes" : "NO") << "\n"
        << "  left subtrees of first k+m blacks preserved: "
        << (left_subtrees_preserved ? "yes" : "NO") << "\n"
        << "  case/ancestor consistency: " << (cases_consistent ? "yes" : "NO")
        << "  direct-case left clause: " << (direct_left_clause ? "yes" : "NO")
        << "  counts match: " << (counts_match ? "yes" : "NO") << "\n"
        << "  verdict: " << (passed() ? "PASS" : "FAIL");
    return out.str();
}

BijectionReport verify_bijection(int n, const Permutation& q, const Permutation& t, int u,
                                 const BijectionLimits& limits) {
    if (q.empty() || t.empty() || u < 1)
        throw std::invalid_argument("verify_bijection: q, t must be nonempty and u >= 1");
    if (!q.ends_in_largest() || !t.ends_in_largest())
        throw std::invalid_argument("verify_bijection: q and t must end in their largest entry");

    BijectionReport rep;
    rep.n = n;
    rep.d = Decomposition{q.size(), t.size(), u};
    rep.source_pat = source_pattern(q, t, u);
    rep.target_pat = target_pattern(q, t, u);

    const int h = rep.d.h();
    const int limit = h == 3 ? limits.max_n_three : limits.max_n_long;
    if (n > limit && !limits.override_guard)
        throw GuardError("verify_bijection: n exceeds the exhaustive guard (" +
                         std::to_string(limit) + "); pass the override to force");
    if (n < h) {
        rep.counts_match = true;  // nothing to enumerate, totals are zero
        return rep;
    }

    std::unordered_set<std::string> images;
    PatternMatcher source_matcher(rep.source_pat);
    PatternMatcher target_matcher(rep.target_pat);

    AvoiderStream stream(n, pattern_132());
    Permutation p;
    while (stream.next(p)) {
        const BinaryPlaneTree tree = perm_to_tree(p);
        source_matcher.for_each(p, [&](const Occurrence& occ) {
            const ColoredTree ct(tree, occ.indices, rep.d);
            rep.source_count += 1;

            MapTrace trace;
            const ColoredTree image = forward_impl(ct, &trace);
            (trace.tag.kind == CaseKind::direct_swap ? rep.direct_count : rep.pivot_count) += 1;

            if (black_ancestor_of_all(image) != (trace.tag.kind == CaseKind::direct_swap))
                rep.cases_consistent = false;
            if (trace.tag.kind == CaseKind::direct_swap &&
                !is_left_descendant(ct.tree(), ct.black()[static_cast<std::size_t>(rep.d.k) - 1],
                                    ct.black().back()))
                rep.direct_left_clause = false;

            for (int j = 0; j < rep.d.k + rep.d.m; ++j) {
                if (!left_subtree_preserved(ct.tree(), image.tree(), trace.new_index,
                                            ct.black()[static_cast<std::size_t>(j)])) {
                    rep.left_subtrees_preserved = false;
                    break;
                }
            }

            if (!(bijection_inverse(image) == ct)) rep.round_trips = false;
            if (!images.insert(image.to_text()).second) rep.injective = false;
            return true;
        });
    }

    // Independent enumeration of the target side, plus its round trip.
    std::size_t matched = 0;
    AvoiderStream tstream(n, pattern_132());
    while (tstream.next(p)) {
        const BinaryPlaneTree tree = perm_to_tree(p);
        target_matcher.for_each(p, [&](const Occurrence& occ) {
            const ColoredTree ct(tree, occ.indices, rep.d);
            rep.target_count += 1;
            if (!(bijection_forward(bijection_inverse(ct)) == ct)) rep.round_trips = false;
            if (images.count(ct.to_text())) ++matched;
            return true;
        });
    }
    rep.surjective = (Int(matched) == rep.target_count) && (Int(images.size()) == rep.target_count);

    rep.total_source = total_occurrences(n, rep.source_pat, pattern_132(), limits.threads);
    rep.total_target = total_occurrences(n, rep.target_pat, pattern_132(), limits.threads);
    rep.counts_match = rep.source_count == rep.total_source && rep.target_count == rep.total_target;
    return rep;
}

}  // namespace patsym
