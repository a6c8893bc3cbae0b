#include "patsym/plane_tree.hpp"

#include <json.hpp>

#include <stdexcept>

namespace patsym {

namespace {

struct RawTree {
    // 1-based arbitrary node ids in creation order; 0 = absent child.
    std::vector<int> left{0}, right{0};
    int root = 0;

    int add_node() {
        left.push_back(0);
        right.push_back(0);
        return static_cast<int>(left.size()) - 1;
    }
};

// In-order walk over arbitrary ids, iterative to keep deep chains safe.
std::vector<int> inorder_ids(const std::vector<int>& left, const std::vector<int>& right,
                             int root, std::size_t node_count) {
    std::vector<int> order;
    order.reserve(node_count);
    std::vector<int> stack;
    int cur = root;
    while (cur != 0 || !stack.empty()) {
        while (cur != 0) {
            stack.push_back(cur);
            cur = left[static_cast<std::size_t>(cur)];
        }
        cur = stack.back();
        stack.pop_back();
        order.push_back(cur);
        if (order.size() > node_count) throw std::invalid_argument("tree structure contains a cycle");
        cur = right[static_cast<std::size_t>(cur)];
    }
    return order;
}

BinaryPlaneTree relabel_to_inorder(const RawTree& raw) {
    const std::size_t n = raw.left.size() - 1;
    if (n == 0) return BinaryPlaneTree();
    const std::vector<int> order = inorder_ids(raw.left, raw.right, raw.root, n);
    if (order.size() != n)
        throw std::invalid_argument("tree structure is disconnected");
    std::vector<int> index(n + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        index[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> children(n);
    for (std::size_t id = 1; id <= n; ++id) {
        const int l = raw.left[id], r = raw.right[id];
        children[static_cast<std::size_t>(index[id]) - 1] = {
            l ? index[static_cast<std::size_t>(l)] : 0, r ? index[static_cast<std::size_t>(r)] : 0};
    }
    return BinaryPlaneTree::from_children(children);
}

}  // namespace

BinaryPlaneTree BinaryPlaneTree::from_children(const std::vector<std::pair<int, int>>& children) {
    BinaryPlaneTree t;
    const int n = static_cast<int>(children.size());
    if (n == 0) return t;

    t.left_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.right_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.parent_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.lo_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.hi_.assign(static_cast<std::size_t>(n) + 1, 0);

    for (int v = 1; v <= n; ++v) {
        const auto [l, r] = children[static_cast<std::size_t>(v) - 1];
        if (l < 0 || l > n || r < 0 || r > n)
            throw std::invalid_argument("child index out of range");
        t.left_[static_cast<std::size_t>(v)] = l;
        t.right_[static_cast<std::size_t>(v)] = r;
        for (int c : {l, r}) {
            if (c == 0) continue;
            if (t.parent_[static_cast<std::size_t>(c)] != 0)
                throw std::invalid_argument("node has two parents");
            t.parent_[static_cast<std::size_t>(c)] = v;
        }
    }
    int root = 0;
    for (int v = 1; v <= n; ++v) {
        if (t.parent_[static_cast<std::size_t>(v)] == 0) {
            if (root != 0) throw std::invalid_argument("tree structure is disconnected");
            root = v;
        }
    }
    if (root == 0) throw std::invalid_argument("tree structure contains a cycle");
    t.root_ = root;

    // In-order consistency: the walk must visit 1, 2, ..., n in order.
    const std::vector<int> order = inorder_ids(t.left_, t.right_, root, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("children are not in in-order indexing");
    }

    // Subtree intervals; children precede parents along left/right chains, so
    // resolve each chain bottom-up on demand.
    for (int v = 1; v <= n; ++v) {
        int x = v;
        while (t.left_[static_cast<std::size_t>(x)] != 0) x = t.left_[static_cast<std::size_t>(x)];
        t.lo_[static_cast<std::size_t>(v)] = x;
        x = v;
        while (t.right_[static_cast<std::size_t>(x)] != 0) x = t.right_[static_cast<std::size_t>(x)];
        t.hi_[static_cast<std::size_t>(v)] = x;
    }
    return t;
}

BinaryPlaneTree perm_to_tree(const Permutation& p) {
    if (!avoids(p, pattern_132()))
        throw std::invalid_argument(
            "permutation contains 132; the tree encoding is defined on 132-avoiders only");
    const int n = p.size();
    if (n == 0) return BinaryPlaneTree();

    std::vector<std::pair<int, int>> children(static_cast<std::size_t>(n), {0, 0});
    // Split each segment at its maximum; positions are the in-order indices.
    struct Segment {
        int lo, hi, parent;
        bool as_left;
    };
    std::vector<Segment> stack{{1, n, 0, false}};
    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        int top = seg.lo;
        for (int i = seg.lo + 1; i <= seg.hi; ++i)
            if (p.at(i) > p.at(top)) top = i;
        if (seg.parent != 0) {
            auto& slots = children[static_cast<std::size_t>(seg.parent) - 1];
            (seg.as_left ? slots.first : slots.second) = top;
        }
        if (seg.lo < top) stack.push_back({seg.lo, top - 1, top, true});
        if (top < seg.hi) stack.push_back({top + 1, seg.hi, top, false});
    }
    return BinaryPlaneTree::from_children(children);
}

std::vector<int> entry_labels(const BinaryPlaneTree& t) {
    const int n = t.size();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    if (n == 0) return labels;
    struct Item {
        int v, vlo, vhi;
    };
    std::vector<Item> stack{{t.root(), 1, n}};
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        labels[static_cast<std::size_t>(it.v) - 1] = it.vhi;
        const int left_size = it.v - t.subtree_min(it.v);
        if (t.left(it.v) != 0)
            stack.push_back({t.left(it.v), it.vhi - left_size, it.vhi - 1});
        if (t.right(it.v) != 0)
            stack.push_back({t.right(it.v), it.vlo, it.vhi - left_size - 1});
    }
    return labels;
}

Permutation tree_to_perm(const BinaryPlaneTree& t) { return Permutation(entry_labels(t)); }

bool is_left_descendant(const BinaryPlaneTree& t, int a, int b) {
    if (a == b) return false;
    return t.left(b) != 0 && t.subtree_min(b) <= a && a <= b - 1;
}

bool is_right_descendant(const BinaryPlaneTree& t, int a, int b) {
    if (a == b) return false;
    return t.right(b) != 0 && b + 1 <= a && a <= t.subtree_max(b);
}

int lowest_common_ancestor(const BinaryPlaneTree& t, int a, int b) {
    int x = a;
    while (!(t.subtree_min(x) <= b && b <= t.subtree_max(x))) x = t.parent(x);
    return x;
}

std::string BinaryPlaneTree::to_text() const {
    if (empty()) return ".";
    std::string out;
    // Emit "(LR)" iteratively; negative stack entries close a node.
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == -1) {
            out += ')';
            continue;
        }
        if (v == 0) {
            out += '.';
            continue;
        }
        out += '(';
        stack.push_back(-1);
        stack.push_back(right_[static_cast<std::size_t>(v)]);
        stack.push_back(left_[static_cast<std::size_t>(v)]);
    }
    return out;
}

BinaryPlaneTree BinaryPlaneTree::parse(const std::string& text) {
    RawTree raw;
    // frames: node id under construction and how many children are filled
    struct Frame {
        int id;
        int filled;
    };
    std::vector<Frame> frames;
    int completed_root = 0;
    bool have_value = false;

    auto attach = [&](int child) {
        if (frames.empty()) {
            if (have_value) throw std::invalid_argument("trailing content after tree");
            completed_root = child;
            have_value = true;
            return;
        }
        Frame& f = frames.back();
        if (f.filled == 0)
            raw.left[static_cast<std::size_t>(f.id)] = child;
        else if (f.filled == 1)
            raw.right[static_cast<std::size_t>(f.id)] = child;
        else
            throw std::invalid_argument("node with more than two children");
        ++f.filled;
    };

    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '(') {
            frames.push_back({raw.add_node(), 0});
        } else if (c == '.') {
            attach(0);
        } else if (c == ')') {
            if (frames.empty()) throw std::invalid_argument("unbalanced ')'");
            const Frame f = frames.back();
            if (f.filled != 2) throw std::invalid_argument("node must list exactly two children");
            frames.pop_back();
            attach(f.id);
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in tree");
        }
    }
    if (!frames.empty()) throw std::invalid_argument("unbalanced '('");
    if (!have_value) throw std::invalid_argument("empty tree text");
    if (completed_root == 0) return BinaryPlaneTree();
    raw.root = completed_root;
    return relabel_to_inorder(raw);
}

std::string BinaryPlaneTree::to_json() const {
    using json = nlohmann::ordered_json;
    if (empty()) return "null";
    std::vector<json> built(static_cast<std::size_t>(size()) + 1);
    // Children have smaller subtrees; fill leaves first via reverse in-order
    // of a post-order walk. A simple two-pass over pending nodes suffices.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(size()));
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        if (left_[static_cast<std::size_t>(v)]) stack.push_back(left_[static_cast<std::size_t>(v)]);
        if (right_[static_cast<std::size_t>(v)]) stack.push_back(right_[static_cast<std::size_t>(v)]);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        json node;
        node["l"] = left_[static_cast<std::size_t>(v)]
                        ? built[static_cast<std::size_t>(left_[static_cast<std::size_t>(v)])]
                        : json(nullptr);
        node["r"] = right_[static_cast<std::size_t>(v)]
                        ? built[static_cast<std::size_t>(right_[static_cast<std::size_t>(v)])]
                        : json(nullptr);
        built[static_cast<std::size_t>(v)] = std::move(node);
    }
    return built[static_cast<std::size_t>(root_)].dump();
}

BinaryPlaneTree BinaryPlaneTree::from_json(const std::string& text) {
    using json = nlohmann::json;
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad tree json: ") + e.what());
    }
    if (parsed.is_null()) return BinaryPlaneTree();

    RawTree raw;
    struct Item {
        const json* node;
        int parent;
        bool as_left;
    };
    std::vector<Item> stack{{&parsed, 0, false}};
    int root = 0;
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const json& node = *it.node;
        if (!node.is_object() || !node.contains("l") || !node.contains("r"))
            throw std::invalid_argument("bad tree json: node must be {\"l\":..,\"r\":..} or null");
        const int id = raw.add_node();
        if (it.parent == 0)
            root = id;
        else if (it.as_left)
            raw.left[static_cast<std::size_t>(it.parent)] = id;
        else
            raw.right[static_cast<std::size_t>(it.parent)] = id;
        if (!node["l"].is_null()) stack.push_back({&node["l"], id, true});
        if (!node["r"].is_null()) stack.push_back({&node["r"], id, false});
    }
    raw.root = root;
    return relabel_to_inorder(raw);
}

}  // namespace patsym
