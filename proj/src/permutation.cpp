#include "patsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace patsym {

namespace {

void validate_entries(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : entries) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation entries must be 1..n, each exactly once");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    validate_entries(entries_);
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: negative length");
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(entries_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(entries_[static_cast<std::size_t>(i)]) - 1] = i + 1;
    return Permutation(std::move(inv));
}

bool Permutation::ends_in_largest() const {
    return !entries_.empty() && entries_.back() == size();
}

Permutation parse_permutation(const std::string& text) {
    const bool has_sep = text.find_first_of(", \t") != std::string::npos;
    std::vector<int> entries;
    if (has_sep) {
        std::string token;
        std::string normalized = text;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream nin(normalized);
        while (nin >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                entries.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse permutation entry '" + token + "'");
            }
        }
    } else {
        std::string trimmed = text;
        trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                     [](unsigned char c) { return std::isspace(c); }),
                      trimmed.end());
        if (!trimmed.empty()) {
            for (char c : trimmed) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument(
                        "compact permutation form accepts digits 1..9 only; "
                        "use comma or space separation for n >= 10");
                entries.push_back(c - '0');
            }
        }
    }
    return Permutation(std::move(entries));
}

std::string to_string(const Permutation& p) {
    std::string out;
    const bool compact = p.size() <= 9;
    for (int i = 1; i <= p.size(); ++i) {
        if (!compact && i > 1) out += ' ';
        out += std::to_string(p.at(i));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

std::string to_string(const Occurrence& occ) {
    std::string out;
    for (std::size_t i = 0; i < occ.indices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(occ.indices[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Occurrence& occ) { return os << to_string(occ); }

PatternMatcher::PatternMatcher(Permutation pattern) : q_(std::move(pattern)) {
    if (q_.empty()) throw std::invalid_argument("pattern must be nonempty");
    const int k = q_.size();
    below_.assign(static_cast<std::size_t>(k), -1);
    above_.assign(static_cast<std::size_t>(k), -1);
    for (int t = 0; t < k; ++t) {
        int best_below = 0, best_above = k + 1;
        for (int s = 0; s < t; ++s) {
            const int qs = q_.entries()[static_cast<std::size_t>(s)];
            const int qt = q_.entries()[static_cast<std::size_t>(t)];
            if (qs < qt && qs > best_below) {
                best_below = qs;
                below_[static_cast<std::size_t>(t)] = s;
            }
            if (qs > qt && qs < best_above) {
                best_above = qs;
                above_[static_cast<std::size_t>(t)] = s;
            }
        }
    }
}

namespace {

// Lexicographic enumeration of index tuples with prefix pruning: position t
// only accepts values strictly between the already-chosen values that bound
// q_t from below and above, which is exactly order-isomorphism of the prefix.
// Visitor returns false to abort the walk.
bool search_occurrences(const std::vector<int>& p, int k, const std::vector<int>& below,
                        const std::vector<int>& above,
                        const std::function<bool(const std::vector<int>&)>& on_hit) {
    const int n = static_cast<int>(p.size());
    if (k > n) return true;
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::vector<int> val(static_cast<std::size_t>(k));

    // levels: pos[t] ranges over (pos[t-1], n - (k - t)] in 0-based indices
    int t = 0;
    pos[0] = -1;
    while (t >= 0) {
        ++pos[static_cast<std::size_t>(t)];
        if (pos[static_cast<std::size_t>(t)] > n - (k - t)) {
            --t;
            continue;
        }
        const int v = p[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])];
        const int lo = below[static_cast<std::size_t>(t)] >= 0
                           ? val[static_cast<std::size_t>(below[static_cast<std::size_t>(t)])]
                           : 0;
        const int hi = above[static_cast<std::size_t>(t)] >= 0
                           ? val[static_cast<std::size_t>(above[static_cast<std::size_t>(t)])]
                           : n + 1;
        if (v <= lo || v >= hi) continue;
        val[static_cast<std::size_t>(t)] = v;
        if (t + 1 == k) {
            if (!on_hit(pos)) return false;
        } else {
            ++t;
            pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t) - 1];
        }
    }
    return true;
}

}  // namespace

Int PatternMatcher::count(const Permutation& p) const {
    const int n = p.size();
    const int k = q_.size();
    if (k > n) return 0;
    // The per-permutation count is bounded by C(n,k); use a machine counter
    // when that bound provably fits, otherwise fall back to Int.
    if (binomial(n, k) < Int(1) << 62) {
        unsigned long long c = 0;
        search_occurrences(p.entries(), k, below_, above_, [&](const std::vector<int>&) {
            ++c;
            return true;
        });
        return Int(c);
    }
    Int c = 0;
    search_occurrences(p.entries(), k, below_, above_, [&](const std::vector<int>&) {
        ++c;
        return true;
    });
    return c;
}

bool PatternMatcher::contained_in(const Permutation& p) const {
    bool found = false;
    search_occurrences(p.entries(), q_.size(), below_, above_, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

void PatternMatcher::for_each(const Permutation& p,
                              const std::function<bool(const Occurrence&)>& visit) const {
    search_occurrences(p.entries(), q_.size(), below_, above_, [&](const std::vector<int>& pos) {
        Occurrence occ;
        occ.indices.reserve(pos.size());
        for (int j : pos) occ.indices.push_back(j + 1);
        return visit(occ);
    });
}

Int count_occurrences(const Permutation& p, const Permutation& q) {
    return PatternMatcher(q).count(p);
}

bool contains(const Permutation& p, const Permutation& q) {
    return PatternMatcher(q).contained_in(p);
}

bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

void for_each_occurrence(const Permutation& p, const Permutation& q,
                         const std::function<bool(const Occurrence&)>& visit) {
    PatternMatcher(q).for_each(p, visit);
}

std::vector<Occurrence> list_occurrences(const Permutation& p, const Permutation& q) {
    std::vector<Occurrence> out;
    for_each_occurrence(p, q, [&](const Occurrence& occ) {
        out.push_back(occ);
        return true;
    });
    return out;
}

Permutation direct_sum(const Permutation& q, const Permutation& t) {
    if (q.empty() && t.empty())
        throw std::invalid_argument("direct_sum: both arguments are empty");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(q.size() + t.size()));
    for (int v : q.entries()) e.push_back(v);
    for (int v : t.entries()) e.push_back(v + q.size());
    return Permutation(std::move(e));
}

Permutation skew_sum(const Permutation& q, const Permutation& t) {
    if (q.empty() && t.empty())
        throw std::invalid_argument("skew_sum: both arguments are empty");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(q.size() + t.size()));
    for (int v : q.entries()) e.push_back(v + t.size());
    for (int v : t.entries()) e.push_back(v);
    return Permutation(std::move(e));
}

Permutation increasing(int u) {
    if (u < 1) throw std::invalid_argument("increasing: u must be >= 1");
    return Permutation::identity(u);
}

const Permutation& pattern_132() {
    static const Permutation p(std::vector<int>{1, 3, 2});
    return p;
}

}  // namespace patsym
