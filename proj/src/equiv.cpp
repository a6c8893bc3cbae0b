#include "patsym/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "patsym/errors.hpp"
#include "patsym/parallel.hpp"

namespace patsym {

bool ExchangePair::has_witness_with_u(int u) const {
    return std::any_of(witnesses.begin(), witnesses.end(),
                       [u](const ExchangeWitness& w) { return w.u == u; });
}

std::vector<EquivClass> classify_patterns(int h, int n_min, int n_max, const Permutation& r,
                                          int threads, const SearchLimits& limits) {
    if (h < 1) throw std::invalid_argument("classify_patterns: h must be >= 1");
    if (n_min > n_max) throw std::invalid_argument("classify_patterns: bad n range");
    if (!limits.override_guard && (h > limits.max_h || n_max > limits.max_n))
        throw GuardError("classify_patterns: request exceeds the search guard (h <= " +
                         std::to_string(limits.max_h) + ", n <= " + std::to_string(limits.max_n) +
                         "); pass the override to force");

    std::vector<Permutation> patterns;
    {
        std::vector<int> e(static_cast<std::size_t>(h));
        std::iota(e.begin(), e.end(), 1);
        do {
            patterns.emplace_back(e);
        } while (std::next_permutation(e.begin(), e.end()));
    }

    std::vector<std::vector<Int>> sigs(patterns.size());
    run_parallel(static_cast<int>(patterns.size()), threads, [&](int i) {
        sigs[static_cast<std::size_t>(i)] =
            signature(patterns[static_cast<std::size_t>(i)], n_min, n_max, r, 1).values;
    });

    std::map<std::vector<Int>, std::vector<Permutation>> groups;
    for (std::size_t i = 0; i < patterns.size(); ++i)
        groups[sigs[i]].push_back(patterns[i]);  // patterns arrive in lex order

    std::vector<EquivClass> classes;
    classes.reserve(groups.size());
    for (auto& [sig, members] : groups) {
        EquivClass cls;
        cls.degenerate = std::all_of(sig.begin(), sig.end(), [](const Int& v) { return v == 0; });
        cls.signature = sig;
        cls.members = std::move(members);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const EquivClass& a, const EquivClass& b) { return a.members.front() < b.members.front(); });
    return classes;
}

namespace {

// 132-avoiding patterns of the given length that end in their largest entry:
// exactly the avoiders of length len-1 with the maximum appended.
std::vector<Permutation> ending_in_largest(int len) {
    std::vector<Permutation> out;
    AvoiderStream stream(len - 1, pattern_132());
    Permutation g;
    while (stream.next(g)) out.push_back(direct_sum(g, increasing(1)));
    return out;
}

}  // namespace

std::vector<ExchangePair> exchange_pairs(int h) {
    if (h < 3) throw std::invalid_argument("exchange_pairs: h must be >= 3");
    std::map<std::pair<Permutation, Permutation>, std::vector<ExchangeWitness>> dedup;
    for (int k = 1; k <= h - 2; ++k) {
        const std::vector<Permutation> qs = ending_in_largest(k);
        for (int m = 1; m <= h - 1 - k; ++m) {
            const int u = h - k - m;
            const std::vector<Permutation> ts = ending_in_largest(m);
            for (const Permutation& q : qs)
                for (const Permutation& t : ts)
                    dedup[{source_pattern(q, t, u), target_pattern(q, t, u)}].push_back(
                        ExchangeWitness{q, t, u});
        }
    }
    std::vector<ExchangePair> pairs;
    pairs.reserve(dedup.size());
    for (auto& [key, witnesses] : dedup)
        pairs.push_back(ExchangePair{key.first, key.second, std::move(witnesses)});
    return pairs;
}

namespace {

struct FoundWitness {
    Permutation q, t;
    int u = 0;
    int v = 0;
};

// {a, b} = {source, target} for some decomposition with valid blocks?
std::optional<FoundWitness> find_exchange(const Permutation& a, const Permutation& b) {
    const int h = a.size();
    for (int k = 1; k <= h - 2; ++k) {
        for (int m = 1; m <= h - 1 - k; ++m) {
            const Decomposition d{k, m, h - k - m};
            auto try_one = [&](const Permutation& as_src, const Permutation& as_tgt)
                -> std::optional<FoundWitness> {
                const auto split = match_source(as_src, d);
                if (!split || !split->q.ends_in_largest() || !split->t.ends_in_largest() ||
                    !avoids(split->q, pattern_132()) || !avoids(split->t, pattern_132()))
                    return std::nullopt;
                if (!(target_pattern(split->q, split->t, d.u) == as_tgt)) return std::nullopt;
                return FoundWitness{split->q, split->t, d.u, 0};
            };
            if (auto w = try_one(a, b)) return w;
            if (auto w = try_one(b, a)) return w;
        }
    }
    return std::nullopt;
}

// One of {a, b} is a split form and the other belongs to the same family
// (source, target, or another split with the same q, t, u)?
std::optional<FoundWitness> find_split(const Permutation& a, const Permutation& b) {
    const int h = a.size();
    auto family_member = [](const Permutation& x, const Permutation& q, const Permutation& t,
                            int u) {
        if (x == source_pattern(q, t, u) || x == target_pattern(q, t, u)) return true;
        for (int w = 1; w < u; ++w)
            if (x == split_pattern(q, t, u, w)) return true;
        return false;
    };
    for (int k = 1; k <= h - 3; ++k) {
        for (int m = 1; m <= h - 2 - k; ++m) {
            const int u = h - k - m;
            for (int v = 1; v < u; ++v) {
                auto try_one = [&](const Permutation& as_split, const Permutation& other)
                    -> std::optional<FoundWitness> {
                    const auto split = match_split(as_split, k, m, u, v);
                    if (!split || !split->q.ends_in_largest() || !split->t.ends_in_largest() ||
                        !avoids(split->q, pattern_132()) || !avoids(split->t, pattern_132()))
                        return std::nullopt;
                    if (!family_member(other, split->q, split->t, u)) return std::nullopt;
                    return FoundWitness{split->q, split->t, u, v};
                };
                if (auto w = try_one(a, b)) return w;
                if (auto w = try_one(b, a)) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string PairExplanation::describe() const {
    std::ostringstream out;
    switch (tag) {
        case Tag::inverse_trivial:
            out << "inverse-trivial: the patterns are inverses of each other";
            break;
        case Tag::exchange:
            out << "exchange: q=" << to_string(q) << " t=" << to_string(t) << " u=" << u;
            if (via_inverse) out << " (after inverting one side)";
            break;
        case Tag::exchange_split:
            out << "exchange-split: q=" << to_string(q) << " t=" << to_string(t) << " u=" << u
                << " v=" << v;
            if (via_inverse) out << " (after inverting one side)";
            break;
        case Tag::unexplained:
            out << "unexplained: equality holds on the tested range but matches no known mechanism";
            break;
    }
    return out.str();
}

PairExplanation explain_equal_pair(const Permutation& a, const Permutation& b) {
    PairExplanation ex;
    if (b == a.inverse()) {
        ex.tag = PairExplanation::Tag::inverse_trivial;
        return ex;
    }
    auto adopt = [&ex](const FoundWitness& w, PairExplanation::Tag tag, bool via_inv) {
        ex.tag = tag;
        ex.q = w.q;
        ex.t = w.t;
        ex.u = w.u;
        ex.v = w.v;
        ex.via_inverse = via_inv;
    };
    if (auto w = find_exchange(a, b)) {
        adopt(*w, PairExplanation::Tag::exchange, false);
        return ex;
    }
    if (auto w = find_exchange(a, b.inverse())) {
        adopt(*w, PairExplanation::Tag::exchange, true);
        return ex;
    }
    if (auto w = find_exchange(a.inverse(), b)) {
        adopt(*w, PairExplanation::Tag::exchange, true);
        return ex;
    }
    if (auto w = find_split(a, b)) {
        adopt(*w, PairExplanation::Tag::exchange_split, false);
        return ex;
    }
    if (auto w = find_split(a, b.inverse())) {
        adopt(*w, PairExplanation::Tag::exchange_split, true);
        return ex;
    }
    if (auto w = find_split(a.inverse(), b)) {
        adopt(*w, PairExplanation::Tag::exchange_split, true);
        return ex;
    }
    ex.tag = PairExplanation::Tag::unexplained;
    return ex;
}

PairExplanation explain_pair(const Permutation& a, const Permutation& b, int n_min, int n_max,
                             const Permutation& r, int threads) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("explain_pair: patterns must be nonempty and equally long");
    if (a == b) throw std::invalid_argument("explain_pair: patterns are identical");
    const Signature sa = signature(a, n_min, n_max, r, threads);
    const Signature sb = signature(b, n_min, n_max, r, threads);
    if (sa.values != sb.values) {
        std::ostringstream msg;
        msg << "signatures differ on n in [" << n_min << ", " << n_max << "]";
        for (std::size_t i = 0; i < sa.values.size(); ++i) {
            if (sa.values[i] != sb.values[i]) {
                msg << ": first mismatch at n=" << n_min + static_cast<int>(i) << " ("
                    << sa.values[i] << " vs " << sb.values[i] << ")";
                break;
            }
        }
        throw NotEquivalentError(msg.str());
    }
    return explain_equal_pair(a, b);
}

}  // namespace patsym
