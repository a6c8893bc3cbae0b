#include "patsym/avoiders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "patsym/errors.hpp"
#include "patsym/parallel.hpp"

namespace patsym {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Values strictly between a and b, as a bitmask.
inline std::uint64_t between_mask(int a, int b) {
    if (b - a < 2) return 0;
    return (bit(b) - 1) & ~(bit(a + 1) - 1);
}

}  // namespace

Int catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative argument");
    return binomial(2LL * n, n) / (n + 1);
}

AvoiderStream::AvoiderStream(int n, Permutation avoided)
    : AvoiderStream(n, std::move(avoided), 0) {}

AvoiderStream::AvoiderStream(int n, Permutation avoided, int first_entry)
    : n_(n), avoided_(std::move(avoided)) {
    if (n_ < 0) throw std::invalid_argument("enumeration length must be >= 0");
    if (avoided_.empty()) throw std::invalid_argument("avoided pattern must be nonempty");
    if (n_ > 62) throw GuardError("avoider enumeration is limited to n <= 62");
    fast132_ = (avoided_ == pattern_132());

    if (n_ == 0) {
        pending_empty_ = true;
        done_ = true;
        return;
    }
    if (first_entry != 0 && (first_entry < 1 || first_entry > n_))
        throw std::invalid_argument("first entry out of range");

    all_ = bit(n_ + 1) - 2;  // bits 1..n
    forbidden_ = {0};
    minval_ = {n_ + 1};
    candidates_ = {first_entry == 0 ? all_ : bit(first_entry)};

    if (!fast132_) {
        // Bound tables for "does appending v complete an occurrence of the
        // avoided pattern ending at the new position": slot k-1 is pinned to
        // v, so each earlier slot is bounded by its closest pattern entries
        // among the previous slots plus that final one.
        const int k = avoided_.size();
        below_.assign(static_cast<std::size_t>(std::max(0, k - 1)), -1);
        above_.assign(static_cast<std::size_t>(std::max(0, k - 1)), -1);
        for (int t = 0; t + 1 < k; ++t) {
            int best_below = 0, best_above = k + 1;
            auto consider = [&](int s) {
                const int qs = avoided_.at(s + 1);
                const int qt = avoided_.at(t + 1);
                if (qs < qt && qs > best_below) {
                    best_below = qs;
                    below_[static_cast<std::size_t>(t)] = s;
                }
                if (qs > qt && qs < best_above) {
                    best_above = qs;
                    above_[static_cast<std::size_t>(t)] = s;
                }
            };
            for (int s = 0; s < t; ++s) consider(s);
            consider(k - 1);
        }
    }
}

void AvoiderStream::push_level(int value) {
    std::uint64_t nf = forbidden_.back();
    int nm = minval_.back();
    if (nm < value) nf |= between_mask(nm, value);
    nm = std::min(nm, value);
    prefix_.push_back(value);
    used_ |= bit(value);
    forbidden_.push_back(nf);
    minval_.push_back(nm);
    std::uint64_t cand = all_ & ~used_;
    if (fast132_) cand &= ~nf;
    candidates_.push_back(cand);
}

void AvoiderStream::pop_level() {
    candidates_.pop_back();
    used_ &= ~bit(prefix_.back());
    prefix_.pop_back();
    forbidden_.pop_back();
    minval_.pop_back();
}

bool AvoiderStream::completes_avoided(int value) const {
    const int k = avoided_.size();
    if (k == 1) return true;
    const int len = static_cast<int>(prefix_.size());
    if (len < k - 1) return false;

    // DFS over prefix positions for slots 0..k-2, last slot preassigned.
    std::vector<int> val(static_cast<std::size_t>(k));
    std::vector<int> pos(static_cast<std::size_t>(k - 1));
    val[static_cast<std::size_t>(k - 1)] = value;
    int t = 0;
    pos[0] = -1;
    while (t >= 0) {
        ++pos[static_cast<std::size_t>(t)];
        if (pos[static_cast<std::size_t>(t)] > len - (k - 1 - t)) {
            --t;
            continue;
        }
        const int w = prefix_[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])];
        const int bs = below_[static_cast<std::size_t>(t)];
        const int as = above_[static_cast<std::size_t>(t)];
        const int lo = bs >= 0 ? val[static_cast<std::size_t>(bs)] : 0;
        const int hi = as >= 0 ? val[static_cast<std::size_t>(as)] : n_ + 1;
        if (w <= lo || w >= hi) continue;
        val[static_cast<std::size_t>(t)] = w;
        if (t + 1 == k - 1) return true;
        ++t;
        pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t) - 1];
    }
    return false;
}

bool AvoiderStream::next(Permutation& out) {
    if (pending_empty_) {
        pending_empty_ = false;
        out = Permutation();
        return true;
    }
    if (done_) return false;
    for (;;) {
        if (static_cast<int>(prefix_.size()) == n_) {
            out = Permutation(prefix_);
            pop_level();
            return true;
        }
        std::uint64_t& cand = candidates_.back();
        if (cand == 0) {
            if (prefix_.empty()) {
                done_ = true;
                return false;
            }
            pop_level();
            continue;
        }
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (!fast132_ && completes_avoided(v)) continue;
        push_level(v);
    }
}

std::vector<Permutation> list_avoiders(int n, const Permutation& avoided) {
    std::vector<Permutation> out;
    AvoiderStream stream(n, avoided);
    Permutation p;
    while (stream.next(p)) out.push_back(p);
    return out;
}

Int total_occurrences(int n, const Permutation& q, const Permutation& r, int threads) {
    if (q.empty()) throw std::invalid_argument("pattern must be nonempty");
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (n == 0 || q.size() > n) return 0;

    if (threads <= 1 || n < 2) {
        PatternMatcher matcher(q);
        AvoiderStream stream(n, r);
        Permutation p;
        Int total = 0;
        while (stream.next(p)) total += matcher.count(p);
        return total;
    }

    // Partition by first entry; combine in first-entry order so the result is
    // identical for every thread count.
    std::vector<Int> parts(static_cast<std::size_t>(n) + 1);
    run_parallel(n, threads, [&](int i) {
        PatternMatcher matcher(q);
        AvoiderStream stream(n, r, i + 1);
        Permutation p;
        Int sub = 0;
        while (stream.next(p)) sub += matcher.count(p);
        parts[static_cast<std::size_t>(i) + 1] = std::move(sub);
    });
    Int total = 0;
    for (int v = 1; v <= n; ++v) total += parts[static_cast<std::size_t>(v)];
    return total;
}

Signature signature(const Permutation& q, int n_min, int n_max, const Permutation& r,
                    int threads) {
    if (n_min < 0 || n_min > n_max) throw std::invalid_argument("signature: bad n range");
    Signature sig;
    sig.q = q;
    sig.n_min = n_min;
    sig.n_max = n_max;
    sig.values.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) sig.values.push_back(total_occurrences(n, q, r, threads));
    return sig;
}

Rat expected_random_count(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("expected_random_count: need 0 <= k <= n");
    return Rat(binomial(n, k)) / Rat(factorial(k));
}

}  // namespace patsym
