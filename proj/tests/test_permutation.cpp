#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "patsym/numbers.hpp"
#include "patsym/permutation.hpp"

using namespace patsym;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

std::vector<int> occ_indices(const Occurrence& o) { return o.indices; }

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    return Permutation(std::move(e));
}

}  // namespace

TEST_CASE("parsing accepts compact, comma and space forms") {
    CHECK(P("214653").entries() == std::vector<int>{2, 1, 4, 6, 5, 3});
    CHECK(P("2,1,4,6,5,3") == P("214653"));
    CHECK(P("2 1 4 6 5 3") == P("214653"));
    CHECK(P("10 2 3 4 5 6 7 8 9 1").size() == 10);
    CHECK(P("1").size() == 1);
    CHECK(P("").empty());

    CHECK_THROWS_AS(P("103254"), std::invalid_argument);  // digit 0 in compact form
    CHECK_THROWS_AS(P("1 1"), std::invalid_argument);
    CHECK_THROWS_AS(P("1 3"), std::invalid_argument);  // not a bijection on 1..n
    CHECK_THROWS_AS(P("abc"), std::invalid_argument);
    CHECK_THROWS_AS(P("2,x,1"), std::invalid_argument);
}

TEST_CASE("printing round trips and switches form at n = 10") {
    CHECK(to_string(P("214653")) == "214653");
    const Permutation big = P("10 2 3 4 5 6 7 8 9 1");
    CHECK(to_string(big) == "10 2 3 4 5 6 7 8 9 1");
    CHECK(parse_permutation(to_string(big)) == big);
}

TEST_CASE("count_occurrences matches the worked examples") {
    CHECK(count_occurrences(P("214653"), P("231")) == 2);
    CHECK(count_occurrences(P("214653"), P("4321")) == 0);
    CHECK(count_occurrences(P("214653"), P("214653")) == 1);
    CHECK(count_occurrences(P("53241"), P("53241")) == 1);
    CHECK(count_occurrences(P("214653"), P("1")) == 6);
    CHECK(count_occurrences(P("21"), P("123")) == 0);  // pattern longer than host
    CHECK_THROWS_AS(count_occurrences(P("123"), P("")), std::invalid_argument);
}

TEST_CASE("avoids and contains") {
    CHECK(avoids(P("214653"), P("4321")));
    CHECK_FALSE(avoids(P("214653"), P("231")));
    CHECK_FALSE(avoids(P("132"), P("132")));
    CHECK(contains(P("132"), P("132")));
}

TEST_CASE("avoidance agrees with the count across all small hosts") {
    // contains() takes an early-exit path; pin it to the full count
    for (const auto& p : oracle::all_permutations(5)) {
        const Permutation pp{p};
        for (const auto& q : oracle::all_permutations(3)) {
            const Permutation qq{q};
            CHECK(avoids(pp, qq) == (count_occurrences(pp, qq) == 0));
        }
    }
}

TEST_CASE("list_occurrences emits lexicographic index order") {
    const auto occs = list_occurrences(P("214653"), P("231"));
    REQUIRE(occs.size() == 2);
    CHECK(occ_indices(occs[0]) == std::vector<int>{3, 4, 6});
    CHECK(occ_indices(occs[1]) == std::vector<int>{3, 5, 6});

    const auto inc = list_occurrences(P("123"), P("12"));
    REQUIRE(inc.size() == 3);
    CHECK(occ_indices(inc[0]) == std::vector<int>{1, 2});
    CHECK(occ_indices(inc[1]) == std::vector<int>{1, 3});
    CHECK(occ_indices(inc[2]) == std::vector<int>{2, 3});

    CHECK(list_occurrences(P("321"), P("12")).empty());
    CHECK(to_string(occs[0]) == "3,4,6");
}

TEST_CASE("occurrence listing agrees with the subset-scan oracle") {
    for (const auto& p : oracle::all_permutations(6)) {
        const Permutation pp{p};
        for (const char* qs : {"231", "132", "12", "321", "2143"}) {
            const Permutation q = P(qs);
            const auto got = list_occurrences(pp, q);
            const auto want = oracle::naive_occurrences(p, q.entries());
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].indices == want[i]);
        }
    }
}

TEST_CASE("inverse") {
    CHECK(P("231").inverse() == P("312"));
    CHECK(P("132").inverse() == P("132"));
    CHECK(P("3142").inverse() == P("2413"));
    for (const auto& p : oracle::all_permutations(5)) {
        const Permutation pp{p};
        CHECK(pp.inverse().inverse() == pp);
    }
}

TEST_CASE("counting is invariant under simultaneous inversion") {
    for (const auto& p : oracle::all_permutations(5)) {
        const Permutation pp{p};
        for (const auto& q : oracle::all_permutations(3)) {
            const Permutation qq{q};
            CHECK(count_occurrences(pp, qq) == count_occurrences(pp.inverse(), qq.inverse()));
        }
    }
}

TEST_CASE("pattern counts over all patterns of length k sum to C(n,k)") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 5; ++trial) {
        const Permutation p = random_permutation(8, rng);
        for (int k : {2, 3, 4}) {
            Int sum = 0;
            for (const auto& q : oracle::all_permutations(k)) sum += count_occurrences(p, Permutation{q});
            CHECK(sum == binomial(8, k));
        }
    }
}

TEST_CASE("count matches the oracle on every length-6 host") {
    for (const auto& p : oracle::all_permutations(6)) {
        const Permutation pp{p};
        for (const char* qs : {"231", "1234", "321", "3142"}) {
            const Permutation q = P(qs);
            CHECK(count_occurrences(pp, q) == Int(oracle::naive_count(p, q.entries())));
        }
    }
}

TEST_CASE("count matches the oracle on sampled length-9 hosts") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Permutation p = random_permutation(9, rng);
        for (const char* qs : {"213", "4321", "23451"}) {
            const Permutation q = P(qs);
            CHECK(count_occurrences(p, q) == Int(oracle::naive_count(p.entries(), q.entries())));
        }
    }
}

TEST_CASE("direct and skew sums") {
    CHECK(direct_sum(P("3142"), P("132")) == P("3142576"));
    CHECK(direct_sum(P("1"), P("1")) == P("12"));
    CHECK(direct_sum(P("12"), increasing(2)) == P("1234"));
    CHECK(skew_sum(P("3142"), P("132")) == P("6475132"));
    CHECK(skew_sum(P("1"), P("1")) == P("21"));
    CHECK(skew_sum(P("12"), P("1")) == P("231"));
    CHECK(direct_sum(Permutation{}, P("1")) == P("1"));
    CHECK(skew_sum(P("21"), Permutation{}) == P("21"));
    CHECK_THROWS_AS(direct_sum(Permutation{}, Permutation{}), std::invalid_argument);
    CHECK_THROWS_AS(skew_sum(Permutation{}, Permutation{}), std::invalid_argument);
}

TEST_CASE("increasing pattern") {
    CHECK(increasing(1) == P("1"));
    CHECK(increasing(2) == P("12"));
    CHECK(increasing(3) == P("123"));
    CHECK_THROWS_AS(increasing(0), std::invalid_argument);
}

TEST_CASE("sum and skew-sum length/block structure") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Permutation q = random_permutation(1 + static_cast<int>(rng() % 5), rng);
        const Permutation t = random_permutation(1 + static_cast<int>(rng() % 5), rng);
        const Permutation ds = direct_sum(q, t);
        const Permutation ss = skew_sum(q, t);
        CHECK(ds.size() == q.size() + t.size());
        CHECK(ss.size() == q.size() + t.size());
        for (int i = 1; i <= q.size(); ++i)
            for (int j = q.size() + 1; j <= ds.size(); ++j) {
                CHECK(ds.at(i) < ds.at(j));
                CHECK(ss.at(i) > ss.at(j));
            }
        // same length and entry multiset for the two composition orders
        const int u = 1 + static_cast<int>(rng() % 3);
        CHECK(direct_sum(skew_sum(q, t), increasing(u)).size() ==
              skew_sum(direct_sum(q, increasing(u)), t).size());
    }
}

TEST_CASE("ends_in_largest") {
    CHECK(P("3124").ends_in_largest());
    CHECK(P("1").ends_in_largest());
    CHECK_FALSE(P("21").ends_in_largest());
    CHECK_FALSE(Permutation{}.ends_in_largest());
}
