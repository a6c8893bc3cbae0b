#include <doctest.h>

#include "oracles.hpp"
#include "patsym/avoiders.hpp"
#include "patsym/series.hpp"

using namespace patsym;

namespace {

std::vector<Int> ints(const PowerSeries& s) { return s.integer_coefficients(); }

std::vector<Int> prefix(const std::vector<Int>& v, std::size_t len) {
    return {v.begin(), v.begin() + static_cast<long>(len)};
}

}  // namespace

TEST_CASE("primitive expansions") {
    CHECK(ints(inv_sqrt_1m4x(3)) == std::vector<Int>{1, 2, 6, 20});
    CHECK(ints(inv_sqrt3_1m4x(3)) == std::vector<Int>{1, 6, 30, 140});
    CHECK(ints(sqrt_1m4x(4)) == std::vector<Int>{1, -2, -2, -4, -10});
    CHECK(ints(geometric_4x(3)) == std::vector<Int>{1, 4, 16, 64});
    CHECK(ints(catalan_series(4)) == std::vector<Int>{1, 1, 2, 5, 14});
    for (int n = 0; n <= 30; ++n) CHECK(catalan_series(30).coeff(n) == Rat(catalan(n)));
}

TEST_CASE("series arithmetic basics") {
    const PowerSeries one = PowerSeries::constant(1, 10);
    const PowerSeries x = PowerSeries::x(10);
    CHECK((x / x) == PowerSeries::constant(1, 9));
    CHECK((x * x).coeff(2) == 1);
    CHECK((one - one) == PowerSeries(10));
    CHECK(x.shifted(2).coeff(3) == 1);
    CHECK(x.shifted(2).order() == 12);
    CHECK((PowerSeries::constant(3, 5) * Rat(1, 3)).coeff(0) == 1);

    // order propagates as the minimum of the operands
    CHECK((PowerSeries::constant(1, 7) + PowerSeries::constant(1, 4)).order() == 4);
    CHECK((PowerSeries::constant(1, 7) * PowerSeries::constant(1, 4)).order() == 4);

    CHECK_THROWS_AS(one / PowerSeries(10), std::domain_error);       // zero divisor
    CHECK_THROWS_AS(one / x, std::domain_error);                     // pole at zero
    CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries::constant(Rat(1, 2), 3).integer_coefficients(), std::logic_error);
    CHECK_THROWS_AS(x.truncated(12), std::invalid_argument);
    CHECK_THROWS_AS(x.shifted(-1), std::invalid_argument);
}

TEST_CASE("the catalan series inverts the square root") {
    const int N = 40;
    const PowerSeries lhs = PowerSeries::constant(1, N) -
                            (PowerSeries::x(N) * catalan_series(N)) * Rat(2);
    CHECK(lhs == sqrt_1m4x(N));  // 1 - 2xC(x) = sqrt(1-4x)
}

TEST_CASE("inversion totals") {
    CHECK(prefix(ints(inversion_total_series(5)), 6) == std::vector<Int>{0, 0, 1, 8, 47, 244});
    for (int n = 0; n <= 6; ++n)
        CHECK(inversion_total_series(6).coeff(n) ==
              Rat(oracle::naive_total(n, {2, 1}, {1, 3, 2})));
}

TEST_CASE("non-inversion totals") {
    CHECK(prefix(ints(noninversion_total_series(4)), 5) == std::vector<Int>{0, 0, 1, 7, 37});
    for (int n = 0; n <= 6; ++n)
        CHECK(noninversion_total_series(6).coeff(n) ==
              Rat(oracle::naive_total(n, {1, 2}, {1, 3, 2})));
}

TEST_CASE("every pair in an avoider is an inversion or a non-inversion") {
    const int N = 30;
    const auto d = ints(inversion_total_series(N));
    const auto h = ints(noninversion_total_series(N));
    for (int n = 0; n <= N; ++n)
        CHECK(d[static_cast<std::size_t>(n)] + h[static_cast<std::size_t>(n)] ==
              catalan(n) * binomial(n, 2));
}

TEST_CASE("entry totals") {
    const auto z = ints(entry_total_series(20));
    for (int n = 0; n <= 20; ++n) CHECK(z[static_cast<std::size_t>(n)] == Int(n) * catalan(n));
    CHECK(z[3] == 15);
}

TEST_CASE("213 and 231 totals: series, closed form, recurrences, brute force") {
    const int N = 30;
    const auto a = ints(total_213_series(N));
    const auto b = ints(total_231_series(N));
    CHECK(prefix(a, 8) == std::vector<Int>{0, 0, 0, 1, 11, 81, 500, 2794});
    CHECK(a == b);

    for (int n = 0; n <= 6; ++n) {
        CHECK(a[static_cast<std::size_t>(n)] == Int(oracle::naive_total(n, {2, 1, 3}, {1, 3, 2})));
        CHECK(b[static_cast<std::size_t>(n)] == Int(oracle::naive_total(n, {2, 3, 1}, {1, 3, 2})));
    }

    CHECK(total_213_closed_form(3) == 1);
    CHECK(total_213_closed_form(4) == 11);
    CHECK(total_213_closed_form(5) == 81);
    for (int n = 3; n <= N; ++n) CHECK(total_213_closed_form(n) == a[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(total_213_closed_form(2), std::invalid_argument);

    CHECK(total_213_by_recurrence(N) == a);
    CHECK(total_231_by_recurrence(N) == b);
}

TEST_CASE("the 213 series also matches its radical closed form") {
    // x/(2(1-4x)^2) + (x-1)/(2(1-4x)^{3/2}) + 1/(2(1-4x))
    const int N = 40;
    const PowerSeries g = geometric_4x(N);
    const PowerSeries x = PowerSeries::x(N);
    const PowerSeries radical = (x * g * g) * Rat(1, 2) +
                                ((x - PowerSeries::constant(1, N)) * inv_sqrt3_1m4x(N)) * Rat(1, 2) +
                                g * Rat(1, 2);
    CHECK(ints(radical) == ints(total_213_series(N)));
}

TEST_CASE("series and recurrences stay exact at higher order") {
    const int N = 80;
    const auto a = ints(total_213_series(N));   // throws if any denominator survived
    const auto b = ints(total_231_series(N));
    CHECK(a == b);
    CHECK(total_213_by_recurrence(N) == a);
}
