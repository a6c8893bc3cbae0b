#pragma once

#include <vector>

#include "patsym/numbers.hpp"

namespace patsym {

// Truncated formal power series with exact rational coefficients. The
// truncation order is explicit and propagates as the minimum of the operand
// orders; division cancels a common power of x when the divisor has no
// constant term.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // the zero series
    static PowerSeries constant(const Rat& c, int order);
    static PowerSeries x(int order);

    int order() const { return static_cast<int>(coef_.size()) - 1; }
    const Rat& coeff(int i) const { return coef_[i]; }
    Rat& coeff(int i) { return coef_[i]; }

    PowerSeries truncated(int order) const;
    PowerSeries shifted(int k) const;  // multiply by x^k, k >= 0

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    PowerSeries operator*(const Rat& s) const;
    PowerSeries operator-() const;

    bool operator==(const PowerSeries&) const = default;

    // Throws unless every coefficient is an integer; used when extracting
    // counting sequences, all of which must come out integral.
    std::vector<Int> integer_coefficients() const;

private:
    std::vector<Rat> coef_;  // indices 0..order
};

// Primitive expansions with closed-form coefficients; everything stays exact.
PowerSeries geometric_4x(int order);     // (1-4x)^(-1):    4^n
PowerSeries sqrt_1m4x(int order);        // (1-4x)^(1/2):   1, then -2*catalan(n-1)
PowerSeries inv_sqrt_1m4x(int order);    // (1-4x)^(-1/2):  C(2n,n)
PowerSeries inv_sqrt3_1m4x(int order);   // (1-4x)^(-3/2):  (2n+1)*C(2n,n)
PowerSeries catalan_series(int order);   // (1 - sqrt(1-4x)) / (2x)

// Counting series over the 132-avoiding permutations of each length:
//   inversion_total_series      total number of 21-patterns
//   noninversion_total_series   total number of 12-patterns
//   entry_total_series          total number of entries, n * catalan(n)
//   total_213_series            total number of 213-patterns
//   total_231_series            total number of 231-patterns
// The 231 series is built from its own decomposition (entry and
// non-inversion counts around the largest entry), not by copying the 213
// series, so their coefficientwise equality is a real check.
PowerSeries inversion_total_series(int order);
PowerSeries noninversion_total_series(int order);
PowerSeries entry_total_series(int order);
PowerSeries total_213_series(int order);
PowerSeries total_231_series(int order);

// Closed form for the 213 totals, valid for n >= 3 (the totals for
// n = 0, 1, 2 are all zero and are rejected here rather than folded in):
//   (n+4)*2^(2n-3) - (2n+1)*C(2n-1,n-1) + (2n-1)*C(2n-3,n-2)
Int total_213_closed_form(int n);

// The same sequences from their recurrences: a split at the position of the
// largest entry, with the pattern either wholly left of it, wholly right of
// it, or using it as its final/largest entry (plus, for 231, the straddling
// case counted through non-inversions). Returns indices 0..order.
std::vector<Int> total_213_by_recurrence(int order);
std::vector<Int> total_231_by_recurrence(int order);

}  // namespace patsym
