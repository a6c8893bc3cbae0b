#include "patsym/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "patsym/avoiders.hpp"

namespace patsym {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coef_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

PowerSeries PowerSeries::constant(const Rat& c, int order) {
    PowerSeries s(order);
    s.coef_[0] = c;
    return s;
}

PowerSeries PowerSeries::x(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coef_[1] = 1;
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot extend a series by truncation");
    PowerSeries s(order);
    std::copy(coef_.begin(), coef_.begin() + order + 1, s.coef_.begin());
    return s;
}

PowerSeries PowerSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shift amount must be >= 0");
    PowerSeries s(order() + k);
    std::copy(coef_.begin(), coef_.end(), s.coef_.begin() + k);
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.coef_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.coef_[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return s;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries s(order());
    for (int i = 0; i <= order(); ++i) s.coef_[static_cast<std::size_t>(i)] = -coef_[static_cast<std::size_t>(i)];
    return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
        Rat acc = 0;
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        s.coef_[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return s;
}

PowerSeries PowerSeries::operator*(const Rat& scalar) const {
    PowerSeries s(order());
    for (int i = 0; i <= order(); ++i) s.coef_[static_cast<std::size_t>(i)] = coef_[static_cast<std::size_t>(i)] * scalar;
    return s;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    // Cancel the divisor's x-valuation first; the dividend must share it.
    int v = 0;
    while (v <= b.order() && b.coeff(v) == 0) ++v;
    if (v > b.order()) throw std::domain_error("division by the zero series");
    for (int i = 0; i < v; ++i)
        if (i <= a.order() && a.coeff(i) != 0)
            throw std::domain_error("series quotient is not a power series (pole at 0)");

    const int order = std::min(a.order(), b.order()) - v;
    if (order < 0) throw std::domain_error("series order too small for this division");
    PowerSeries s(order);
    for (int i = 0; i <= order; ++i) {
        Rat acc = a.coeff(i + v);
        for (int j = 0; j < i; ++j) acc -= s.coef_[static_cast<std::size_t>(j)] * b.coeff(i - j + v);
        s.coef_[static_cast<std::size_t>(i)] = acc / b.coeff(v);
    }
    return s;
}

std::vector<Int> PowerSeries::integer_coefficients() const {
    std::vector<Int> out;
    out.reserve(coef_.size());
    for (const Rat& c : coef_) {
        if (denominator(c) != 1)
            throw std::logic_error("series coefficient is not an integer");
        out.push_back(numerator(c));
    }
    return out;
}

PowerSeries geometric_4x(int order) {
    PowerSeries s(order);
    Int pow = 1;
    for (int i = 0; i <= order; ++i, pow *= 4) s.coeff(i) = Rat(pow);
    return s;
}

PowerSeries inv_sqrt_1m4x(int order) {
    PowerSeries s(order);
    for (int i = 0; i <= order; ++i) s.coeff(i) = Rat(binomial(2LL * i, i));
    return s;
}

PowerSeries inv_sqrt3_1m4x(int order) {
    PowerSeries s(order);
    for (int i = 0; i <= order; ++i) s.coeff(i) = Rat((2 * Int(i) + 1) * binomial(2LL * i, i));
    return s;
}

PowerSeries sqrt_1m4x(int order) {
    PowerSeries s(order);
    s.coeff(0) = 1;
    for (int i = 1; i <= order; ++i) s.coeff(i) = Rat(-2 * catalan(i - 1));
    return s;
}

PowerSeries catalan_series(int order) {
    const int pad = order + 1;
    const PowerSeries num = PowerSeries::constant(1, pad) - sqrt_1m4x(pad);
    return num / (PowerSeries::x(pad) * Rat(2));
}

PowerSeries inversion_total_series(int order) {
    const int pad = order + 1;
    const PowerSeries tail = inv_sqrt_1m4x(pad) - catalan_series(pad);
    return (PowerSeries::x(pad) * geometric_4x(pad) * tail).truncated(order);
}

PowerSeries noninversion_total_series(int order) {
    const int pad = order + 2;
    const PowerSeries first = geometric_4x(pad) * Rat(1, 2);
    const PowerSeries one = PowerSeries::constant(1, pad);
    const PowerSeries num = one - (one - PowerSeries::x(pad)) * inv_sqrt_1m4x(pad);
    const PowerSeries rest = num / (PowerSeries::x(pad) * Rat(2));
    return (first + rest).truncated(order);
}

PowerSeries entry_total_series(int order) {
    return inv_sqrt_1m4x(order) - catalan_series(order);
}

namespace {

PowerSeries one_minus_2xC(int order) {
    return PowerSeries::constant(1, order) -
           (PowerSeries::x(order) * catalan_series(order)) * Rat(2);
}

}  // namespace

PowerSeries total_213_series(int order) {
    const int pad = order + 2;
    const PowerSeries C = catalan_series(pad);
    const PowerSeries D = inversion_total_series(pad);
    return ((PowerSeries::x(pad) * D * C) / one_minus_2xC(pad)).truncated(order);
}

PowerSeries total_231_series(int order) {
    const int pad = order + 2;
    const PowerSeries Z = entry_total_series(pad);
    const PowerSeries H = noninversion_total_series(pad);
    const PowerSeries num = PowerSeries::x(pad) * Z * Z + PowerSeries::x(pad) * H * Z;
    return (num / one_minus_2xC(pad)).truncated(order);
}

Int total_213_closed_form(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "closed form holds for n >= 3; the totals for n = 0, 1, 2 are all 0");
    return (Int(n) + 4) * (Int(1) << (2 * n - 3)) -
           (2 * Int(n) + 1) * binomial(2LL * n - 1, n - 1) +
           (2 * Int(n) - 1) * binomial(2LL * n - 3, n - 2);
}

namespace {

std::vector<Int> catalan_table(int order) {
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) c.push_back(catalan(i));
    return c;
}

}  // namespace

std::vector<Int> total_213_by_recurrence(int order) {
    const std::vector<Int> c = catalan_table(order);
    const std::vector<Int> d = inversion_total_series(order).integer_coefficients();
    std::vector<Int> a(static_cast<std::size_t>(order) + 1, Int(0));
    // Split at the position i of the largest entry: the pattern sits wholly
    // left of it, wholly right of it, or ends in it (one inversion on the
    // left plus the maximum).
    for (int n = 3; n <= order; ++n) {
        Int acc = 0;
        for (int i = 1; i <= n; ++i) acc += a[static_cast<std::size_t>(i) - 1] * c[static_cast<std::size_t>(n - i)];
        for (int i = 1; i <= n; ++i) acc += c[static_cast<std::size_t>(i) - 1] * a[static_cast<std::size_t>(n - i)];
        for (int i = 3; i <= n; ++i) acc += d[static_cast<std::size_t>(i) - 1] * c[static_cast<std::size_t>(n - i)];
        a[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return a;
}

std::vector<Int> total_231_by_recurrence(int order) {
    const std::vector<Int> c = catalan_table(order);
    const std::vector<Int> h = noninversion_total_series(order).integer_coefficients();
    std::vector<Int> b(static_cast<std::size_t>(order) + 1, Int(0));
    // As above, plus the two straddling shapes: the largest entry acting as
    // the pattern's largest with one entry to its right, and a non-inversion
    // on the left paired with an entry on the right.
    for (int n = 3; n <= order; ++n) {
        Int acc = 0;
        for (int i = 1; i <= n; ++i) acc += b[static_cast<std::size_t>(i) - 1] * c[static_cast<std::size_t>(n - i)];
        for (int i = 1; i <= n; ++i) acc += c[static_cast<std::size_t>(i) - 1] * b[static_cast<std::size_t>(n - i)];
        for (int i = 2; i <= n - 1; ++i)
            acc += Int(i - 1) * Int(n - i) * c[static_cast<std::size_t>(i) - 1] * c[static_cast<std::size_t>(n - i)];
        for (int i = 3; i <= n - 1; ++i)
            acc += h[static_cast<std::size_t>(i) - 1] * c[static_cast<std::size_t>(n - i)] * Int(n - i);
        b[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return b;
}

}  // namespace patsym
