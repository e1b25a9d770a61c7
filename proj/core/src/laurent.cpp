#include "ksb/laurent.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <string>

namespace ksb {

LaurentPoly::LaurentPoly(long lowest_exponent, std::vector<BigInt> coefficients)
    : lowest_(lowest_exponent), coefficients_(std::move(coefficients)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, long exponent) {
    return LaurentPoly(exponent, {coefficient});
}

void LaurentPoly::normalize() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    auto first = std::find_if(coefficients_.begin(), coefficients_.end(),
                              [](const BigInt& c) { return c != 0; });
    lowest_ += static_cast<long>(first - coefficients_.begin());
    coefficients_.erase(coefficients_.begin(), first);
    if (coefficients_.empty()) lowest_ = 0;
}

BigInt LaurentPoly::coefficient(long exponent) const {
    if (is_zero() || exponent < lowest_ || exponent > highest_exponent()) return 0;
    return coefficients_[static_cast<std::size_t>(exponent - lowest_)];
}

LaurentPoly LaurentPoly::truncated_below(long min_exponent) const {
    if (is_zero() || min_exponent <= lowest_) return *this;
    if (min_exponent > highest_exponent()) return {};
    return LaurentPoly(min_exponent,
                       std::vector<BigInt>(coefficients_.begin() + (min_exponent - lowest_),
                                           coefficients_.end()));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const long low = std::min(lowest_, other.lowest_);
    const long high = std::max(highest_exponent(), other.highest_exponent());
    std::vector<BigInt> sum(static_cast<std::size_t>(high - low + 1));
    for (long e = low; e <= high; ++e) {
        sum[static_cast<std::size_t>(e - low)] = coefficient(e) + other.coefficient(e);
    }
    return LaurentPoly(low, std::move(sum));
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<BigInt> negated(coefficients_.size());
    for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -coefficients_[i];
    return LaurentPoly(lowest_, std::move(negated));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> product(coefficients_.size() + other.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
            product[i + j] += coefficients_[i] * other.coefficients_[j];
        }
    }
    return LaurentPoly(lowest_ + other.lowest_, std::move(product));
}

LaurentPoly LaurentPoly::operator*(const BigInt& scalar) const {
    std::vector<BigInt> scaled(coefficients_.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = coefficients_[i] * scalar;
    return LaurentPoly(lowest_, std::move(scaled));
}

LaurentPoly binomial_series_at_infinity(long exponent, int sign, long min_exponent) {
    if (sign != 1 && sign != -1) throw DomainError("binomial_series_at_infinity: sign must be +-1");
    // (1 + s x)^a = (s x)^a (1 + s/x)^a: the x^e coefficient is C(a, a-e) s^e, e <= a.
    if (min_exponent > exponent) return {};
    long low = min_exponent;
    if (exponent >= 0) low = std::max(low, 0L);
    std::vector<BigInt> coefficients(static_cast<std::size_t>(exponent - low + 1));
    for (long e = low; e <= exponent; ++e) {
        BigInt c = binomial(exponent, exponent - e);
        if (sign < 0 && (e % 2 != 0)) c = -c;
        coefficients[static_cast<std::size_t>(e - low)] = std::move(c);
    }
    return LaurentPoly(low, std::move(coefficients));
}

BigInt constant_term_of_product(const BigInt& scale, long shift, long plus_exp, long minus_exp) {
    // Every factor is a series in 1/x headed by x^{top}; only terms whose
    // exponents can still sum to 0 are kept.
    const long top = shift + plus_exp + minus_exp;
    if (top < 0 || scale == 0) return 0;
    const LaurentPoly plus = binomial_series_at_infinity(plus_exp, +1, plus_exp - top);
    const LaurentPoly minus = binomial_series_at_infinity(minus_exp, -1, minus_exp - top);
    const LaurentPoly product = (plus * minus).truncated_below(-shift);
    return scale * product.coefficient(-shift);
}

BigInt constant_term(const ClosedFormSeries& series, long n, long i) {
    const long t = series.t;
    const long s = series.s;
    if (n < 1 || i < 0 || i > n || t < 0) {
        throw DomainError("constant_term: need n >= 1, 0 <= i <= n, t >= 0 (n=" + std::to_string(n) +
                          ", i=" + std::to_string(i) + ", t=" + std::to_string(t) + ")");
    }
    const BigInt unit = (t % 2 == 0) ? -1 : 1;  // (-1)^{t+1}
    switch (series.form) {
    case SeriesForm::EvenDiameter:
        return constant_term_of_product(unit, 0, n - i - t, i - t - 1);
    case SeriesForm::OddDiameter:
        return constant_term_of_product(unit, 0, n - i - t - 1, i - t - 1);
    case SeriesForm::Consecutive: {
        if (s < 0 || s >= t) throw DomainError("constant_term: consecutive form needs 0 <= s < t");
        const BigInt outer = ((t - s + 1) % 2 == 0) ? 1 : -1;
        BigInt total = 0;
        for (long j = s; j <= t; ++j) {
            total += constant_term_of_product(outer * binomial(t, j), 2 * (j - s), n - i - j + s,
                                              i - j + s - 1);
        }
        return total;
    }
    }
    throw DomainError("constant_term: unknown series form");
}

}  // namespace ksb
