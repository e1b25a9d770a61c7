#pragma once

#include "ksb/bigint.hpp"

#include <vector>

namespace ksb {

/// Finite Laurent polynomial with exact integer coefficients, stored densely
/// from the lowest exponent upwards. The zero polynomial has no coefficients;
/// otherwise the lowest and highest stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long lowest_exponent, std::vector<BigInt> coefficients);

    static LaurentPoly monomial(const BigInt& coefficient, long exponent);

    bool is_zero() const { return coefficients_.empty(); }
    long lowest_exponent() const { return lowest_; }
    long highest_exponent() const {
        return lowest_ + static_cast<long>(coefficients_.size()) - 1;
    }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }

    BigInt coefficient(long exponent) const;
    BigInt constant_term() const { return coefficient(0); }

    /// Drops every term with exponent below `min_exponent`.
    LaurentPoly truncated_below(long min_exponent) const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator-(const LaurentPoly& other) const { return *this + (-other); }
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator*(const BigInt& scalar) const;

    bool operator==(const LaurentPoly& other) const = default;

private:
    void normalize();

    long lowest_ = 0;
    std::vector<BigInt> coefficients_;
};

/// (1 + sign*x)^exponent expanded around x = infinity, i.e. as a series in
/// 1/x, keeping only the terms with exponent >= min_exponent. For a
/// nonnegative exponent this is the ordinary binomial expansion (truncated);
/// for a negative exponent it is the head of an infinite series.
/// `sign` must be +1 or -1.
LaurentPoly binomial_series_at_infinity(long exponent, int sign, long min_exponent);

/// Closed forms whose constant term equals an eigenvalue lambda_i of the
/// weighted distance matrices built by the weights module.
enum class SeriesForm {
    /// (-1)^{t+1} (1+x)^{n-i-t} (1-x)^{i-t-1}
    EvenDiameter,
    /// (-1)^{t+1} (1-x)^{i-t-1} (1+x)^{n-i-t-1}
    OddDiameter,
    /// (-1)^{t-s+1} sum_{j=s..t} C(t,j) (1+x)^{n-i-j+s} (1-x)^{i-j+s-1} x^{2(j-s)}
    Consecutive,
};

struct ClosedFormSeries {
    SeriesForm form;
    long t = 0;
    long s = 0;
};

/// Constant term of sign * x^shift * (1+x)^plus_exp * (1-x)^minus_exp
/// expanded around infinity. Exponents may be negative.
BigInt constant_term_of_product(const BigInt& scale, long shift, long plus_exp, long minus_exp);

/// Constant term of the given closed form for dimension n and level i.
/// Throws DomainError unless n >= 1, 0 <= i <= n, t >= 0 and, for the
/// consecutive form, 0 <= s < t.
BigInt constant_term(const ClosedFormSeries& series, long n, long i);

}  // namespace ksb
