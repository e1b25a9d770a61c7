#pragma once

#include <gmpxx.h>

#include <string>

namespace ksb {

/// Arbitrary-precision signed integer. Every binomial, weight, eigenvalue and
/// multiplicity in the library is carried in this type.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline int sign(const BigInt& value) { return sgn(value); }

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

/// Parses a decimal string; throws DomainError on malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace ksb
