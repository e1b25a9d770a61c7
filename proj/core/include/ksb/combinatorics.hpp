#pragma once

#include "ksb/bigint.hpp"

#include <cstdint>

namespace ksb {

/// Generalized binomial coefficient a(a-1)...(a-b+1)/b! for any integer a and
/// b >= 0. For a < 0 this is (-1)^b * C(b-a-1, b). Throws DomainError if b < 0.
BigInt binomial(long a, long b);

/// Sum_{i=0..m} C(n, i); zero when m < 0.
BigInt binomial_prefix_sum(long n, long m);

/// C(A, B) mod p as the product of digit binomials in base p (Lucas).
/// Requires p prime and A, B >= 0; returns 0 when B > A.
unsigned binomial_mod_prime(std::uint64_t a, std::uint64_t b, unsigned p);

bool is_prime(unsigned long value);

}  // namespace ksb
