#include "ksb/combinatorics.hpp"

#include "ksb/errors.hpp"

#include <cctype>
#include <string>

namespace ksb {

BigInt parse_bigint(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw DomainError("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw DomainError("not an integer: '" + text + "'");
        }
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

BigInt binomial(long a, long b) {
    if (b < 0) throw DomainError("binomial: negative lower index " + std::to_string(b));
    if (a >= 0 && a < b) return 0;
    if (a < 0) {
        BigInt magnitude = binomial(b - a - 1, b);
        return (b % 2 == 0) ? magnitude : BigInt(-magnitude);
    }
    // Incremental product keeps every intermediate an integer:
    // after step j it equals C(a - b + j, j).
    BigInt result = 1;
    const long k = (b > a - b) ? a - b : b;
    for (long j = 1; j <= k; ++j) {
        result *= (a - k + j);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(j));
    }
    return result;
}

BigInt binomial_prefix_sum(long n, long m) {
    BigInt sum = 0;
    for (long i = 0; i <= m; ++i) sum += binomial(n, i);
    return sum;
}

unsigned binomial_mod_prime(std::uint64_t a, std::uint64_t b, unsigned p) {
    if (!is_prime(p)) throw DomainError("binomial_mod_prime: modulus must be prime");
    if (b > a) return 0;
    unsigned result = 1;
    while (a > 0 || b > 0) {
        const auto a_digit = static_cast<long>(a % p);
        const auto b_digit = static_cast<long>(b % p);
        if (b_digit > a_digit) return 0;
        const BigInt digit_binomial = binomial(a_digit, b_digit);
        result = static_cast<unsigned>((result * mpz_fdiv_ui(digit_binomial.get_mpz_t(), p)) % p);
        a /= p;
        b /= p;
    }
    return result;
}

bool is_prime(unsigned long value) {
    if (value < 2) return false;
    for (unsigned long d = 2; d * d <= value; ++d) {
        if (value % d == 0) return false;
    }
    return true;
}

}  // namespace ksb
