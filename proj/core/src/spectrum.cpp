#include "ksb/spectrum.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace ksb {
namespace {

using Wide = __int128;

std::optional<Wide> to_wide(const BigInt& value) {
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > 120) return std::nullopt;
    BigInt magnitude = abs(value);
    std::uint64_t words[2] = {0, 0};
    std::size_t count = 0;
    mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, magnitude.get_mpz_t());
    const Wide result = (static_cast<Wide>(words[1]) << 64) | words[0];
    return sgn(value) < 0 ? -result : result;
}

// In-place unnormalized Walsh-Hadamard transform: out[S] = sum_U in[U] (-1)^{|S & U|}.
void walsh_hadamard(std::vector<Wide>& data) {
    for (std::size_t half = 1; half < data.size(); half <<= 1) {
        for (std::size_t block = 0; block < data.size(); block += half << 1) {
            for (std::size_t j = block; j < block + half; ++j) {
                const Wide a = data[j];
                const Wide b = data[j + half];
                data[j] = a + b;
                data[j + half] = a - b;
            }
        }
    }
}

}  // namespace

KrawtchoukTable::KrawtchoukTable(int n) : n_(n), values_(static_cast<std::size_t>(n + 1) * (n + 1)) {
    // Column i holds the coefficients of (1-x)^i (1+x)^{n-i}; each step
    // multiplies by (1-x) and divides exactly by (1+x).
    std::vector<BigInt> column(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) column[k] = binomial(n, k);
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= n; ++k) values_[static_cast<std::size_t>(k) * (n + 1) + i] = column[k];
        if (i == n) break;
        std::vector<BigInt> times_one_minus_x(static_cast<std::size_t>(n + 2));
        for (int k = 0; k <= n; ++k) {
            times_one_minus_x[k] += column[k];
            times_one_minus_x[k + 1] -= column[k];
        }
        BigInt previous = 0;
        for (int k = 0; k <= n; ++k) {
            column[k] = times_one_minus_x[k] - previous;
            previous = column[k];
        }
    }
}

KrawtchoukTable krawtchouk_table(int n) {
    if (n < 1) throw DomainError("krawtchouk_table: n must be >= 1");
    if (n > kMaxKrawtchoukDimension) {
        throw ResourceError("krawtchouk_table: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxKrawtchoukDimension));
    }
    return KrawtchoukTable(n);
}

std::vector<int> SpectrumSummary::signs() const {
    std::vector<int> out;
    out.reserve(eigenvalues.size());
    for (const auto& lambda : eigenvalues) out.push_back(sgn(lambda));
    return out;
}

SpectrumSummary weighted_spectrum(const KrawtchoukTable& table, const WeightScheme& f) {
    const int n = table.n();
    if (f.n() != n) throw DomainError("weighted_spectrum: scheme dimension does not match");
    SpectrumSummary summary;
    summary.n = n;
    summary.count_nonneg = 0;
    summary.count_nonpos = 0;
    summary.count_zero = 0;
    const auto support = f.support();
    for (int i = 0; i <= n; ++i) {
        BigInt lambda = 0;
        for (int k : support) lambda += f(k) * table(k, i);
        BigInt multiplicity = binomial(n, i);
        const int s = sgn(lambda);
        if (s >= 0) summary.count_nonneg += multiplicity;
        if (s <= 0) summary.count_nonpos += multiplicity;
        if (s == 0) summary.count_zero += multiplicity;
        summary.eigenvalues.push_back(std::move(lambda));
        summary.multiplicities.push_back(std::move(multiplicity));
    }
    return summary;
}

SpectrumSummary weighted_spectrum(int n, const WeightScheme& f) {
    return weighted_spectrum(krawtchouk_table(n), f);
}

bool verify_fourier_eigenvectors(int n, const WeightScheme& f) {
    if (n < 1) throw DomainError("verify_fourier_eigenvectors: n must be >= 1");
    if (n > kMaxDenseVerificationDimension) {
        throw ResourceError("verify_fourier_eigenvectors: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxDenseVerificationDimension));
    }
    if (f.n() != n) throw DomainError("verify_fourier_eigenvectors: scheme dimension does not match");

    std::vector<Wide> weight_by_distance(static_cast<std::size_t>(n + 1), 0);
    for (int k = 1; k <= n; ++k) {
        if (!f(k).fits_slong_p()) throw DomainError("verify_fourier_eigenvectors: weights must fit in 64 bits");
        weight_by_distance[k] = f(k).get_si();
    }
    const SpectrumSummary spectrum = weighted_spectrum(n, f);
    std::vector<Wide> lambda;
    for (const auto& value : spectrum.eigenvalues) {
        auto wide = to_wide(value);
        if (!wide) return false;
        lambda.push_back(*wide);
    }

    // Row T of M times the matrix whose columns are the v_S gives (M v_S)_T for every S.
    const std::size_t size = std::size_t{1} << n;
    std::vector<Wide> row(size);
    for (std::size_t t = 0; t < size; ++t) {
        for (std::size_t u = 0; u < size; ++u) row[u] = weight_by_distance[std::popcount(t ^ u)];
        walsh_hadamard(row);
        for (std::size_t s = 0; s < size; ++s) {
            const Wide expected = (std::popcount(s & t) % 2 == 0) ? lambda[std::popcount(s)]
                                                                  : -lambda[std::popcount(s)];
            if (row[s] != expected) return false;
        }
    }
    return true;
}

}  // namespace ksb
