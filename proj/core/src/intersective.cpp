#include "ksb/intersective.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <string>

namespace ksb {

void FpParams::validate() const {
    if (p < 3 || !is_prime(static_cast<unsigned long>(p))) {
        throw DomainError("p must be an odd prime, got " + std::to_string(p));
    }
    if (dimension < 0) throw DomainError("N must be >= 0, got " + std::to_string(dimension));
}

namespace {

BoundReport fp_report(const FpParams& params, Method method) {
    BoundReport report;
    report.n = params.dimension;
    report.p = params.p;
    report.allowed = DistanceSet(params.dimension, {});
    report.method = method;
    return report;
}

// counts[r] = number of vectors in the box with coordinate sum = r (mod 2p).
// The first `narrow` coordinates range over 1..p-2, the rest over 1..p-1.
std::vector<BigInt> sum_distribution(int p, int dimension, int narrow) {
    const int modulus = 2 * p;
    std::vector<BigInt> counts(static_cast<std::size_t>(modulus), 0);
    counts[0] = 1;
    for (int j = 0; j < dimension; ++j) {
        const int top = j < narrow ? p - 2 : p - 1;
        std::vector<BigInt> next(static_cast<std::size_t>(modulus), 0);
        for (int r = 0; r < modulus; ++r) {
            if (counts[static_cast<std::size_t>(r)] == 0) continue;
            for (int v = 1; v <= top; ++v) next[static_cast<std::size_t>((r + v) % modulus)] += counts[static_cast<std::size_t>(r)];
        }
        counts = std::move(next);
    }
    return counts;
}

BigInt positive_count(int p, int dimension, const std::vector<BigInt>& counts) {
    BigInt total = 0;
    for (int r = 0; r < 2 * p; ++r) {
        if (cosine_positive(p, dimension, r)) total += counts[static_cast<std::size_t>(r)];
    }
    return total;
}

// Closed interval of doubles, widened outward after every operation.
struct Interval {
    double lo;
    double hi;
};

Interval widen(double lo, double hi, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) {
        lo = std::nextafter(lo, -INFINITY);
        hi = std::nextafter(hi, INFINITY);
    }
    return {lo, hi};
}

Interval multiply(Interval a, Interval b) {
    const double c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return widen(*std::min_element(std::begin(c), std::end(c)), *std::max_element(std::begin(c), std::end(c)));
}

// libm sin and cos are not correctly rounded; four ulps covers their error.
Interval sin_interval(double x) {
    const double v = std::sin(x);
    return widen(v, v, 4);
}

Interval cos_interval(double x) {
    const double v = std::cos(x);
    return widen(v, v, 4);
}

// Walks all multisets of coordinate values (a stratum shares one eigenvalue)
// and returns how many all-nonzero vectors with a positive cosine have an
// eigenvalue interval entirely below zero.
class StratumRefiner {
public:
    StratumRefiner(int p, int dimension) : p_(p), dimension_(dimension), multiplicity_(static_cast<std::size_t>(p), 0) {}

    BigInt run() {
        walk(1, dimension_);
        return certified_negative_;
    }

private:
    void walk(int value, int remaining) {
        if (value == p_ - 1) {
            multiplicity_[static_cast<std::size_t>(value)] = remaining;
            evaluate();
            multiplicity_[static_cast<std::size_t>(value)] = 0;
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            multiplicity_[static_cast<std::size_t>(value)] = m;
            walk(value + 1, remaining - m);
        }
        multiplicity_[static_cast<std::size_t>(value)] = 0;
    }

    void evaluate() {
        long sum = 0;
        for (int v = 1; v < p_; ++v) sum += static_cast<long>(v) * multiplicity_[static_cast<std::size_t>(v)];
        if (!cosine_positive(p_, dimension_, sum)) return;
        const double pi = std::numbers::pi;
        Interval product{2.0, 2.0};
        for (int v = 1; v < p_; ++v) {
            const Interval two_sin = multiply({2.0, 2.0}, sin_interval(pi * v / p_));
            for (int m = 0; m < multiplicity_[static_cast<std::size_t>(v)]; ++m) product = multiply(product, two_sin);
        }
        const long residue = ((static_cast<long>(dimension_) * p_ - 2 * sum) % (4L * p_) + 4L * p_) % (4L * p_);
        product = multiply(product, cos_interval(pi * static_cast<double>(residue) / (2.0 * p_)));
        const double upper = std::nextafter(product.hi - 2.0, INFINITY);
        if (upper >= 0.0) return;
        // number of vectors with this coordinate multiset
        BigInt count = 1;
        long placed = 0;
        for (int v = 1; v < p_; ++v) {
            const int m = multiplicity_[static_cast<std::size_t>(v)];
            placed += m;
            count *= binomial(placed, m);
        }
        certified_negative_ += count;
    }

    int p_;
    int dimension_;
    std::vector<int> multiplicity_;
    BigInt certified_negative_ = 0;
};

}  // namespace

bool cosine_positive(int p, int dimension, long coordinate_sum) {
    // theta = pi (N p - 2 S) / (2p); represent the numerator in (-2p, 2p].
    const long period = 4L * p;
    long r = ((static_cast<long>(dimension) * p - 2 * coordinate_sum) % period + period) % period;
    if (r > 2L * p) r -= period;
    return -p < r && r < p;
}

BoundReport closed_form_bound(const FpParams& params) {
    params.validate();
    const int p = params.p;
    const int n = params.dimension;
    BoundReport report = fp_report(params, Method::IntersectiveClosedForm);
    const BigInt alon = pow(BigInt(p - 1), static_cast<unsigned long>(n));
    if (n < p) {
        report.value = alon;
        report.witness = ParameterWitness{{{"p", p}, {"N", n}}, "alon: (p-1)^N"};
        return report;
    }
    const BigInt box = pow(BigInt(p - 2), static_cast<unsigned long>(p)) *
                       pow(BigInt(p - 1), static_cast<unsigned long>(n - p));
    BigInt half;
    mpz_fdiv_q_2exp(half.get_mpz_t(), box.get_mpz_t(), 1);
    report.value = alon - half;
    report.witness = ParameterWitness{{{"p", p}, {"N", n}},
                                      "(p-1)^N - floor((p-2)^p (p-1)^(N-p) / 2), real form "
                                      "(1 - (1 - 1/(p-1))^p / 2)(p-1)^N"};
    return report;
}

EigSignCount exact_sign_count(const FpParams& params, bool refine) {
    params.validate();
    const int p = params.p;
    const int n = params.dimension;
    const BigInt total = pow(BigInt(p), static_cast<unsigned long>(n));
    const BigInt nonzero = pow(BigInt(p - 1), static_cast<unsigned long>(n));
    EigSignCount counts;
    counts.zero_coordinate_count = total - nonzero;
    counts.count_possibly_nonneg = positive_count(p, n, sum_distribution(p, n, 0));
    if (refine) counts.count_possibly_nonneg -= StratumRefiner(p, n).run();
    counts.count_negative_certain = total - counts.count_possibly_nonneg;
    return counts;
}

PairingCount pairing_box_count(const FpParams& params) {
    params.validate();
    const int p = params.p;
    const int n = params.dimension;
    if (n < p) throw DomainError("pairing_box_count needs N >= p");
    PairingCount out;
    out.box_size = pow(BigInt(p - 2), static_cast<unsigned long>(p)) *
                   pow(BigInt(p - 1), static_cast<unsigned long>(n - p));
    out.possibly_nonneg = positive_count(p, n, sum_distribution(p, n, p));
    return out;
}

BoundReport spectral_bound_fp(const FpParams& params, bool refine) {
    EigSignCount counts = exact_sign_count(params, refine);
    BoundReport report = fp_report(params, Method::IntersectiveSpectral);
    report.value = counts.count_possibly_nonneg;
    report.witness = FpSignWitness{std::move(counts), refine ? "cos > 0, interval refined" : "cos > 0"};
    return report;
}

}  // namespace ksb
