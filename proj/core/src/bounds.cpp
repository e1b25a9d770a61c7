#include "ksb/bounds.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <string>

namespace ksb {

BoundReport cvetkovic_bound(int n, const DistanceSet& allowed, const WeightScheme& f) {
    if (f.n() != n || allowed.n() != n) throw DomainError("cvetkovic_bound: dimension mismatch");
    if (!validate_support(f, allowed)) {
        throw PreconditionError("cvetkovic_bound: scheme " + f.label() + " is nonzero on an allowed distance of {" +
                                allowed.to_string() + "}; the bound would be unsound");
    }
    SpectrumSummary spectrum = weighted_spectrum(n, f);
    BoundReport report;
    report.n = n;
    report.allowed = allowed;
    report.method = Method::Spectral;
    report.value = std::min(spectrum.count_nonneg, spectrum.count_nonpos);
    report.witness = SpectralWitness{f.label(), std::move(spectrum.eigenvalues), spectrum.count_nonneg,
                                     spectrum.count_nonpos, spectrum.count_zero};
    return report;
}

BoundReport kleitman_closed_form(int n, int d) {
    if (d < 1 || d >= n) {
        throw DomainError("kleitman_closed_form needs 1 <= d < n (n=" + std::to_string(n) + ", d=" +
                          std::to_string(d) + ")");
    }
    const int t = d / 2;
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet::upto(n, d);
    report.method = Method::KleitmanClosedForm;
    if (d % 2 == 0) {
        report.value = binomial_prefix_sum(n, t);
        report.witness = ParameterWitness{{{"d", d}, {"t", t}}, "sum_{i<=t} C(n,i)"};
    } else {
        report.value = 2 * binomial_prefix_sum(n - 1, t);
        report.witness = ParameterWitness{{{"d", d}, {"t", t}}, "2 sum_{i<=t} C(n-1,i)"};
    }
    return report;
}

BoundReport consecutive_closed_form(int n, int s, int t) {
    if (s < 0 || s >= t || 2 * t >= n) {
        throw DomainError("consecutive_closed_form needs 0 <= s < t and 2t < n (n=" + std::to_string(n) +
                          ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
    }
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet::range(n, 2 * s + 1, 2 * t);
    report.method = Method::ConsecutiveClosedForm;
    report.value = binomial(n, t - s) + 2 * binomial_prefix_sum(n, t - s - 1);
    report.witness = ParameterWitness{{{"s", s}, {"t", t}}, "C(n,t-s) + 2 sum_{i<t-s} C(n,i)"};
    return report;
}

std::optional<BoundReport> parity_bound(const DistanceSet& allowed) {
    if (!allowed.all_odd()) return std::nullopt;
    BoundReport report;
    report.n = allowed.n();
    report.allowed = allowed;
    report.method = Method::Parity;
    report.value = 2;
    report.witness = ParameterWitness{{}, "odd distances only"};
    return report;
}

BoundReport frankl_wilson_form(int n, const DistanceSet& allowed) {
    if (allowed.n() != n) throw DomainError("frankl_wilson_form: dimension mismatch");
    const int c = allowed.count_even();
    BoundReport report;
    report.n = n;
    report.allowed = allowed;
    report.method = Method::FranklWilsonForm;
    report.value = 1 + static_cast<long>(allowed.size()) * binomial_prefix_sum(n, c);
    report.witness = ParameterWitness{{{"c", c}, {"size", static_cast<long>(allowed.size())}},
                                      "1 + |L| sum_{i<=c} C(n,i)"};
    return report;
}

std::optional<WeightScheme> matching_scheme(const DistanceSet& allowed) {
    const int n = allowed.n();
    if (auto d = allowed.diameter(); d && *d < n) {
        if (*d % 2 == 0) return kleitman_even(n, *d / 2);
        return kleitman_odd(n, *d / 2);
    }
    if (auto st = allowed.consecutive_parameters(); st && 2 * st->second < n) {
        return consecutive_scheme(n, st->first, st->second);
    }
    return std::nullopt;
}

}  // namespace ksb
