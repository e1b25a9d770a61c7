#pragma once

#include "ksb/bigint.hpp"
#include "ksb/distance_set.hpp"
#include "ksb/family.hpp"
#include "ksb/fp.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ksb {

enum class Method {
    Spectral,
    KleitmanClosedForm,
    ConsecutiveClosedForm,
    Parity,
    FranklWilsonForm,
    ClpRank,
    DivisibilityForm,
    Lemma5Chain,
    Oracle,
    Construction,
    IntersectiveSpectral,
    IntersectiveClosedForm,
};

std::string_view method_name(Method method);
/// Throws DomainError for unknown names.
Method parse_method(std::string_view name);
const std::vector<Method>& all_methods();

/// Eigenvalues and sign tallies behind a spectral bound.
struct SpectralWitness {
    std::string scheme;
    std::vector<BigInt> eigenvalues;
    BigInt count_nonneg;
    BigInt count_nonpos;
    BigInt count_zero;
    bool operator==(const SpectralWitness&) const = default;
};

/// Named integer parameters of a closed-form bound, e.g. {"d": 4}.
struct ParameterWitness {
    std::map<std::string, long> parameters;
    std::string form;
    bool operator==(const ParameterWitness&) const = default;
};

struct RankWitness {
    BigInt rank;
    BigInt degree_bound;
    std::string matrix;
    bool operator==(const RankWitness&) const = default;
};

struct FamilyWitness {
    VectorFamily family;
    std::string label;
    bool operator==(const FamilyWitness&) const = default;
};

struct FpFamilyWitness {
    FpFamily family;
    bool operator==(const FpFamilyWitness&) const = default;
};

struct FpSignWitness {
    EigSignCount counts;
    std::string form;
    bool operator==(const FpSignWitness&) const = default;
};

using Witness = std::variant<std::monostate, SpectralWitness, ParameterWitness, RankWitness,
                             FamilyWitness, FpFamilyWitness, FpSignWitness>;

/// A bound on f_L(n) (or on D_{F_p}(J, N) when `p` is set, with n = N) with
/// the data that certifies it.
struct BoundReport {
    int n = 0;
    std::optional<int> p;
    DistanceSet allowed;
    Method method = Method::Oracle;
    BigInt value;
    Witness witness;

    bool operator==(const BoundReport&) const = default;
};

/// {"n", "L": [...], "method", "value": "<decimal>", "witness": {...}} plus
/// "p" for F_p^N reports.
std::string to_json(const BoundReport& report);
/// Inverse of to_json. Throws DomainError on malformed documents.
BoundReport report_from_json(std::string_view text);

}  // namespace ksb
