#include "ksb/report.hpp"

#include "ksb/errors.hpp"

#include <json.hpp>

#include <array>
#include <utility>

namespace ksb {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Method, std::string_view>, 12> kMethodNames{{
    {Method::Spectral, "spectral"},
    {Method::KleitmanClosedForm, "kleitman-closed-form"},
    {Method::ConsecutiveClosedForm, "consecutive-closed-form"},
    {Method::Parity, "parity"},
    {Method::FranklWilsonForm, "frankl-wilson-form"},
    {Method::ClpRank, "clp-rank"},
    {Method::DivisibilityForm, "divisibility-form"},
    {Method::Lemma5Chain, "lemma5-chain"},
    {Method::Oracle, "oracle"},
    {Method::Construction, "construction"},
    {Method::IntersectiveSpectral, "intersective-spectral"},
    {Method::IntersectiveClosedForm, "intersective-closed-form"},
}};

json big(const BigInt& value) { return value.get_str(); }

BigInt big_from(const json& node) {
    if (!node.is_string()) throw DomainError("report JSON: integers must be decimal strings");
    return parse_bigint(node.get<std::string>());
}

json big_array(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(big(v));
    return out;
}

json witness_to_json(const Witness& witness) {
    struct Visitor {
        json operator()(std::monostate) const { return json{{"kind", "none"}}; }
        json operator()(const SpectralWitness& w) const {
            return {{"kind", "spectral"},          {"scheme", w.scheme},
                    {"eigenvalues", big_array(w.eigenvalues)}, {"count_nonneg", big(w.count_nonneg)},
                    {"count_nonpos", big(w.count_nonpos)},     {"count_zero", big(w.count_zero)}};
        }
        json operator()(const ParameterWitness& w) const {
            return {{"kind", "parameters"}, {"parameters", w.parameters}, {"form", w.form}};
        }
        json operator()(const RankWitness& w) const {
            return {{"kind", "rank"},
                    {"rank", big(w.rank)},
                    {"degree_bound", big(w.degree_bound)},
                    {"matrix", w.matrix}};
        }
        json operator()(const FamilyWitness& w) const {
            json vectors = json::array();
            for (auto v : w.family.vectors) vectors.push_back(to_bit_string(v, w.family.n));
            return {{"kind", "family"}, {"label", w.label}, {"family", vectors}};
        }
        json operator()(const FpFamilyWitness& w) const {
            return {{"kind", "fp-family"},
                    {"p", w.family.p},
                    {"dimension", w.family.dimension},
                    {"family", w.family.vectors}};
        }
        json operator()(const FpSignWitness& w) const {
            return {{"kind", "fp-signs"},
                    {"form", w.form},
                    {"count_negative_certain", big(w.counts.count_negative_certain)},
                    {"count_possibly_nonneg", big(w.counts.count_possibly_nonneg)},
                    {"zero_coordinate_count", big(w.counts.zero_coordinate_count)}};
        }
    };
    return std::visit(Visitor{}, witness);
}

Witness witness_from_json(const json& node, int n) {
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "none") return std::monostate{};
    if (kind == "spectral") {
        SpectralWitness w;
        w.scheme = node.at("scheme").get<std::string>();
        for (const auto& v : node.at("eigenvalues")) w.eigenvalues.push_back(big_from(v));
        w.count_nonneg = big_from(node.at("count_nonneg"));
        w.count_nonpos = big_from(node.at("count_nonpos"));
        w.count_zero = big_from(node.at("count_zero"));
        return w;
    }
    if (kind == "parameters") {
        return ParameterWitness{node.at("parameters").get<std::map<std::string, long>>(),
                                node.at("form").get<std::string>()};
    }
    if (kind == "rank") {
        return RankWitness{big_from(node.at("rank")), big_from(node.at("degree_bound")),
                           node.at("matrix").get<std::string>()};
    }
    if (kind == "family") {
        std::vector<BinaryVector> vectors;
        for (const auto& line : node.at("family")) vectors.push_back(parse_bit_string(line.get<std::string>(), n));
        return FamilyWitness{VectorFamily(n, std::move(vectors)), node.at("label").get<std::string>()};
    }
    if (kind == "fp-family") {
        FpFamily family;
        family.p = node.at("p").get<int>();
        family.dimension = node.at("dimension").get<int>();
        family.vectors = node.at("family").get<std::vector<FpVector>>();
        return FpFamilyWitness{std::move(family)};
    }
    if (kind == "fp-signs") {
        FpSignWitness w;
        w.form = node.at("form").get<std::string>();
        w.counts.count_negative_certain = big_from(node.at("count_negative_certain"));
        w.counts.count_possibly_nonneg = big_from(node.at("count_possibly_nonneg"));
        w.counts.zero_coordinate_count = big_from(node.at("zero_coordinate_count"));
        return w;
    }
    throw DomainError("report JSON: unknown witness kind '" + kind + "'");
}

}  // namespace

std::string_view method_name(Method method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) return name;
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (const auto& [m, text] : kMethodNames) {
        if (text == name) return m;
    }
    std::string valid;
    for (const auto& [m, text] : kMethodNames) {
        if (!valid.empty()) valid += ", ";
        valid += text;
    }
    throw DomainError("unknown method '" + std::string(name) + "'; valid methods: " + valid);
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = [] {
        std::vector<Method> out;
        for (const auto& entry : kMethodNames) out.push_back(entry.first);
        return out;
    }();
    return methods;
}

std::string to_json(const BoundReport& report) {
    json doc;
    doc["n"] = report.n;
    if (report.p) doc["p"] = *report.p;
    doc["L"] = report.allowed.members();
    doc["method"] = std::string(method_name(report.method));
    doc["value"] = big(report.value);
    doc["witness"] = witness_to_json(report.witness);
    return doc.dump();
}

BoundReport report_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        BoundReport report;
        report.n = doc.at("n").get<int>();
        if (doc.contains("p")) report.p = doc.at("p").get<int>();
        report.allowed = DistanceSet(report.n, doc.at("L").get<std::vector<int>>());
        report.method = parse_method(doc.at("method").get<std::string>());
        report.value = big_from(doc.at("value"));
        report.witness = witness_from_json(doc.at("witness"), report.n);
        return report;
    } catch (const json::exception& e) {
        throw DomainError(std::string("report JSON: ") + e.what());
    }
}

}  // namespace ksb
