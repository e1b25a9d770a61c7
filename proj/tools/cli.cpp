#include "cli.hpp"

#include "ksb/bounds.hpp"
#include "ksb/clp.hpp"
#include "ksb/compare.hpp"
#include "ksb/constructions.hpp"
#include "ksb/errors.hpp"
#include "ksb/intersective.hpp"
#include "ksb/oracle.hpp"
#include "ksb/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ksb::cli {
namespace {

struct Config {
    int n = 0;
    std::string distances;
    std::optional<int> p;
    std::optional<int> dimension;
    std::string method;
    std::string scheme;
    std::string weights_path;
    std::optional<int> s;
    std::optional<int> t;
    std::optional<int> r;
    std::optional<int> k;
    std::string center;
    std::string type = "best";
    std::string format = "json";
    std::string output;
    std::string witness;
    std::vector<std::string> grid;
    int oracle_max_n = oracle_max_n_from_environment();
    int clp_max_n = 10;
    long max_fp_vertices = kDefaultOracleMaxFpVertices;
    long max_nodes = kDefaultOracleMaxNodes;
    long compare_max_nodes = kDefaultCompareMaxNodes;
    unsigned threads = 1;
    bool refine = false;
    bool no_normalize = false;
};

void emit(std::ostream& out, const Config& config, const BoundReport& report) {
    if (config.format == "csv") {
        std::string members = report.allowed.to_string();
        for (auto& c : members) {
            if (c == ',') c = ';';
        }
        out << report.n << ',' << (report.p ? std::to_string(*report.p) : "") << ',' << members << ','
            << method_name(report.method) << ',' << to_string(report.value) << '\n';
    } else {
        out << to_json(report) << '\n';
    }
}

void emit_header(std::ostream& out, const Config& config) {
    if (config.format == "csv") out << "n,p,L,method,value\n";
}

// Writes to --output when given, else to `fallback`.
template <typename Body>
void with_output(const Config& config, std::ostream& fallback, Body body) {
    if (config.output.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(config.output);
    if (!file) throw DomainError("cannot open output file " + config.output);
    body(file);
}

DistanceSet distances(const Config& config) {
    if (config.n < 1) throw DomainError("--n must be a positive integer");
    return DistanceSet::parse(config.distances, config.n);
}

FpParams fp_params(const Config& config) {
    if (!config.p || !config.dimension) throw DomainError("F_p^N runs need both --p and --N");
    FpParams params{*config.p, *config.dimension};
    params.validate();
    return params;
}

int required(const std::optional<int>& value, const char* flag) {
    if (!value) throw DomainError(std::string("missing ") + flag);
    return *value;
}

WeightScheme pick_scheme(const Config& config, const DistanceSet& allowed) {
    const int n = config.n;
    if (config.scheme.empty()) {
        auto scheme = matching_scheme(allowed);
        if (!scheme) throw DomainError("no weight scheme matches L={" + allowed.to_string() + "}; pass --scheme");
        return *scheme;
    }
    if (config.scheme == "kleitman-even") return kleitman_even(n, required(config.t, "--t"));
    if (config.scheme == "kleitman-odd") return kleitman_odd(n, required(config.t, "--t"));
    if (config.scheme == "consecutive") return consecutive_scheme(n, required(config.s, "--s"), required(config.t, "--t"));
    if (config.scheme == "custom") {
        std::ifstream in(config.weights_path);
        if (!in) throw DomainError("cannot read weights file '" + config.weights_path + "'");
        return custom_scheme(n, in, "custom:" + config.weights_path);
    }
    throw DomainError("unknown scheme '" + config.scheme +
                      "' (valid: kleitman-even, kleitman-odd, consecutive, custom)");
}

void write_witness(const Config& config, const BoundReport& report) {
    if (config.witness.empty()) return;
    std::ofstream file(config.witness);
    if (!file) throw DomainError("cannot open witness file " + config.witness);
    if (const auto* family = std::get_if<FamilyWitness>(&report.witness)) write_family(file, family->family);
    if (const auto* fp = std::get_if<FpFamilyWitness>(&report.witness)) write_fp_family(file, fp->family);
}

OracleOptions oracle_options(const Config& config) {
    OracleOptions options;
    options.max_n = config.oracle_max_n;
    options.max_fp_vertices = config.max_fp_vertices;
    options.max_nodes = config.max_nodes;
    options.threads = config.threads;
    options.normalize = !config.no_normalize;
    return options;
}

BoundReport single_bound(const Config& config, Method method) {
    if (method == Method::IntersectiveSpectral) return spectral_bound_fp(fp_params(config), config.refine);
    if (method == Method::IntersectiveClosedForm) return closed_form_bound(fp_params(config));
    const DistanceSet allowed = distances(config);
    const int n = config.n;
    switch (method) {
    case Method::Spectral:
        return cvetkovic_bound(n, allowed, pick_scheme(config, allowed));
    case Method::KleitmanClosedForm: {
        auto d = allowed.diameter();
        if (!d) throw DomainError("kleitman-closed-form needs L = {1..d}");
        return kleitman_closed_form(n, *d);
    }
    case Method::ConsecutiveClosedForm: {
        auto st = allowed.consecutive_parameters();
        if (!st) throw DomainError("consecutive-closed-form needs L = {2s+1..2t}");
        return consecutive_closed_form(n, st->first, st->second);
    }
    case Method::Parity: {
        auto report = parity_bound(allowed);
        if (!report) throw DomainError("parity needs every member of L to be odd");
        return *report;
    }
    case Method::FranklWilsonForm:
        return frankl_wilson_form(n, allowed);
    case Method::ClpRank: {
        if (config.k) return divisibility_rank_report(n, *config.k);
        if (auto d = allowed.diameter(); d && *d % 2 == 0) return clp_rank_report(n, *d / 2);
        if (auto k = allowed.divisibility_exponent()) return divisibility_rank_report(n, *k);
        throw DomainError("clp-rank needs L = {1..2t} or the non-multiples of 2^k");
    }
    case Method::DivisibilityForm: {
        auto k = config.k ? config.k : allowed.divisibility_exponent();
        if (!k) throw DomainError("divisibility-form needs L = non-multiples of 2^k (or --k)");
        return divisibility_form_report(n, *k);
    }
    case Method::Lemma5Chain: {
        const auto& m = allowed.members();
        if (m.size() != 2 || m[0] % 2 == 0 || m[1] != m[0] + 1) throw DomainError("lemma5-chain needs L = {2s+1, 2s+2}");
        return lemma5_chain(n, m[0] / 2);
    }
    case Method::Oracle:
        return oracle_exact(n, allowed, oracle_options(config));
    case Method::Construction:
        return construction_report(best_construction(allowed));
    default:
        break;
    }
    throw DomainError("method not available here");
}

// Every method that accepts the given instance.
std::vector<BoundReport> applicable_bounds(const Config& config) {
    std::vector<BoundReport> out;
    if (config.p) {
        out.push_back(spectral_bound_fp(fp_params(config), config.refine));
        out.push_back(closed_form_bound(fp_params(config)));
        return out;
    }
    distances(config);
    for (Method method : all_methods()) {
        if (method == Method::Oracle || method == Method::IntersectiveSpectral ||
            method == Method::IntersectiveClosedForm) {
            continue;
        }
        if (method == Method::ClpRank && config.n > config.clp_max_n) continue;
        try {
            out.push_back(single_bound(config, method));
        } catch (const DomainError&) {
        } catch (const PreconditionError&) {
        }
    }
    return out;
}

int cmd_bound(const Config& config, std::ostream& out) {
    std::vector<BoundReport> reports;
    if (config.method.empty()) {
        reports = applicable_bounds(config);
    } else {
        reports.push_back(single_bound(config, parse_method(config.method)));
    }
    with_output(config, out, [&](std::ostream& o) {
        emit_header(o, config);
        for (const auto& r : reports) emit(o, config, r);
    });
    return 0;
}

int cmd_compare(const Config& config, std::ostream& out, std::ostream& err) {
    std::vector<DistanceSet> grid;
    for (const auto& term : config.grid) {
        auto part = expand_grid(term);
        grid.insert(grid.end(), part.begin(), part.end());
    }
    CompareOptions options;
    options.oracle_max_n = config.oracle_max_n;
    options.clp_max_n = config.clp_max_n;
    options.oracle_max_nodes = config.compare_max_nodes;
    options.threads = config.threads;
    const auto rows = run_compare(std::move(grid), options);
    with_output(config, out, [&](std::ostream& o) { write_compare_csv(o, rows); });
    std::size_t violations = 0;
    for (const auto& row : rows) {
        if (!row.sound) ++violations;
    }
    if (violations) {
        err << "compare: " << violations << " row(s) violate soundness\n";
        return 1;
    }
    return 0;
}

int cmd_oracle(const Config& config, std::ostream& out) {
    const BoundReport report = config.p ? oracle_fp_exact(*config.p, required(config.dimension, "--N"),
                                                          oracle_options(config))
                                        : oracle_exact(config.n, distances(config), oracle_options(config));
    write_witness(config, report);
    with_output(config, out, [&](std::ostream& o) {
        emit_header(o, config);
        emit(o, config, report);
    });
    return 0;
}

Construction build_construction(const Config& config) {
    const int n = config.n;
    if (config.type == "hamming-ball") {
        const BinaryVector center = config.center.empty() ? 0 : parse_bit_string(config.center, n);
        return hamming_ball(n, required(config.r, "--r"), center);
    }
    if (config.type == "prism") return prism(n, required(config.r, "--r"));
    if (config.type == "packing") return packing_family(n, required(config.s, "--s"), required(config.t, "--t"));
    if (config.type == "pair") return distance_pair(distances(config));
    if (config.type == "best") return best_construction(distances(config));
    throw DomainError("unknown construction type '" + config.type +
                      "' (valid: hamming-ball, prism, packing, pair, best)");
}

int cmd_construct(const Config& config, std::ostream& out) {
    const Construction construction = build_construction(config);
    if (!validate_family(construction)) throw DomainError("construction failed validation");
    if (!config.output.empty()) {
        std::ofstream file(config.output);
        if (!file) throw DomainError("cannot open output file " + config.output);
        write_family(file, construction.family);
    }
    emit_header(out, config);
    emit(out, config, construction_report(construction));
    return 0;
}

int cmd_clp_rank(const Config& config, std::ostream& out) {
    BoundReport report;
    if (config.k) {
        report = divisibility_rank_report(config.n, *config.k);
    } else {
        report = clp_rank_report(config.n, required(config.t, "--t"));
    }
    const auto& witness = std::get<RankWitness>(report.witness);
    with_output(config, out, [&](std::ostream& o) {
        if (config.format == "csv") {
            o << "n,matrix,rank,bound\n"
              << config.n << ',' << witness.matrix << ',' << to_string(witness.rank) << ','
              << to_string(witness.degree_bound) << '\n';
        } else {
            o << to_json(report) << '\n';
        }
    });
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Spectral, polynomial and exact bounds for binary codes with prescribed distances"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--n", config.n, "dimension of the cube");
        sub->add_option("--L", config.distances, "allowed distances: 1,2,5 | 1-6 | upto:d | not-div:2^k");
        sub->add_option("--p", config.p, "prime for F_p^N runs");
        sub->add_option("--N", config.dimension, "dimension for F_p^N runs");
        sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("-o,--output", config.output, "write the report here instead of stdout");
    };

    auto* bound = app.add_subcommand("bound", "compute one or all applicable upper bounds");
    add_instance(bound);
    bound->add_option("--method", config.method, "method tag; all applicable methods when omitted");
    bound->add_option("--scheme", config.scheme, "kleitman-even | kleitman-odd | consecutive | custom");
    bound->add_option("--weights", config.weights_path, "weights file for --scheme custom");
    bound->add_option("--s", config.s);
    bound->add_option("--t", config.t);
    bound->add_option("--k", config.k, "divisibility exponent");
    bound->add_flag("--refine", config.refine, "interval refinement of the F_p sign count");
    bound->add_option("--clp-max-n", config.clp_max_n, "largest n for rank bounds when no method is given");
    bound->add_option("--oracle-max-n", config.oracle_max_n);
    bound->add_option("--max-nodes", config.max_nodes, "node budget for --method oracle, 0 for none");

    auto* compare = app.add_subcommand("compare", "sweep a grid of (n, L) and write a CSV table");
    compare->add_option("--grid", config.grid, "grid term, repeatable (see README)")->take_all();
    compare->add_option("--oracle-max-n", config.oracle_max_n, "largest n for the exact oracle column");
    compare->add_option("--max-nodes", config.compare_max_nodes, "oracle node budget per row, 0 for none");
    compare->add_option("--clp-max-n", config.clp_max_n, "largest n for the rank column");
    compare->add_option("--threads", config.threads)->check(CLI::PositiveNumber);
    compare->add_option("-o,--output", config.output, "CSV path");

    auto* oracle = app.add_subcommand("oracle", "exact maximum family by branch-and-bound");
    add_instance(oracle);
    oracle->add_option("--witness", config.witness, "write the maximum family here");
    oracle->add_option("--max-n", config.oracle_max_n, "cap on n (default 12, or KSB_MAX_ORACLE_N)");
    oracle->add_option("--max-vertices", config.max_fp_vertices, "cap on p^N");
    oracle->add_option("--max-nodes", config.max_nodes, "branch-and-bound node budget, 0 for none");
    oracle->add_option("--threads", config.threads)->check(CLI::PositiveNumber);
    oracle->add_flag("--no-normalize", config.no_normalize, "search the whole cube without symmetry reduction");

    auto* construct = app.add_subcommand("construct", "build and validate an explicit family");
    construct->add_option("--type", config.type, "hamming-ball | prism | packing | pair | best");
    construct->add_option("--n", config.n);
    construct->add_option("--L", config.distances);
    construct->add_option("--r", config.r);
    construct->add_option("--s", config.s);
    construct->add_option("--t", config.t);
    construct->add_option("--center", config.center, "0/1 string of length n");
    construct->add_option("--format", config.format)->check(CLI::IsMember({"json", "csv"}));
    construct->add_option("-o,--output", config.output, "family file, one 0/1 line per vector");

    auto* rank = app.add_subcommand("clp-rank", "F2 rank of the polynomial-method matrix against its bound");
    rank->add_option("--n", config.n)->required();
    rank->add_option("--t", config.t, "Kleitman matrix C(d-1, 2t)");
    rank->add_option("--k", config.k, "divisibility matrix for 2^k");
    rank->add_option("--format", config.format)->check(CLI::IsMember({"json", "csv"}));
    rank->add_option("-o,--output", config.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        const int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bound) return cmd_bound(config, out);
        if (*compare) return cmd_compare(config, out, err);
        if (*oracle) return cmd_oracle(config, out);
        if (*construct) return cmd_construct(config, out);
        if (*rank) return cmd_clp_rank(config, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace ksb::cli
