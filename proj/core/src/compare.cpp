#include "ksb/compare.hpp"

#include "ksb/bounds.hpp"
#include "ksb/clp.hpp"
#include "ksb/constructions.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

namespace ksb {
namespace {

int parse_number(std::string_view text, std::string_view term) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DomainError("bad number '" + std::string(text) + "' in grid term '" + std::string(term) + "'");
    }
    return value;
}

std::pair<int, int> parse_span(std::string_view text, std::string_view term) {
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        const int n = parse_number(text, term);
        return {n, n};
    }
    const int lo = parse_number(text.substr(0, dash), term);
    const int hi = parse_number(text.substr(dash + 1), term);
    if (lo < 1 || hi < lo) throw DomainError("bad n range in grid term '" + std::string(term) + "'");
    return {lo, hi};
}

CompareRow evaluate(const DistanceSet& allowed, const CompareOptions& options) {
    const int n = allowed.n();
    CompareRow row;
    row.n = n;
    row.allowed = allowed;
    if (auto scheme = matching_scheme(allowed)) row.bounds[Method::Spectral] = cvetkovic_bound(n, allowed, *scheme).value;
    if (auto d = allowed.diameter(); d && *d < n) row.bounds[Method::KleitmanClosedForm] = kleitman_closed_form(n, *d).value;
    if (auto st = allowed.consecutive_parameters(); st && 2 * st->second < n) {
        row.bounds[Method::ConsecutiveClosedForm] = consecutive_closed_form(n, st->first, st->second).value;
    }
    if (auto parity = parity_bound(allowed)) row.bounds[Method::Parity] = parity->value;
    if (!allowed.empty()) row.bounds[Method::FranklWilsonForm] = frankl_wilson_form(n, allowed).value;
    const auto k = allowed.divisibility_exponent();
    if (n <= options.clp_max_n) {
        if (auto d = allowed.diameter(); d && *d % 2 == 0) {
            row.bounds[Method::ClpRank] = clp_rank_report(n, *d / 2).value;
        } else if (k) {
            row.bounds[Method::ClpRank] = divisibility_rank_report(n, *k).value;
        }
    }
    if (k) row.bounds[Method::DivisibilityForm] = divisibility_bound(n, *k);
    if (allowed.size() == 2 && allowed.members()[0] % 2 == 1 && allowed.members()[1] == allowed.members()[0] + 1) {
        row.bounds[Method::Lemma5Chain] = lemma5_chain(n, allowed.members()[0] / 2).value;
    }
    if (n <= options.oracle_max_n) {
        OracleOptions oracle_options;
        oracle_options.max_n = options.oracle_max_n;
        oracle_options.max_nodes = options.oracle_max_nodes;
        try {
            row.oracle = oracle_exact(n, allowed, oracle_options).value;
        } catch (const ResourceError&) {
        }
    }
    row.construction = static_cast<unsigned long>(best_construction(allowed).family.size());

    for (const auto& [method, value] : row.bounds) {
        if (!row.best_upper || value < *row.best_upper) row.best_upper = value;
        if (row.oracle && value < *row.oracle) row.sound = false;
    }
    if (row.oracle && row.construction > *row.oracle) row.sound = false;
    if (row.best_upper && row.construction > *row.best_upper) row.sound = false;
    return row;
}

}  // namespace

std::vector<DistanceSet> expand_grid(std::string_view term) {
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw DomainError("grid term '" + std::string(term) + "' has no kind");
    const std::string_view kind = term.substr(0, colon);
    std::string_view rest = term.substr(colon + 1);
    const auto second = rest.find(':');
    const std::string_view span_text = rest.substr(0, second);
    const std::string_view parameter = second == std::string_view::npos ? std::string_view{} : rest.substr(second + 1);
    const auto [lo, hi] = parse_span(span_text, term);

    std::vector<DistanceSet> out;
    for (int n = lo; n <= hi; ++n) {
        if (kind == "diameter") {
            if (parameter.empty()) {
                for (int d = 1; d < n; ++d) out.push_back(DistanceSet::upto(n, d));
            } else if (const int d = parse_number(parameter, term); d >= 1 && d < n) {
                out.push_back(DistanceSet::upto(n, d));
            }
        } else if (kind == "consecutive") {
            const int top = parse_number(parameter, term);
            for (int t = 1; t <= top && 2 * t < n; ++t) {
                for (int s = 0; s < t; ++s) out.push_back(DistanceSet::range(n, 2 * s + 1, 2 * t));
            }
        } else if (kind == "pair") {
            const int top = parse_number(parameter, term);
            for (int s = 0; s <= top && 2 * s + 2 <= n; ++s) out.push_back(DistanceSet(n, {2 * s + 1, 2 * s + 2}));
        } else if (kind == "explicit") {
            if (parameter.empty()) throw DomainError("explicit grid term needs a distance list");
            out.push_back(DistanceSet::parse(parameter, n));
        } else {
            throw DomainError("unknown grid kind '" + std::string(kind) +
                              "' (expected diameter, consecutive, pair or explicit)");
        }
    }
    return out;
}

const std::vector<Method>& compare_columns() {
    static const std::vector<Method> columns{
        Method::Spectral,   Method::KleitmanClosedForm, Method::ConsecutiveClosedForm, Method::Parity,
        Method::FranklWilsonForm, Method::ClpRank,      Method::DivisibilityForm,      Method::Lemma5Chain,
    };
    return columns;
}

std::vector<CompareRow> run_compare(std::vector<DistanceSet> grid, const CompareOptions& options) {
    std::sort(grid.begin(), grid.end(), [](const DistanceSet& a, const DistanceSet& b) {
        return a.n() != b.n() ? a.n() < b.n() : a.members() < b.members();
    });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<CompareRow> rows(grid.size());
    std::atomic<std::size_t> next = 0;
    std::exception_ptr failure;
    std::atomic<bool> failed = false;
    const auto worker = [&] {
        for (std::size_t i = next++; i < grid.size() && !failed; i = next++) {
            try {
                rows[i] = evaluate(grid[i], options);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (options.threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
    out << "n,L";
    for (Method m : compare_columns()) out << ',' << method_name(m);
    out << ",oracle,construction,best_upper,SOUNDNESS\n";
    for (const auto& row : rows) {
        std::string members = row.allowed.to_string();
        std::replace(members.begin(), members.end(), ',', ';');
        out << row.n << ',' << members;
        for (Method m : compare_columns()) {
            out << ',';
            if (auto it = row.bounds.find(m); it != row.bounds.end()) out << to_string(it->second);
        }
        out << ',' << (row.oracle ? to_string(*row.oracle) : "");
        out << ',' << to_string(row.construction);
        out << ',' << (row.best_upper ? to_string(*row.best_upper) : "");
        out << ',' << (row.sound ? "ok" : "VIOLATION") << '\n';
    }
}

}  // namespace ksb
