#include "ksb/family.hpp"

#include "ksb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

namespace ksb {

std::string to_bit_string(BinaryVector v, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if ((v >> j) & 1U) out[j] = '1';
    }
    return out;
}

BinaryVector parse_bit_string(std::string_view text, int n) {
    if (static_cast<int>(text.size()) != n) {
        throw DomainError("family line '" + std::string(text) + "' does not have length " + std::to_string(n));
    }
    BinaryVector v = 0;
    for (int j = 0; j < n; ++j) {
        if (text[j] == '1') {
            v |= BinaryVector{1} << j;
        } else if (text[j] != '0') {
            throw DomainError("family line '" + std::string(text) + "' is not a 0/1 string");
        }
    }
    return v;
}

VectorFamily::VectorFamily(int n_, std::vector<BinaryVector> vectors_) : n(n_), vectors(std::move(vectors_)) {
    if (n < 0 || n > 64) throw DomainError("vector family: dimension must be in 0..64");
    std::sort(vectors.begin(), vectors.end());
    if (std::adjacent_find(vectors.begin(), vectors.end()) != vectors.end()) {
        throw DomainError("vector family: duplicate vectors");
    }
    if (n < 64) {
        for (auto v : vectors) {
            if (v >> n) throw DomainError("vector family: vector exceeds dimension");
        }
    }
}

bool pairwise_distances_in(const VectorFamily& family, const DistanceSet& allowed) {
    const auto& vs = family.vectors;
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (!allowed.contains(hamming_distance(vs[a], vs[b]))) return false;
        }
    }
    return true;
}

void write_family(std::ostream& out, const VectorFamily& family) {
    for (auto v : family.vectors) out << to_bit_string(v, family.n) << '\n';
}

VectorFamily read_family(std::istream& in) {
    std::vector<BinaryVector> vectors;
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (n < 0) n = static_cast<int>(line.size());
        vectors.push_back(parse_bit_string(line, n));
    }
    return VectorFamily(std::max(n, 0), std::move(vectors));
}

void write_fp_family(std::ostream& out, const FpFamily& family) {
    for (const auto& v : family.vectors) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) out << ',';
            out << v[j];
        }
        out << '\n';
    }
}

FpFamily read_fp_family(std::istream& in, int p) {
    FpFamily family;
    family.p = p;
    family.dimension = -1;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        FpVector v;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            int digit = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), digit);
            if (ec != std::errc{} || ptr != field.data() + field.size() || digit < 0 || digit >= p) {
                throw DomainError("F_p family line '" + line + "' has a bad digit");
            }
            v.push_back(digit);
        }
        if (family.dimension < 0) family.dimension = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != family.dimension) {
            throw DomainError("F_p family lines have inconsistent lengths");
        }
        family.vectors.push_back(std::move(v));
    }
    if (family.dimension < 0) family.dimension = 0;
    return family;
}

}  // namespace ksb
