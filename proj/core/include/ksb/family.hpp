#pragma once

#include "ksb/distance_set.hpp"

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ksb {

/// Binary vector of length <= 64. Bit j holds coordinate j+1.
using BinaryVector = std::uint64_t;

inline int hamming_weight(BinaryVector v) { return std::popcount(v); }
inline int hamming_distance(BinaryVector a, BinaryVector b) { return std::popcount(a ^ b); }

/// n-character 0/1 string, character j is coordinate j+1.
std::string to_bit_string(BinaryVector v, int n);
BinaryVector parse_bit_string(std::string_view text, int n);

/// A set of distinct binary vectors of length n, kept sorted by encoding.
struct VectorFamily {
    int n = 0;
    std::vector<BinaryVector> vectors;

    VectorFamily() = default;
    VectorFamily(int n, std::vector<BinaryVector> vectors);

    std::size_t size() const { return vectors.size(); }
    bool operator==(const VectorFamily&) const = default;
};

/// True iff every pair of distinct members is at a distance in `allowed`.
bool pairwise_distances_in(const VectorFamily& family, const DistanceSet& allowed);

/// One vector per line as an n-character 0/1 string.
void write_family(std::ostream& out, const VectorFamily& family);
VectorFamily read_family(std::istream& in);

/// Vector of F_p^N with coordinates in 0..p-1.
using FpVector = std::vector<int>;

struct FpFamily {
    int p = 0;
    int dimension = 0;
    std::vector<FpVector> vectors;

    std::size_t size() const { return vectors.size(); }
    bool operator==(const FpFamily&) const = default;
};

/// One vector per line as comma-separated digits.
void write_fp_family(std::ostream& out, const FpFamily& family);
FpFamily read_fp_family(std::istream& in, int p);

}  // namespace ksb
