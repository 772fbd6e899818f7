#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdrc/linalg.hpp"

namespace fdrc {

enum class Metric { hamming, rank };

// A full-row-rank k x n generator with its metric and claimed minimum
// distance. For the rank metric the matrix lives over an extension field
// GF(q^mu) and codeword vectors are judged by the rank of their expansion.
struct GeneratorMatrix {
    Mat mat;
    Metric metric = Metric::hamming;
    std::size_t distance = 0;
};

// [n, n-d+1, d] codes exist for d in {1, 2, n} over any field, otherwise the
// Reed-Solomon realization needs n <= q+1
bool mds_exists(std::size_t n, std::size_t d, const FieldPtr& f);

// Systematic [n, n-d+1, d] MDS generator: identity, parity check, repetition,
// or (extended) Reed-Solomon on the evaluation points 0, 1, 2, ... in
// canonical element order
GeneratorMatrix mds_generator(std::size_t n, std::size_t d, FieldPtr f);

std::vector<felt> encode(const GeneratorMatrix& g, std::span<const felt> message);

// Exact minimum Hamming weight over all q^k - 1 nonzero codewords
std::size_t min_hamming_distance_bruteforce(const GeneratorMatrix& g,
                                            std::uint64_t budget = std::uint64_t{1} << 22);

// Header line "metric=hamming d=<claim>" or "metric=rank mu=<mu> q=<q>
// d=<claim>", then the matrix in its text form
std::string render_generator(const GeneratorMatrix& g);
GeneratorMatrix parse_generator(const std::string& text);

}  // namespace fdrc
