#pragma once

#include <cstdint>
#include <vector>

#include "fdrc/field.hpp"
#include "fdrc/linalg.hpp"
#include "fdrc/mds.hpp"
#include "fdrc/phi.hpp"

namespace fdrc {

// kappa x eta matrix whose entry (i, j) is g_j^{q^i} for defining elements
// g_0..g_{eta-1} that are linearly independent over the coefficient field
struct MooreGenerator {
    Mat mat;
    std::vector<felt> elements;
    std::size_t delta = 0;
};

// Moore generator with kappa = eta-delta+1 rows on g_j = alpha^j; the row
// space has minimum rank distance exactly delta (an MRD code).
// pre: ext is an extension field, eta <= degree(ext), 1 <= delta <= eta
MooreGenerator gabidulin_generator(std::size_t mu, std::size_t eta, std::size_t delta,
                                   FieldPtr ext);

// T*G with the identity on the first kappa columns; same row space
GeneratorMatrix systematize(const MooreGenerator& g);

// kappa x eta with kappa = eta-d satisfying: left kappa x kappa block is the
// identity; entry (0, eta-1) is zero; the first eta-1 columns generate a code
// of minimum rank distance d, as does the bottom-right (kappa-1) x (eta-2)
// block, while the bottom-right (kappa-1) x (eta-1) block reaches d+1.
// pre: ext is an extension field, eta-1 <= degree(ext), 1 <= d <= eta-1
Mat lemma3_matrix(std::size_t mu, std::size_t eta, std::size_t d, FieldPtr ext);

// Exact minimum over nonzero messages u of rank(phi_expand(u*G, beta))
std::size_t mrd_min_rank_distance_bruteforce(const Mat& g, const Basis& beta,
                                             std::uint64_t budget = std::uint64_t{1} << 22);

}  // namespace fdrc
