#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdrc/ferrers.hpp"
#include "fdrc/field.hpp"
#include "fdrc/linalg.hpp"

namespace fdrc {

// A rank-metric code whose codewords conform to a Ferrers diagram: spanned by
// k independent conforming matrices over GF(q), with a claimed minimum rank
// distance. The claim is certified separately at desk scale.
struct FerrersCode {
    FerrersDiagram diagram;
    FieldPtr field;
    std::size_t delta = 1;
    std::vector<Mat> basis;
    std::string provenance;

    std::size_t dimension() const { return basis.size(); }
};

// Shortened systematic MRD code: information columns 0..n-delta keep only
// their top gamma_i expansion coordinates. Needs the delta-1 rightmost
// columns full and, for delta >= 2, at least as many rows as columns.
// Dimension sum(gamma_0..gamma_{n-delta}).
FerrersCode construct_es(const FerrersDiagram& f, std::size_t delta, FieldPtr base);

// An independent [theta_i, theta_i - delta + 1, delta] MDS codeword on the
// dotted cells of every diagonal long enough to carry one. Dimension
// sum max{0, theta_i - delta + 1}.
FerrersCode construct_mds_diagonals(const FerrersDiagram& f, std::size_t delta, FieldPtr base);

// Subcode of an MRD code built from the three-property generator matrix over
// GF(q^{n-1}), with an s x n bottom block repeating the first message's
// coordinates in the rightmost column, s = m-n+1. Dimension
// min{s, gamma_0} + sum_{i=1}^{n-delta} min{gamma_i, n-1}.
FerrersCode construct_subcode(const FerrersDiagram& f, std::size_t delta, FieldPtr base);

// Block-diagonal pairing of two codes of the same dimension over a shared
// message space; distance adds. The filler block sits top-right, full, sized
// filler_rows x filler_cols (0 picks the minimal legal m1 x n2).
FerrersCode combine_same_dimension(const FerrersCode& c1, const FerrersCode& c2,
                                   std::size_t filler_rows = 0, std::size_t filler_cols = 0);

// Interleaving of two codes of the same distance that overlap in ell full
// columns: codewords [[A, B], [0, D]] with B from c2 and (A | D) from c1.
// Dimensions add, distance stays.
FerrersCode combine_same_distance(const FerrersCode& c1, const FerrersCode& c2, std::size_t ell);

// Optimal distance-3 code on any square diagram: full rightmost columns (or
// top rows) route to construct_es, otherwise a subcode with s = 1 on the
// top-right square subdiagram, embedded back.
FerrersCode construct_square_delta3(const FerrersDiagram& f, FieldPtr base);

// Flip the diagram and every basis matrix along the secondary diagonal;
// dimension and distance are unchanged.
FerrersCode anti_transpose(const FerrersCode& c);

struct AutoResult {
    FerrersCode code;
    std::size_t bound = 0;
    bool optimal = false;
    std::vector<std::string> notes;
};

// Best code over all applicable constructions, including a bounded search
// over the two combining decompositions. Never throws on an unproductive
// diagram; the zero code with a diagnostic note is the fallback.
AutoResult auto_construct(const FerrersDiagram& f, std::size_t delta, FieldPtr base);

}  // namespace fdrc
