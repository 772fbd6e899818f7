#pragma once

#include <span>
#include <vector>

#include "fdrc/field.hpp"
#include "fdrc/linalg.hpp"

namespace fdrc {

// The expansion map between vectors over an extension field GF(q^m) and
// m x n matrices over GF(q): column j of the matrix holds the basis
// coordinates of v_j.

Mat phi_expand(std::span<const felt> v, const Basis& beta);
std::vector<felt> phi_compress(const Mat& a, const Basis& beta);

// true iff the elements expand to a full-rank set of columns; the empty set
// is independent
bool linearly_independent_over_base(std::span<const felt> s, const FieldPtr& ext);

// The first element, scanning 0, 1, 2, ... of the extension field, that is
// independent of span(s). Throws if s spans the whole field.
felt find_independent(std::span<const felt> s, const FieldPtr& ext);

}  // namespace fdrc
