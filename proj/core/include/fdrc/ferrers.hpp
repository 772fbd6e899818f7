#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fdrc/linalg.hpp"

namespace fdrc {

struct UpperBound {
    std::size_t value = 0;
    std::size_t argmin = 0;               // smallest minimizing row count
    std::vector<std::size_t> nus;         // nu_i for i = 0 .. delta-1
    std::vector<std::size_t> argmins;     // every minimizing i, ascending
};

// A Ferrers diagram: dots occupy the top gamma[c] cells of column c, with
// 1 <= gamma[0] <= ... <= gamma[n-1] and rows() == gamma[n-1]. Wide shapes
// (rows < cols) are representable; constructions that need the tall
// convention check it themselves.
class FerrersDiagram {
public:
    explicit FerrersDiagram(std::vector<std::size_t> gamma);

    // Grid of X (dot) and . per cell, or the compact "gamma: g0 g1 ..." line
    static FerrersDiagram parse(const std::string& text);
    std::string render() const;
    std::string render_compact() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return gamma_.size(); }
    const std::vector<std::size_t>& gamma() const { return gamma_; }
    std::size_t total_dots() const;

    bool has_dot(std::size_t r, std::size_t c) const;

    // dots in row i
    std::size_t row_count(std::size_t i) const;
    std::vector<std::size_t> rho() const;

    // Diagonal i runs from cell (i, n-1) up and to the left; theta counts its
    // dots. There are exactly rows() diagonals.
    std::size_t theta(std::size_t i) const;
    std::vector<std::size_t> thetas() const;
    // dotted cells of diagonal i, topmost first
    std::vector<std::pair<std::size_t, std::size_t>> diagonal_dots(std::size_t i) const;
    // false when some dot lies below the last diagonal (bottom-left corner
    // too tall), which the diagonal construction cannot cover
    bool diagonals_cover_all_dots() const;

    // dots left after deleting the first i rows and the delta-1-i rightmost
    // columns
    std::size_t nu(std::size_t i, std::size_t delta) const;
    UpperBound upper_bound(std::size_t delta) const;

    // true iff a is zero outside the dots; a must be rows() x cols()
    bool conforms(const Mat& a) const;

    // Flip along the secondary diagonal; dot (r, c) maps to (n-1-r', ...) via
    // the same cell map as anti_transpose(Mat)
    FerrersDiagram anti_transpose() const;

    // rows 0..a-1 of the b rightmost columns; always a valid diagram
    FerrersDiagram subdiagram_top_right(std::size_t a, std::size_t b) const;

    bool operator==(const FerrersDiagram& o) const { return gamma_ == o.gamma_; }
    bool operator!=(const FerrersDiagram& o) const { return !(*this == o); }

private:
    std::vector<std::size_t> gamma_;
    std::size_t rows_ = 0;
};

// Every diagram with exactly m rows and n columns, lexicographically
// ascending by gamma chain
std::vector<FerrersDiagram> enumerate_diagrams(std::size_t m, std::size_t n);

}  // namespace fdrc
