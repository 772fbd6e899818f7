#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdrc/field.hpp"

namespace fdrc {

// Dense row-major matrix over a single field. Entries are bare felt values;
// the field travels with the matrix.
class Mat {
public:
    Mat(FieldPtr field, std::size_t rows, std::size_t cols);  // zero filled
    static Mat identity(FieldPtr field, std::size_t n);
    static Mat from_rows(FieldPtr field, const std::vector<std::vector<felt>>& rows);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    felt at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, felt v);
    felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const felt> row(std::size_t r) const;
    std::span<const felt> data() const { return data_; }
    std::span<felt> mutable_data() { return data_; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(felt s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat transpose() const;
    Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

private:
    FieldPtr f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<felt> data_;
};

// Rank of the matrix stored row-major in data (destroyed in the process),
// stopping early once `cap` independent rows are found. Returns min(rank, cap).
std::size_t rank_span(const Field& f, std::span<felt> data, std::size_t rows,
                      std::size_t cols, std::size_t cap);

std::size_t rank(const Mat& a);
std::size_t rank_at_most(const Mat& a, std::size_t cap);

// rank(a - b); the rank metric on same-shaped matrices
std::size_t rank_distance(const Mat& a, const Mat& b);

struct RowReduceResult {
    Mat reduced;                 // reduced row echelon form
    Mat transform;               // invertible, transform * input == reduced
    std::vector<std::size_t> pivots;
};

RowReduceResult row_reduce(const Mat& a);

// One solution of a x = b with free variables set to zero, or nullopt
std::optional<std::vector<felt>> solve(const Mat& a, std::span<const felt> b);

Mat inverse(const Mat& a);  // throws PreconditionError if singular

// v * a for a row vector v of length a.rows()
std::vector<felt> vec_mat(std::span<const felt> v, const Mat& a);

// Flip along the secondary diagonal: entry (r, c) of an m x n input lands at
// (n-1-c, m-1-r) of the n x m output. Preserves rank.
Mat anti_transpose(const Mat& a);

// Text form: field descriptor line, then one line of entries per row
std::string render_matrix(const Mat& a);
Mat parse_matrix(const std::string& text);

}  // namespace fdrc
