#include "fdrc/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace fdrc {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : f_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!f_) throw PreconditionError("matrix requires a field");
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
    Mat m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<felt>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Mat m(std::move(field), rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw PreconditionError("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) {
            if (rows[r][c] >= m.f_->size())
                throw PreconditionError("matrix entry out of field range");
            m.data_[r * nc + c] = rows[r][c];
        }
    }
    return m;
}

felt Mat::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
    return data_[r * cols_ + c];
}

void Mat::set(std::size_t r, std::size_t c, felt v) {
    if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
    if (v >= f_->size()) throw PreconditionError("matrix entry out of field range");
    data_[r * cols_ + c] = v;
}

std::span<const felt> Mat::row(std::size_t r) const {
    if (r >= rows_) throw PreconditionError("matrix row out of range");
    return std::span<const felt>(data_).subspan(r * cols_, cols_);
}

namespace {

void check_shape(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix shape mismatch");
    if (!a.field()->same(*b.field())) throw PreconditionError("field mismatch");
}

}  // namespace

Mat Mat::operator+(const Mat& o) const {
    check_shape(*this, o);
    Mat out(f_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_->add(data_[i], o.data_[i]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    check_shape(*this, o);
    Mat out(f_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_->sub(data_[i], o.data_[i]);
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch");
    if (!f_->same(*o.f_)) throw PreconditionError("field mismatch");
    Mat out(f_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const felt v = data_[r * cols_ + k];
            if (v == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.data_[r * o.cols_ + c] = f_->add(
                    out.data_[r * o.cols_ + c], f_->mul(v, o.data_[k * o.cols_ + c]));
        }
    return out;
}

Mat Mat::scaled(felt s) const {
    Mat out(f_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f_->mul(data_[i], s);
    return out;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_->same(*o.f_) && data_ == o.data_;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](felt v) { return v == 0; });
}

Mat Mat::transpose() const {
    Mat out(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.data_[c * rows_ + r] = data_[r * cols_ + c];
    return out;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw PreconditionError("submatrix out of range");
    Mat out(f_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            out.data_[r * nc + c] = data_[(r0 + r) * cols_ + (c0 + c)];
    return out;
}

std::size_t rank_span(const Field& f, std::span<felt> a, std::size_t rows,
                      std::size_t cols, std::size_t cap) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t t = c; t < cols; ++t)
                std::swap(a[r * cols + t], a[p * cols + t]);
        const felt pinv = f.inv(a[r * cols + c]);
        for (std::size_t rr = r + 1; rr < rows; ++rr) {
            const felt v = a[rr * cols + c];
            if (v == 0) continue;
            const felt factor = f.neg(f.mul(v, pinv));
            a[rr * cols + c] = 0;
            for (std::size_t t = c + 1; t < cols; ++t)
                a[rr * cols + t] =
                    f.add(a[rr * cols + t], f.mul(factor, a[r * cols + t]));
        }
        if (++r >= cap) return cap;
    }
    return r;
}

std::size_t rank(const Mat& a) { return rank_at_most(a, a.rows() + 1); }

std::size_t rank_at_most(const Mat& a, std::size_t cap) {
    std::vector<felt> buf(a.data().begin(), a.data().end());
    return rank_span(*a.field(), buf, a.rows(), a.cols(), cap);
}

std::size_t rank_distance(const Mat& a, const Mat& b) {
    check_shape(a, b);
    return rank(a - b);
}

RowReduceResult row_reduce(const Mat& a) {
    const Field& f = *a.field();
    const std::size_t m = a.rows(), n = a.cols();
    // work on [A | I]
    std::vector<felt> w((n + m) * m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) w[r * (n + m) + c] = a(r, c);
        w[r * (n + m) + n + r] = 1;
    }
    const std::size_t width = n + m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && w[p * width + c] == 0) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t t = 0; t < width; ++t)
                std::swap(w[row * width + t], w[p * width + t]);
        const felt s = f.inv(w[row * width + c]);
        if (s != 1)
            for (std::size_t t = 0; t < width; ++t)
                w[row * width + t] = f.mul(w[row * width + t], s);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            const felt v = w[r * width + c];
            if (v == 0) continue;
            const felt factor = f.neg(v);
            for (std::size_t t = 0; t < width; ++t)
                w[r * width + t] = f.add(w[r * width + t], f.mul(factor, w[row * width + t]));
        }
        pivots.push_back(c);
        ++row;
    }
    RowReduceResult out{Mat(a.field(), m, n), Mat(a.field(), m, m), std::move(pivots)};
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.reduced.set(r, c, w[r * width + c]);
        for (std::size_t c = 0; c < m; ++c) out.transform.set(r, c, w[r * width + n + c]);
    }
    return out;
}

std::optional<std::vector<felt>> solve(const Mat& a, std::span<const felt> b) {
    if (b.size() != a.rows()) throw PreconditionError("right hand side length mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    auto rr = row_reduce(aug);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        if (rr.pivots[i] == a.cols()) return std::nullopt;  // pivot in the b column
    std::vector<felt> x(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        x[rr.pivots[i]] = rr.reduced(i, a.cols());
    return x;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw PreconditionError("inverse requires a square matrix");
    auto rr = row_reduce(a);
    if (rr.pivots.size() != a.rows()) throw PreconditionError("matrix is singular");
    return rr.transform;
}

std::vector<felt> vec_mat(std::span<const felt> v, const Mat& a) {
    if (v.size() != a.rows()) throw PreconditionError("vector length mismatch");
    const Field& f = *a.field();
    std::vector<felt> out(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < a.cols(); ++c)
            out[c] = f.add(out[c], f.mul(v[r], a(r, c)));
    }
    return out;
}

Mat anti_transpose(const Mat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Mat out(a.field(), n, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.set(n - 1 - c, m - 1 - r, a(r, c));
    return out;
}

std::string render_matrix(const Mat& a) {
    std::ostringstream os;
    os << a.field()->descriptor() << "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c) os << ' ';
            os << a(r, c);
        }
        os << "\n";
    }
    return os.str();
}

Mat parse_matrix(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string descriptor;
    std::vector<std::vector<felt>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        if (descriptor.empty()) {
            ls >> descriptor;
            std::string extra;
            if (descriptor.empty()) continue;  // skip leading blank lines
            if (ls >> extra) throw ParseError("unexpected token after field descriptor");
            continue;
        }
        std::vector<felt> row;
        std::uint64_t v;
        while (ls >> v) {
            if (v > 0xffffffffull) throw ParseError("matrix entry out of range");
            row.push_back(felt(v));
        }
        if (!ls.eof()) throw ParseError("matrix entries must be integers");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (descriptor.empty()) throw ParseError("matrix text needs a field descriptor line");
    FieldPtr f = Field::from_descriptor(descriptor);
    for (const auto& row : rows)
        for (felt v : row)
            if (v >= f->size()) throw ParseError("matrix entry out of field range");
    if (rows.empty()) return Mat(std::move(f), 0, 0);
    const std::size_t nc = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != nc) throw ParseError("matrix rows have differing lengths");
    return Mat::from_rows(std::move(f), rows);
}

}  // namespace fdrc
