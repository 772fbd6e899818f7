#include "fdrc/ferrers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fdrc {

FerrersDiagram::FerrersDiagram(std::vector<std::size_t> gamma) : gamma_(std::move(gamma)) {
    if (gamma_.empty()) throw PreconditionError("diagram needs at least one column");
    if (gamma_.front() == 0) throw PreconditionError("column heights must be positive");
    if (!std::is_sorted(gamma_.begin(), gamma_.end()))
        throw PreconditionError("column heights must be non-decreasing left to right");
    rows_ = gamma_.back();
}

std::size_t FerrersDiagram::total_dots() const {
    return std::accumulate(gamma_.begin(), gamma_.end(), std::size_t{0});
}

bool FerrersDiagram::has_dot(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= gamma_.size())
        throw PreconditionError("cell outside the diagram box");
    return r < gamma_[c];
}

std::size_t FerrersDiagram::row_count(std::size_t i) const {
    if (i >= rows_) throw PreconditionError("row index out of range");
    // columns are sorted, so count the suffix with gamma > i
    const auto it = std::upper_bound(gamma_.begin(), gamma_.end(), i);
    return std::size_t(gamma_.end() - it);
}

std::vector<std::size_t> FerrersDiagram::rho() const {
    std::vector<std::size_t> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row_count(i);
    return out;
}

std::size_t FerrersDiagram::theta(std::size_t i) const { return diagonal_dots(i).size(); }

std::vector<std::size_t> FerrersDiagram::thetas() const {
    std::vector<std::size_t> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = theta(i);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FerrersDiagram::diagonal_dots(
    std::size_t i) const {
    if (i >= rows_) throw PreconditionError("diagonal index out of range");
    const std::size_t n = gamma_.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t tmax = std::min(i, n - 1);
    for (std::size_t t = tmax + 1; t-- > 0;) {  // descending t = ascending row
        const std::size_t r = i - t, c = n - 1 - t;
        if (r < gamma_[c]) out.emplace_back(r, c);
    }
    return out;
}

bool FerrersDiagram::diagonals_cover_all_dots() const {
    // dot (r, c) lies on diagonal r + (n-1-c); the deepest one per column is
    // at r = gamma[c]-1
    const std::size_t n = gamma_.size();
    for (std::size_t c = 0; c < n; ++c)
        if (gamma_[c] - 1 + (n - 1 - c) >= rows_) return false;
    return true;
}

std::size_t FerrersDiagram::nu(std::size_t i, std::size_t delta) const {
    const std::size_t n = gamma_.size();
    if (delta < 1 || delta > n) throw PreconditionError("distance out of range");
    if (i >= delta) throw PreconditionError("row removal count out of range");
    std::size_t dots = 0;
    for (std::size_t j = 0; j + delta <= n + i; ++j)
        dots += gamma_[j] > i ? gamma_[j] - i : 0;
    return dots;
}

UpperBound FerrersDiagram::upper_bound(std::size_t delta) const {
    UpperBound out;
    out.nus.reserve(delta);
    for (std::size_t i = 0; i < delta; ++i) out.nus.push_back(nu(i, delta));
    out.value = *std::min_element(out.nus.begin(), out.nus.end());
    for (std::size_t i = 0; i < delta; ++i)
        if (out.nus[i] == out.value) out.argmins.push_back(i);
    out.argmin = out.argmins.front();
    return out;
}

bool FerrersDiagram::conforms(const Mat& a) const {
    if (a.rows() != rows_ || a.cols() != gamma_.size())
        throw PreconditionError("matrix shape does not match the diagram");
    for (std::size_t c = 0; c < gamma_.size(); ++c)
        for (std::size_t r = gamma_[c]; r < rows_; ++r)
            if (a(r, c) != 0) return false;
    return true;
}

FerrersDiagram FerrersDiagram::anti_transpose() const {
    const auto r = rho();
    return FerrersDiagram(std::vector<std::size_t>(r.rbegin(), r.rend()));
}

FerrersDiagram FerrersDiagram::subdiagram_top_right(std::size_t a, std::size_t b) const {
    const std::size_t n = gamma_.size();
    if (a == 0 || a > rows_ || b == 0 || b > n)
        throw PreconditionError("subdiagram size out of range");
    std::vector<std::size_t> g(b);
    for (std::size_t j = 0; j < b; ++j) g[j] = std::min(gamma_[n - b + j], a);
    return FerrersDiagram(std::move(g));
}

std::string FerrersDiagram::render() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < gamma_.size(); ++c) os << (r < gamma_[c] ? 'X' : '.');
        os << "\n";
    }
    return os.str();
}

std::string FerrersDiagram::render_compact() const {
    std::ostringstream os;
    os << "gamma:";
    for (auto g : gamma_) os << ' ' << g;
    return os.str();
}

FerrersDiagram FerrersDiagram::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> grid;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) {
            if (!grid.empty()) break;  // blank line ends the grid
            continue;
        }
        if (grid.empty() && line.rfind("gamma:", 0) == 0) {
            std::istringstream gs(line.substr(6));
            std::vector<std::size_t> gamma;
            long long v;
            while (gs >> v) {
                if (v <= 0) throw ParseError("column heights must be positive");
                gamma.push_back(std::size_t(v));
            }
            if (!gs.eof()) throw ParseError("column heights must be integers");
            if (gamma.empty()) throw ParseError("empty gamma line");
            try {
                return FerrersDiagram(std::move(gamma));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what());
            }
        }
        grid.push_back(line);
    }
    if (grid.empty()) throw ParseError("empty diagram text");

    const std::size_t m = grid.size(), n = grid.front().size();
    for (const auto& row : grid)
        if (row.size() != n) throw ParseError("diagram rows have differing lengths");
    std::vector<std::size_t> gamma(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r) {
            const char ch = grid[r][c];
            if (ch != 'X' && ch != '.')
                throw ParseError("diagram cells must be X or .");
            if (ch == 'X') {
                if (r != gamma[c])
                    throw ParseError("dots must fill each column from the top");
                ++gamma[c];
            }
        }
    }
    for (std::size_t c = 0; c + 1 < n; ++c)
        if (gamma[c] > gamma[c + 1])
            throw ParseError("dots must be right justified (column heights decreasing)");
    if (gamma.front() == 0) throw ParseError("leftmost column has no dots");
    if (gamma.back() != m) throw ParseError("bottom rows carry no dots");
    return FerrersDiagram(std::move(gamma));
}

std::vector<FerrersDiagram> enumerate_diagrams(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw PreconditionError("diagram dimensions must be positive");
    std::vector<FerrersDiagram> out;
    std::vector<std::size_t> gamma(n, 1);
    gamma[n - 1] = m;
    while (true) {
        out.emplace_back(gamma);
        // lexicographic successor among non-decreasing chains: bump the last
        // free column still below m, then level everything after it
        std::size_t i = n - 1;
        while (i > 0 && gamma[i - 1] == m) --i;
        if (i == 0) return out;  // all free columns maxed out
        --i;
        ++gamma[i];
        for (std::size_t j = i + 1; j + 1 < n; ++j) gamma[j] = gamma[i];
    }
}

}  // namespace fdrc
