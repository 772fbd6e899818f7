#include "fdrc/mds.hpp"

#include <sstream>

#include "fdrc/util.hpp"

namespace fdrc {

bool mds_exists(std::size_t n, std::size_t d, const FieldPtr& f) {
    if (n == 0 || d == 0 || d > n) return false;
    if (d == 1 || d == 2 || d == n) return true;
    return f->size() + 1 >= n;
}

GeneratorMatrix mds_generator(std::size_t n, std::size_t d, FieldPtr f) {
    if (!mds_exists(n, d, f))
        throw PreconditionError("no MDS code with these parameters over this field");
    const std::size_t k = n - d + 1;

    if (d == 1) return {Mat::identity(std::move(f), n), Metric::hamming, 1};

    if (d == n) {
        Mat g(f, 1, n);
        for (std::size_t j = 0; j < n; ++j) g.set(0, j, 1);
        return {std::move(g), Metric::hamming, n};
    }

    if (d == 2) {
        Mat g(f, k, n);
        const felt minus_one = f->neg(1);
        for (std::size_t i = 0; i < k; ++i) {
            g.set(i, i, 1);
            g.set(i, n - 1, minus_one);
        }
        return {std::move(g), Metric::hamming, 2};
    }

    // Reed-Solomon rows x_j^i on distinct points, extended by the column
    // (0,...,0,1) when n = q+1
    const bool extended = (n == f->size() + 1);
    const std::size_t points = extended ? n - 1 : n;
    Mat g(f, k, n);
    for (std::size_t j = 0; j < points; ++j) {
        const felt x = f->element(j);
        for (std::size_t i = 0; i < k; ++i) g.set(i, j, f->pow(x, i));
    }
    if (extended) g.set(k - 1, n - 1, 1);

    auto rr = row_reduce(g);
    for (std::size_t i = 0; i < k; ++i)
        if (rr.pivots[i] != i)
            throw Error("MDS generator failed to systematize");  // unreachable for MDS
    return {std::move(rr.reduced), Metric::hamming, d};
}

std::vector<felt> encode(const GeneratorMatrix& g, std::span<const felt> message) {
    return vec_mat(message, g.mat);
}

std::size_t min_hamming_distance_bruteforce(const GeneratorMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.mat.rows(), n = g.mat.cols();
    if (k == 0) throw PreconditionError("zero code has no minimum distance");
    const Field& f = *g.mat.field();
    if (saturating_pow(f.size(), k) > budget)
        throw BudgetError("message space exceeds the enumeration budget");

    std::vector<felt> msg(k, 0);
    std::vector<felt> word(n, 0);
    std::size_t best = n + 1;
    while (true) {
        // odometer step; update the codeword by the changed digits only
        std::size_t digit = 0;
        while (digit < k) {
            const felt old = msg[digit];
            const felt next = felt((old + 1) % f.size());
            msg[digit] = next;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j],
                                f.sub(f.mul(next, g.mat(digit, j)), f.mul(old, g.mat(digit, j))));
            if (next != 0) break;
            ++digit;
        }
        if (digit == k) break;  // rolled over to zero: done
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
        if (w < best) best = w;
    }
    if (best > n) throw Error("no nonzero codeword enumerated");
    return best;
}

std::string render_generator(const GeneratorMatrix& g) {
    std::ostringstream os;
    if (g.metric == Metric::hamming) {
        os << "metric=hamming d=" << g.distance << "\n";
    } else {
        const FieldPtr& ext = g.mat.field();
        if (!ext->is_extension())
            throw PreconditionError("rank metric generators need an extension field");
        os << "metric=rank mu=" << ext->degree() << " q=" << ext->coeff_size()
           << " d=" << g.distance << "\n";
    }
    os << render_matrix(g.mat);
    return os.str();
}

GeneratorMatrix parse_generator(const std::string& text) {
    const auto eol = text.find('\n');
    if (eol == std::string::npos) throw ParseError("generator text lacks a header line");
    std::istringstream hs(text.substr(0, eol));
    std::string tok;
    GeneratorMatrix out{Mat(Field::gf(2, 1), 0, 0), Metric::hamming, 0};
    bool have_metric = false, have_d = false;
    std::uint64_t mu = 0, q = 0;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad generator header token: " + tok);
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "metric") {
            if (val == "hamming") out.metric = Metric::hamming;
            else if (val == "rank") out.metric = Metric::rank;
            else throw ParseError("unknown metric: " + val);
            have_metric = true;
        } else if (key == "d") {
            out.distance = std::stoull(val);
            have_d = true;
        } else if (key == "mu") {
            mu = std::stoull(val);
        } else if (key == "q") {
            q = std::stoull(val);
        } else {
            throw ParseError("unknown generator header key: " + key);
        }
    }
    if (!have_metric || !have_d) throw ParseError("generator header needs metric= and d=");
    out.mat = parse_matrix(text.substr(eol + 1));
    if (out.metric == Metric::rank) {
        const FieldPtr& ext = out.mat.field();
        if (!ext->is_extension() || ext->degree() != mu || ext->coeff_size() != q)
            throw ParseError("rank generator header disagrees with the matrix field");
    }
    return out;
}

}  // namespace fdrc
