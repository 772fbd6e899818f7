#include "fdrc/gabidulin.hpp"

#include <algorithm>

#include "fdrc/util.hpp"

namespace fdrc {

namespace {

void check_extension(const FieldPtr& ext, std::size_t mu) {
    if (!ext || !ext->is_extension())
        throw PreconditionError("Gabidulin codes need an extension field");
    if (ext->degree() != mu)
        throw PreconditionError("mu disagrees with the field's extension degree");
}

}  // namespace

MooreGenerator gabidulin_generator(std::size_t mu, std::size_t eta, std::size_t delta,
                                   FieldPtr ext) {
    check_extension(ext, mu);
    if (eta == 0 || eta > mu) throw PreconditionError("need 1 <= eta <= mu");
    if (delta == 0 || delta > eta) throw PreconditionError("need 1 <= delta <= eta");
    const std::size_t kappa = eta - delta + 1;
    const felt a = ext->alpha();
    std::vector<felt> g(eta);
    for (std::size_t j = 0; j < eta; ++j) g[j] = ext->pow(a, j);
    Mat m(ext, kappa, eta);
    for (std::size_t i = 0; i < kappa; ++i)
        for (std::size_t j = 0; j < eta; ++j) m.set(i, j, ext->frobenius(g[j], i));
    return {std::move(m), std::move(g), delta};
}

GeneratorMatrix systematize(const MooreGenerator& g) {
    auto rr = row_reduce(g.mat);
    bool ok = rr.pivots.size() == g.mat.rows();
    for (std::size_t i = 0; ok && i < rr.pivots.size(); ++i) ok = rr.pivots[i] == i;
    if (!ok) throw Error("Moore matrix failed to systematize");  // independent g's rule this out
    return {std::move(rr.reduced), Metric::rank, g.delta};
}

Mat lemma3_matrix(std::size_t mu, std::size_t eta, std::size_t d, FieldPtr ext) {
    check_extension(ext, mu);
    if (eta < 2 || eta - 1 > mu) throw PreconditionError("need 2 <= eta <= mu+1");
    if (d == 0 || d > eta - 1) throw PreconditionError("need 1 <= d <= eta-1");
    const std::size_t kappa = eta - d;
    const felt a = ext->alpha();

    std::vector<felt> g(eta - 1);
    for (std::size_t j = 0; j + 1 < eta; ++j) g[j] = ext->pow(a, j);

    if (kappa == 1) {
        Mat row(ext, 1, eta);
        for (std::size_t j = 0; j + 1 < eta; ++j) row.set(0, j, g[j]);
        return row;  // the appended entry stays zero
    }

    // Moore matrix on g_0..g_{eta-2}
    Mat w(ext, kappa, eta - 1);
    for (std::size_t i = 0; i < kappa; ++i)
        for (std::size_t j = 0; j + 1 < eta; ++j) w.set(i, j, ext->frobenius(g[j], i));

    // g_0 = 1 is fixed by Frobenius, so subtracting row 0 clears column 0
    // below the top
    for (std::size_t i = 1; i < kappa; ++i)
        for (std::size_t j = 0; j + 1 < eta; ++j) w.set(i, j, ext->sub(w(i, j), w(0, j)));

    // pick t_1..t_{kappa-1} so adding sum_i t_i row_i to row 0 zeroes its
    // entries in columns 1..kappa-1; the square system is always consistent
    {
        Mat s(ext, kappa - 1, kappa - 1);
        std::vector<felt> b(kappa - 1);
        for (std::size_t c = 1; c < kappa; ++c) {
            for (std::size_t j = 1; j < kappa; ++j) s.set(c - 1, j - 1, w(j, c));
            b[c - 1] = ext->neg(w(0, c));
        }
        auto t = solve(s, b);
        if (!t) throw Error("row-clearing system unexpectedly inconsistent");
        for (std::size_t j = 1; j < kappa; ++j) {
            if ((*t)[j - 1] == 0) continue;
            for (std::size_t c = 0; c + 1 < eta; ++c)
                w.set(0, c, ext->add(w(0, c), ext->mul((*t)[j - 1], w(j, c))));
        }
    }

    // consecutive differences turn rows 1.. into the Moore matrix on
    // h_j = g_j^{[1]} - g_j with exponents 0..kappa-2
    for (std::size_t i = kappa - 1; i >= 2; --i)
        for (std::size_t j = 0; j + 1 < eta; ++j) w.set(i, j, ext->sub(w(i, j), w(i - 1, j)));

    // h_1..h_{eta-2} are independent over the base field; extend them by one
    std::vector<felt> h(eta - 2);
    for (std::size_t j = 1; j + 1 < eta; ++j) h[j - 1] = w(1, j);
    const felt last = find_independent(h, ext);

    Mat out(ext, kappa, eta);
    for (std::size_t i = 0; i < kappa; ++i)
        for (std::size_t j = 0; j + 1 < eta; ++j) out.set(i, j, w(i, j));
    for (std::size_t i = 1; i < kappa; ++i) out.set(i, eta - 1, ext->frobenius(last, i - 1));

    // rows 1.. restricted to columns 1..kappa-1 form a Moore matrix on
    // h_1..h_{kappa-1}, hence invertible; its inverse systematizes the block
    Mat block(ext, kappa - 1, kappa - 1);
    for (std::size_t i = 1; i < kappa; ++i)
        for (std::size_t j = 1; j < kappa; ++j) block.set(i - 1, j - 1, out(i, j));
    Mat bottom(ext, kappa - 1, eta);
    for (std::size_t i = 1; i < kappa; ++i)
        for (std::size_t j = 0; j < eta; ++j) bottom.set(i - 1, j, out(i, j));
    Mat fixed = inverse(block) * bottom;
    for (std::size_t i = 1; i < kappa; ++i)
        for (std::size_t j = 0; j < eta; ++j) out.set(i, j, fixed(i - 1, j));
    return out;
}

std::size_t mrd_min_rank_distance_bruteforce(const Mat& g, const Basis& beta,
                                             std::uint64_t budget) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k == 0) throw PreconditionError("zero code has no minimum distance");
    const FieldPtr& ext = g.field();
    if (!ext->is_extension()) throw PreconditionError("rank distance needs an extension field");
    if (!beta.field()->same(*ext)) throw PreconditionError("basis over a different field");
    const std::uint64_t qm = ext->size();
    if (saturating_pow(qm, k) > budget)
        throw BudgetError("message space exceeds the enumeration budget");
    const std::size_t m = ext->degree();

    // phi image of v * row_r for every scalar v, so stepping one message
    // digit swaps just two precomputed summands
    std::vector<Mat> scaled;
    scaled.reserve(k * qm);
    for (std::size_t r = 0; r < k; ++r)
        for (std::uint64_t v = 0; v < qm; ++v) {
            std::vector<felt> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = ext->mul(felt(v), g(r, j));
            scaled.push_back(phi_expand(row, beta));
        }

    const Field& base = *ext->base();
    std::vector<felt> msg(k, 0);
    Mat acc(ext->base(), m, n);
    std::vector<felt> scratch(m * n);
    const std::size_t cap = std::min(m, n);
    std::size_t best = cap + 1;
    while (true) {
        std::size_t digit = 0;
        while (digit < k) {
            const felt old = msg[digit];
            const felt next = felt((old + 1) % qm);
            msg[digit] = next;
            const auto sub = scaled[digit * qm + old].data();
            const auto add = scaled[digit * qm + next].data();
            auto cur = acc.mutable_data();
            for (std::size_t t = 0; t < cur.size(); ++t)
                cur[t] = base.add(base.sub(cur[t], sub[t]), add[t]);
            if (next != 0) break;
            ++digit;
        }
        if (digit == k) break;  // rolled over to the zero message
        std::copy(acc.data().begin(), acc.data().end(), scratch.begin());
        best = std::min(best, rank_span(base, scratch, m, n, best));
        if (best == 0) break;
    }
    if (best > cap) throw Error("no nonzero codeword enumerated");
    return best;
}

}  // namespace fdrc
