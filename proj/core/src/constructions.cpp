#include "fdrc/constructions.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "fdrc/gabidulin.hpp"
#include "fdrc/phi.hpp"

namespace fdrc {

namespace {

void paste(Mat& dst, const Mat& src, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) dst.set(r0 + r, c0 + c, src(r, c));
}

FerrersCode zero_code(const FerrersDiagram& f, const FieldPtr& base, std::size_t delta,
                      std::string prov) {
    return {f, base, delta, {}, std::move(prov)};
}

// place a code living on a top-right subdiagram back into the full diagram
FerrersCode embed_top_right(const FerrersCode& sub, const FerrersDiagram& big,
                            std::string prov) {
    FerrersCode out{big, sub.field, sub.delta, {}, std::move(prov)};
    const std::size_t c0 = big.cols() - sub.diagram.cols();
    for (const Mat& a : sub.basis) {
        Mat w(sub.field, big.rows(), big.cols());
        paste(w, a, 0, c0);
        out.basis.push_back(std::move(w));
    }
    return out;
}

}  // namespace

FerrersCode construct_es(const FerrersDiagram& f, std::size_t delta, FieldPtr base) {
    const std::size_t m = f.rows(), n = f.cols();
    if (delta == 0 || delta > n) throw PreconditionError("need 1 <= delta <= n");
    const auto& gamma = f.gamma();
    FerrersCode out{f, base, delta, {}, "es(delta=" + std::to_string(delta) + ")"};
    if (delta == 1) {
        // the whole conforming space: one unit matrix per dot
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < gamma[c]; ++r) {
                Mat u(base, m, n);
                u.set(r, c, 1);
                out.basis.push_back(std::move(u));
            }
        return out;
    }
    for (std::size_t j = n - delta + 1; j < n; ++j)
        if (gamma[j] != m) throw PreconditionError("the delta-1 rightmost columns must be full");
    if (n > m) throw PreconditionError("needs at least as many rows as columns");

    FieldPtr ext = Field::extend(base, static_cast<std::uint32_t>(m));
    Basis beta = Basis::polynomial(ext);
    auto sys = systematize(gabidulin_generator(m, n, delta, ext));
    const std::size_t kappa = n - delta + 1;
    std::vector<felt> u(kappa, 0);
    std::vector<felt> coords(m, 0);
    for (std::size_t i = 0; i < kappa; ++i) {
        for (std::size_t t = 0; t < gamma[i]; ++t) {
            coords[t] = 1;
            u[i] = beta.combine(coords);
            coords[t] = 0;
            out.basis.push_back(phi_expand(vec_mat(u, sys.mat), beta));
        }
        u[i] = 0;
    }
    return out;
}

FerrersCode construct_mds_diagonals(const FerrersDiagram& f, std::size_t delta, FieldPtr base) {
    const std::size_t m = f.rows(), n = f.cols();
    if (delta == 0 || delta > n) throw PreconditionError("need 1 <= delta <= n");
    FerrersCode out{f, base, delta, {}, "mds(delta=" + std::to_string(delta) + ")"};
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t th = f.theta(i);
        if (th < delta) continue;
        if (!mds_exists(th, delta, base))
            throw PreconditionError("no MDS code of length " + std::to_string(th) +
                                    " and distance " + std::to_string(delta) +
                                    " over this field");
        auto g = mds_generator(th, delta, base);
        auto cells = f.diagonal_dots(i);
        for (std::size_t r = 0; r < g.mat.rows(); ++r) {
            Mat w(base, m, n);
            for (std::size_t t = 0; t < th; ++t)
                w.set(cells[t].first, cells[t].second, g.mat(r, t));
            out.basis.push_back(std::move(w));
        }
    }
    return out;
}

FerrersCode construct_subcode(const FerrersDiagram& f, std::size_t delta, FieldPtr base) {
    const std::size_t m = f.rows(), n = f.cols();
    if (delta < 2 || delta > n) throw PreconditionError("need 2 <= delta <= n");
    if (m + 1 < n) throw PreconditionError("needs rows >= cols - 1");
    const std::size_t s = m - n + 1;
    const auto& gamma = f.gamma();
    for (std::size_t j = n - delta + 1; j < n; ++j)
        if (gamma[j] < n - 1)
            throw PreconditionError("the delta-1 rightmost columns need at least n-1 dots");
    const std::size_t u0 = std::min(s, gamma[0]);
    if (gamma[n - 1] < n - 1 + u0)
        throw PreconditionError("the rightmost column cannot hold the repeated coordinates");

    FieldPtr ext = Field::extend(base, static_cast<std::uint32_t>(n - 1));
    Basis beta = Basis::polynomial(ext);
    Mat g = lemma3_matrix(n - 1, n, delta - 1, ext);
    const std::size_t kappa = n - delta + 1;

    FerrersCode out{f, base, delta, {}, "subcode(delta=" + std::to_string(delta) + ")"};
    std::vector<felt> u(kappa, 0);
    std::vector<felt> coords(n - 1, 0);
    auto push = [&](std::size_t repeat_row) {
        Mat w(base, m, n);
        paste(w, phi_expand(vec_mat(u, g), beta), 0, 0);
        if (repeat_row < m) w.set(repeat_row, n - 1, 1);
        out.basis.push_back(std::move(w));
    };
    // the first message symbol also drives the bottom block's last column
    for (std::size_t t = 0; t < u0; ++t) {
        coords[t] = 1;
        u[0] = beta.combine(coords);
        coords[t] = 0;
        push(n - 1 + t);
    }
    u[0] = 0;
    for (std::size_t i = 1; i < kappa; ++i) {
        const std::size_t lim = std::min(gamma[i], n - 1);
        for (std::size_t t = 0; t < lim; ++t) {
            coords[t] = 1;
            u[i] = beta.combine(coords);
            coords[t] = 0;
            push(m);
        }
        u[i] = 0;
    }
    return out;
}

FerrersCode combine_same_dimension(const FerrersCode& c1, const FerrersCode& c2,
                                   std::size_t filler_rows, std::size_t filler_cols) {
    if (!c1.field->same(*c2.field)) throw PreconditionError("codes over different fields");
    const std::size_t k = c1.basis.size();
    if (k == 0 || c2.basis.size() != k)
        throw PreconditionError("need two codes of the same nonzero dimension");
    const std::size_t m1 = c1.diagram.rows(), n1 = c1.diagram.cols();
    const std::size_t m2 = c2.diagram.rows(), n2 = c2.diagram.cols();
    const std::size_t m3 = filler_rows == 0 ? m1 : filler_rows;
    const std::size_t n3 = filler_cols == 0 ? n2 : filler_cols;
    if (m3 < m1 || n3 < n2) throw PreconditionError("filler block too small");

    std::vector<std::size_t> gamma = c1.diagram.gamma();
    gamma.insert(gamma.end(), n3 - n2, m3);
    for (std::size_t j = 0; j < n2; ++j) gamma.push_back(m3 + c2.diagram.gamma()[j]);
    FerrersDiagram f(std::move(gamma));

    FerrersCode out{f, c1.field, c1.delta + c2.delta, {},
                    "combine4[" + c1.provenance + " | " + c2.provenance + "]"};
    for (std::size_t i = 0; i < k; ++i) {
        Mat w(c1.field, m3 + m2, n1 + n3);
        paste(w, c1.basis[i], 0, 0);
        paste(w, c2.basis[i], m3, n1 + n3 - n2);
        out.basis.push_back(std::move(w));
    }
    return out;
}

FerrersCode combine_same_distance(const FerrersCode& c1, const FerrersCode& c2,
                                  std::size_t ell) {
    if (!c1.field->same(*c2.field)) throw PreconditionError("codes over different fields");
    if (c1.delta != c2.delta) throw PreconditionError("need equal claimed distances");
    const std::size_t m1 = c1.diagram.rows(), n1 = c1.diagram.cols();
    const std::size_t m2 = c2.diagram.rows(), n2 = c2.diagram.cols();
    if (ell > n1 || ell > n2) throw PreconditionError("ell exceeds a diagram width");
    const auto& g1 = c1.diagram.gamma();
    const auto& g2 = c2.diagram.gamma();
    for (std::size_t j = n1 - ell; j < n1; ++j)
        if (g1[j] != m1)
            throw PreconditionError("the ell rightmost columns of the first code must be full");
    for (std::size_t j = n2 - ell; j < n2; ++j)
        if (g2[j] != m2)
            throw PreconditionError("the ell rightmost columns of the second code must be full");
    if (ell < n1 && ell < n2 && g2[0] < g1[n1 - ell - 1])
        throw PreconditionError("the second diagram's columns are too short to sit beside the first");

    const std::size_t rows = ell > 0 ? m1 + m2 : m2;
    const std::size_t cols = n1 + n2 - ell;
    std::vector<std::size_t> gamma(g1.begin(), g1.end() - static_cast<std::ptrdiff_t>(ell));
    gamma.insert(gamma.end(), g2.begin(), g2.end() - static_cast<std::ptrdiff_t>(ell));
    gamma.insert(gamma.end(), ell, rows);
    FerrersDiagram f(std::move(gamma));

    FerrersCode out{f, c1.field, c1.delta, {},
                    "combine5[" + c1.provenance + " | " + c2.provenance +
                        " | ell=" + std::to_string(ell) + "]"};
    // (A | D) from the first code: A keeps the top-left position, D drops to
    // the bottom m1 rows of the ell full columns
    for (const Mat& a : c1.basis) {
        Mat w(c1.field, rows, cols);
        for (std::size_t r = 0; r < m1; ++r) {
            for (std::size_t c = 0; c + ell < n1; ++c) w.set(r, c, a(r, c));
            for (std::size_t c = n1 - ell; c < n1; ++c)
                w.set(rows - m1 + r, c + n2 - ell, a(r, c));
        }
        out.basis.push_back(std::move(w));
    }
    // B from the second code occupies its own columns at the top
    for (const Mat& b : c2.basis) {
        Mat w(c1.field, rows, cols);
        paste(w, b, 0, n1 - ell);
        out.basis.push_back(std::move(w));
    }
    return out;
}

FerrersCode construct_square_delta3(const FerrersDiagram& f, FieldPtr base) {
    const std::size_t n = f.cols();
    if (f.rows() != n) throw PreconditionError("needs a square diagram");
    if (n < 3) throw PreconditionError("distance 3 needs at least 3 rows and columns");
    auto ub = f.upper_bound(3);
    if (ub.value == 0) return zero_code(f, base, 3, "square3(zero)");

    const auto& gamma = f.gamma();
    const std::size_t rho1 = f.row_count(1);
    if (ub.nus[1] == ub.value) {
        // one row and one column removed: gamma_0 = 1, and a square top-right
        // subdiagram with s = 1 carries the whole dimension
        if (gamma[n - 2] >= rho1) {
            const std::size_t a = gamma[n - 2] + 1;
            FerrersCode sub = construct_subcode(f.subdiagram_top_right(a, a), 3, base);
            return embed_top_right(sub, f, "square3[" + sub.provenance + "]");
        }
        const std::size_t a = rho1 + 1;
        FerrersCode sub = anti_transpose(
            construct_subcode(f.subdiagram_top_right(a, a).anti_transpose(), 3, base));
        return embed_top_right(sub, f, "square3[" + sub.provenance + "]");
    }
    if (ub.nus[0] <= ub.nus[2]) {
        // two-column removal is tightest, so the two rightmost columns are full
        FerrersCode c = construct_es(f, 3, base);
        c.provenance = "square3[" + c.provenance + "]";
        return c;
    }
    FerrersCode c = anti_transpose(construct_es(f.anti_transpose(), 3, base));
    c.provenance = "square3[" + c.provenance + "]";
    return c;
}

FerrersCode anti_transpose(const FerrersCode& c) {
    FerrersCode out{c.diagram.anti_transpose(), c.field, c.delta, {},
                    "flip[" + c.provenance + "]"};
    out.basis.reserve(c.basis.size());
    for (const Mat& a : c.basis) out.basis.push_back(anti_transpose(a));
    return out;
}

namespace {

struct AutoContext {
    FieldPtr base;
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, FerrersCode> memo;
    std::size_t nodes = 0;
    static constexpr std::size_t kNodeBudget = 4000;
};

FerrersCode truncated(FerrersCode c, std::size_t k) {
    if (c.basis.size() > k) {
        c.basis.erase(c.basis.begin() + static_cast<std::ptrdiff_t>(k), c.basis.end());
        c.provenance += "(cut to " + std::to_string(k) + ")";
    }
    return c;
}

FerrersCode auto_best(AutoContext& ctx, const FerrersDiagram& f, std::size_t delta,
                      std::vector<std::string>* notes) {
    const auto key = std::make_pair(f.gamma(), delta);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    ++ctx.nodes;
    const std::size_t m = f.rows(), n = f.cols();

    if (m < n) {
        if (notes) notes->push_back("working on the flipped diagram");
        FerrersCode best = anti_transpose(auto_best(ctx, f.anti_transpose(), delta, notes));
        ctx.memo.emplace(key, best);
        return best;
    }
    if (delta > n) {
        FerrersCode best = zero_code(f, ctx.base, delta, "zero");
        ctx.memo.emplace(key, best);
        return best;
    }

    const std::size_t bound = f.upper_bound(delta).value;
    FerrersCode best = zero_code(f, ctx.base, delta, "zero");
    auto consider = [&](FerrersCode&& cand, const char* label) {
        if (cand.dimension() > best.dimension()) {
            best = std::move(cand);
            if (notes)
                notes->push_back(std::string(label) + ": k=" +
                                 std::to_string(best.dimension()));
        }
    };
    auto open = [&] { return best.dimension() < bound; };
    if (bound == 0) {
        ctx.memo.emplace(key, best);
        return best;
    }

    try {
        consider(construct_es(f, delta, ctx.base), "es");
    } catch (const Error&) {}
    if (open() && m == n && delta >= 2) {
        try {
            consider(anti_transpose(construct_es(f.anti_transpose(), delta, ctx.base)),
                     "es,flip");
        } catch (const Error&) {}
    }
    if (open() && m == n && delta == 3) {
        try {
            consider(construct_square_delta3(f, ctx.base), "square3");
        } catch (const Error&) {}
    }
    if (open()) {
        try {
            consider(construct_subcode(f, delta, ctx.base), "subcode");
        } catch (const Error&) {}
    }
    if (open() && m <= n + 1) {  // the flipped diagram is n x m; subcode needs n+1 >= m
        try {
            consider(anti_transpose(construct_subcode(f.anti_transpose(), delta, ctx.base)),
                     "subcode,flip");
        } catch (const Error&) {}
    }
    if (open()) {
        try {
            consider(construct_mds_diagonals(f, delta, ctx.base), "mds");
        } catch (const Error&) {}
    }

    if (open() && ctx.nodes < AutoContext::kNodeBudget) {
        const auto& gamma = f.gamma();
        // block-diagonal splits: left columns over a full filler, the taller
        // right columns continue below it
        for (std::size_t n1 = 1; n1 < n && open(); ++n1) {
            for (std::size_t m3 = gamma[n1 - 1]; m3 <= gamma[n1] && open(); ++m3) {
                if (gamma[n - 1] <= m3) break;  // nothing left for the bottom block
                std::vector<std::size_t> g2;
                for (std::size_t j = n1; j < n; ++j)
                    if (gamma[j] > m3) g2.push_back(gamma[j] - m3);
                FerrersDiagram f1(std::vector<std::size_t>(gamma.begin(), gamma.begin() + n1));
                FerrersDiagram f2(std::move(g2));
                for (std::size_t d1 = 1; d1 < delta && open(); ++d1) {
                    FerrersCode c1 = auto_best(ctx, f1, d1, nullptr);
                    FerrersCode c2 = auto_best(ctx, f2, delta - d1, nullptr);
                    const std::size_t k = std::min(c1.dimension(), c2.dimension());
                    if (k == 0 || k <= best.dimension()) continue;
                    auto combined = combine_same_dimension(truncated(std::move(c1), k),
                                                           truncated(std::move(c2), k), m3,
                                                           n - n1);
                    if (combined.diagram != f) continue;
                    consider(std::move(combined), "combine4");
                }
            }
        }
        // interleaved splits sharing ell full columns
        std::size_t full = 0;
        while (full < n && gamma[n - 1 - full] == m) ++full;
        for (std::size_t ell = 0; ell <= full && ell < n && open(); ++ell) {
            for (std::size_t t = 1; t + ell < n && open(); ++t) {
                if (ell == 0) {
                    FerrersDiagram f1(std::vector<std::size_t>(gamma.begin(), gamma.begin() + t));
                    FerrersDiagram f2(std::vector<std::size_t>(gamma.begin() + t, gamma.end()));
                    FerrersCode c1 = auto_best(ctx, f1, delta, nullptr);
                    FerrersCode c2 = auto_best(ctx, f2, delta, nullptr);
                    if (c1.dimension() + c2.dimension() <= best.dimension()) continue;
                    auto combined = combine_same_distance(c1, c2, 0);
                    if (combined.diagram != f) continue;
                    consider(std::move(combined), "combine5");
                    continue;
                }
                for (std::size_t m2v = gamma[n - ell - 1]; m2v + gamma[t - 1] <= m && open();
                     ++m2v) {
                    std::vector<std::size_t> g1(gamma.begin(), gamma.begin() + t);
                    g1.insert(g1.end(), ell, m - m2v);
                    std::vector<std::size_t> g2(gamma.begin() + t,
                                                gamma.end() - static_cast<std::ptrdiff_t>(ell));
                    g2.insert(g2.end(), ell, m2v);
                    FerrersCode c1 = auto_best(ctx, FerrersDiagram(std::move(g1)), delta, nullptr);
                    FerrersCode c2 = auto_best(ctx, FerrersDiagram(std::move(g2)), delta, nullptr);
                    if (c1.dimension() + c2.dimension() <= best.dimension()) continue;
                    auto combined = combine_same_distance(c1, c2, ell);
                    if (combined.diagram != f) continue;
                    consider(std::move(combined), "combine5");
                }
            }
        }
    }
    ctx.memo.emplace(key, best);
    return best;
}

}  // namespace

AutoResult auto_construct(const FerrersDiagram& f, std::size_t delta, FieldPtr base) {
    if (delta == 0) throw PreconditionError("need delta >= 1");
    if (delta > std::min(f.rows(), f.cols()))
        return {zero_code(f, base, delta, "zero"), 0, true,
                {"distance exceeds the largest possible rank; only the zero code fits"}};
    AutoContext ctx{std::move(base), {}, 0};
    std::vector<std::string> notes;
    FerrersCode code = auto_best(ctx, f, delta, &notes);
    AutoResult res{std::move(code), f.upper_bound(delta).value, false, std::move(notes)};
    res.optimal = res.code.dimension() == res.bound;
    if (res.code.dimension() == 0 && res.bound > 0)
        res.notes.push_back("no construction applied; zero code returned");
    res.notes.push_back("chosen: " + res.code.provenance);
    return res;
}

}  // namespace fdrc
