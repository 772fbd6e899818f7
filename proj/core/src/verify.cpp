#include "fdrc/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "fdrc/util.hpp"

namespace fdrc {

namespace {

constexpr std::uint64_t kCompiledBudget = std::uint64_t{1} << 22;

// Minimum rank over message indices in [lo, hi), 0 < lo. A message index is
// read as radix-q digits, digit i scaling basis[i]; consecutive indices differ
// in a digit-increment plus carries, so the accumulated word is updated
// entrywise instead of being rebuilt.
std::size_t shard_min_rank(const FerrersCode& code, std::uint64_t lo,
                           std::uint64_t hi, std::size_t cap) {
    const Field& f = *code.field;
    const auto q = static_cast<std::size_t>(f.size());
    const std::size_t k = code.basis.size();
    const std::size_t rows = code.diagram.rows();
    const std::size_t cols = code.diagram.cols();
    const std::size_t cells = rows * cols;

    // scaled[(i * q + v) * cells ...] = v * basis[i]
    std::vector<felt> scaled(k * q * cells);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < q; ++v) {
            const Mat m = code.basis[i].scaled(static_cast<felt>(v));
            std::copy(m.data().begin(), m.data().end(),
                      scaled.begin() + static_cast<std::ptrdiff_t>((i * q + v) * cells));
        }

    std::vector<std::size_t> msg(k, 0);
    {
        std::uint64_t idx = lo;
        for (std::size_t i = 0; i < k && idx != 0; ++i) {
            msg[i] = static_cast<std::size_t>(idx % q);
            idx /= q;
        }
    }
    std::vector<felt> acc(cells, 0);
    for (std::size_t i = 0; i < k; ++i)
        if (msg[i] != 0) {
            const felt* s = &scaled[(i * q + msg[i]) * cells];
            for (std::size_t e = 0; e < cells; ++e) acc[e] = f.add(acc[e], s[e]);
        }

    std::size_t best = cap;
    std::vector<felt> scratch(cells);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::copy(acc.begin(), acc.end(), scratch.begin());
        const std::size_t r = rank_span(f, scratch, rows, cols, best);
        if (r < best) {
            best = r;
            if (best <= 1) break;  // 0 only with a dependent basis
        }
        if (idx + 1 == hi) break;
        std::size_t digit = 0;
        while (digit < k) {
            const std::size_t old = msg[digit];
            const std::size_t next = (old + 1) % q;
            msg[digit] = next;
            const felt* po = &scaled[(digit * q + old) * cells];
            const felt* pn = &scaled[(digit * q + next) * cells];
            for (std::size_t e = 0; e < cells; ++e)
                acc[e] = f.add(acc[e], f.sub(pn[e], po[e]));
            if (next != 0) break;
            ++digit;
        }
    }
    return best;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("FDRC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return v;
    }
    return kCompiledBudget;
}

std::size_t min_rank_distance(const FerrersCode& code, std::uint64_t budget,
                              std::size_t workers) {
    const std::size_t k = code.basis.size();
    if (k == 0) throw PreconditionError("zero code has no minimum distance");
    const std::uint64_t total = saturating_pow(code.field->size(), k);
    if (total > budget)
        throw BudgetError("q^k = " + std::to_string(total) +
                          " codewords exceed the budget of " + std::to_string(budget));

    const std::size_t cap = std::min(code.diagram.rows(), code.diagram.cols());
    const std::uint64_t count = total - 1;
    if (workers == 0) workers = 1;
    workers = static_cast<std::size_t>(
        std::min<std::uint64_t>(workers, count));
    if (workers <= 1) return shard_min_rank(code, 1, total, cap);

    std::vector<std::size_t> results(workers, cap);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = count / workers;
    const std::uint64_t rem = count % workers;
    std::uint64_t lo = 1;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        threads.emplace_back([&code, &results, lo, hi, cap, w] {
            results[w] = shard_min_rank(code, lo, hi, cap);
        });
        lo = hi;
    }
    for (auto& t : threads) t.join();
    return *std::min_element(results.begin(), results.end());
}

CheckReport check_code(const FerrersCode& code, std::uint64_t budget,
                       std::size_t workers) {
    CheckReport rep;
    rep.dimension = code.basis.size();
    rep.claimed_distance = code.delta;
    // distances beyond the width leave only the zero code, bound 0
    rep.bound = code.delta <= code.diagram.cols()
                    ? code.diagram.upper_bound(code.delta).value
                    : 0;

    const std::size_t rows = code.diagram.rows();
    const std::size_t cols = code.diagram.cols();
    rep.conforms = true;
    for (const Mat& m : code.basis)
        if (m.rows() != rows || m.cols() != cols ||
            !m.field()->same(*code.field) || !code.diagram.conforms(m)) {
            rep.conforms = false;
            break;
        }

    if (rep.dimension == 0) {
        rep.independent = true;
    } else if (rep.conforms) {
        std::vector<felt> stacked;
        stacked.reserve(rep.dimension * rows * cols);
        for (const Mat& m : code.basis)
            stacked.insert(stacked.end(), m.data().begin(), m.data().end());
        rep.independent = rank_span(*code.field, stacked, rep.dimension,
                                    rows * cols, rep.dimension) == rep.dimension;
    }

    if (rep.dimension > 0) {
        try {
            rep.distance = min_rank_distance(code, budget, workers);
        } catch (const BudgetError&) {
            rep.budget_exceeded = true;
        }
    }

    rep.optimal = rep.conforms && rep.independent && rep.dimension == rep.bound &&
                  (rep.dimension == 0 ||
                   (rep.distance.has_value() && *rep.distance >= rep.claimed_distance));
    return rep;
}

std::string CheckReport::render() const {
    std::ostringstream out;
    out << "conforms     " << yes_no(conforms) << "\n";
    out << "independent  " << yes_no(independent) << "\n";
    out << "k            " << dimension << "\n";
    out << "bound        " << bound << "\n";
    out << "delta        " << claimed_distance << "\n";
    out << "distance     ";
    if (distance.has_value())
        out << *distance;
    else if (budget_exceeded)
        out << "unverified (budget exceeded)";
    else
        out << "unverified";
    out << "\n";
    out << "optimal      " << yes_no(optimal) << "\n";
    return out.str();
}

std::string CheckReport::render_json() const {
    std::ostringstream out;
    out << "{\"conforms\":" << (conforms ? "true" : "false")
        << ",\"independent\":" << (independent ? "true" : "false")
        << ",\"k\":" << dimension << ",\"bound\":" << bound
        << ",\"delta\":" << claimed_distance << ",\"distance\":";
    if (distance.has_value())
        out << *distance;
    else
        out << "null";
    out << ",\"budget_exceeded\":" << (budget_exceeded ? "true" : "false")
        << ",\"optimal\":" << (optimal ? "true" : "false") << "}";
    return out.str();
}

std::vector<SweepRow> sweep(std::size_t m, std::size_t n, std::size_t delta,
                            FieldPtr base, std::uint64_t budget) {
    std::vector<SweepRow> rows;
    for (const FerrersDiagram& f : enumerate_diagrams(m, n)) {
        AutoResult res = auto_construct(f, delta, base);
        CheckReport rep = check_code(res.code, budget);
        SweepRow row{f.gamma(),
                     res.code.dimension(),
                     res.bound,
                     res.bound - res.code.dimension(),
                     res.code.provenance,
                     rep.distance};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "gamma,k,bound,gap,path\n";
    for (const SweepRow& row : rows) {
        for (std::size_t i = 0; i < row.gamma.size(); ++i)
            out << (i ? " " : "") << row.gamma[i];
        out << "," << row.dimension << "," << row.bound << "," << row.gap << ","
            << row.path << "\n";
    }
    return out.str();
}

}  // namespace fdrc
