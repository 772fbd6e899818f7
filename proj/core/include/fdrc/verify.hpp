#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdrc/constructions.hpp"

namespace fdrc {

// Enumeration budget in codewords. The FDRC_BUDGET environment variable
// overrides the compiled default (2^22) when set to a positive integer.
std::uint64_t default_budget();

// Exact minimum rank over the q^k - 1 nonzero combinations of the basis.
// Messages run as radix-q counters; `workers` shards the counter range over
// threads and takes the min, so the result does not depend on worker count.
// Throws PreconditionError on a zero code, BudgetError when q^k > budget.
std::size_t min_rank_distance(const FerrersCode& code,
                              std::uint64_t budget = default_budget(),
                              std::size_t workers = 1);

struct CheckReport {
    bool conforms = false;     // every basis matrix is zero outside the dots
    bool independent = false;  // vectorized basis matrices have full rank
    std::size_t dimension = 0;
    std::size_t bound = 0;  // dot-count bound for the claimed distance
    std::size_t claimed_distance = 0;
    std::optional<std::size_t> distance;  // empty when past budget
    bool budget_exceeded = false;
    bool optimal = false;  // dimension == bound and distance certified

    std::string render() const;
    std::string render_json() const;
};

// Never throws for budget overruns; those surface as budget_exceeded with an
// empty distance.
CheckReport check_code(const FerrersCode& code,
                       std::uint64_t budget = default_budget(),
                       std::size_t workers = 1);

struct SweepRow {
    std::vector<std::size_t> gamma;
    std::size_t dimension = 0;
    std::size_t bound = 0;
    std::size_t gap = 0;  // bound - dimension
    std::string path;     // provenance of the chosen construction
    std::optional<std::size_t> distance;
};

// auto_construct + check_code over every diagram with exactly m rows and
// n columns.
std::vector<SweepRow> sweep(std::size_t m, std::size_t n, std::size_t delta,
                            FieldPtr base,
                            std::uint64_t budget = default_budget());

// Header line "gamma,k,bound,gap,path"; the gamma column is space separated.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace fdrc
