// Grid runners: cross-tier verification, table generation, CSV/JSON output.

#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hk/closedform.hpp"
#include "hk/enumeration.hpp"
#include "hk/exact.hpp"

namespace hk {

// Raised when two tiers disagree while a single value was requested.
class tier_mismatch_error : public std::runtime_error {
public:
    explicit tier_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first worker
// exception.  Results must be written to preallocated slots by index so the
// output order stays deterministic.
void parallel_for(std::size_t count, i64 jobs, const std::function<void(std::size_t)>& fn);

struct Range {
    i64 lo = 1, hi = 1;
    bool empty() const { return hi < lo; }
};

// "3" or "1..4"
Range parse_range(const std::string& text);

struct TableSpec {
    Range a, c, d;
    i64 p = 2;
    i64 n_max = 4;
    std::string tier = "enum";  // enum | oracle | closed | all
    i64 jobs = 0;               // 0 = hardware concurrency
};

struct TableRow {
    i64 a, c, d, p, n, q;
    Int hk;
    Rat ehk_value;
    std::string tier;
};

// All rows of the grid, sorted by (a, c, d, n).  With tier "all" the three
// tiers are computed and must agree; a disagreement raises
// tier_mismatch_error.
std::vector<TableRow> table_rows(const TableSpec& spec);

void emit_csv(const std::vector<TableRow>& rows, std::ostream& os);
void emit_json(const std::vector<TableRow>& rows, std::ostream& os);

struct VerifySpec {
    Range a{1, 3}, c{1, 4}, d{1, 4};
    std::vector<i64> primes{2, 3, 5};
    i64 q_oracle_max = 81;
    i64 q_closed_max = 729;
    i64 jobs = 0;
};

struct Mismatch {
    i64 a, c, d, q, p;
    std::string left_tier, right_tier;
    Int left, right;
};

struct VerifyReport {
    std::string grid;
    i64 oracle_instances = 0;
    i64 closed_instances = 0;
    std::vector<Mismatch> mismatches;
    // informational: compact-transcription deviations over the closed grid
    std::map<std::string, i64> variant_deviations;
    double oracle_seconds = 0.0;
    double closed_seconds = 0.0;

    bool ok() const { return mismatches.empty(); }
};

// Phase 1: enumeration vs lattice-point oracle on prime powers <= q_oracle_max.
// Phase 2: closed form vs enumeration on prime powers <= q_closed_max.
VerifyReport run_verify(const VerifySpec& spec);

std::string verify_to_text(const VerifyReport& report);

}  // namespace hk
