#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stoprules {

// One row of the cost-bound table, transcribed verbatim from the printed
// source. b_printed is the bound as printed; b_effective is the bound the
// printed probabilities actually correspond to (they differ only on the one
// row whose printed b is a typo). Anomalous rows carry a note.
struct TableIRow {
    std::string bound_kind;  // "add" or "mult"
    double bound_value;      // d or alpha
    int r;
    double p;
    double e_printed;         // E[W_r], printed at 2 decimals
    std::int64_t b_printed;
    std::int64_t b_effective;
    double pb_normal;  // printed P_b (normal approximation), 3 decimals
    double pb_exact;   // printed P_b' (exact), 3 decimals
    double err;        // printed Err, 3 decimals
    bool anomalous = false;
    std::string note;
};

// One cell of the success-probability table: P_m at 4 decimals.
struct TableIIRow {
    int m;
    double p;
    double p_m;
};

// Directory the fixture files are loaded from by default (set at configure
// time; override per call for relocated data).
std::string default_data_dir();

std::vector<TableIRow> load_table_i(const std::string& path);
std::vector<TableIIRow> load_table_ii(const std::string& path);

struct CellCheck {
    std::string name;
    double printed;
    double computed;  // rounded to the printed precision before comparing
    bool pass;
};

struct RowResult {
    std::string label;
    std::int64_t bound_used = 0;     // table I: b the probabilities are computed at
    std::int64_t bound_derived = 0;  // table I: b from resolve_bound (round half-up)
    bool anomalous = false;
    std::string note;
    std::vector<CellCheck> cells;
    bool pass = true;  // all cells pass
};

struct ReproductionReport {
    std::string table;  // "I" or "II"
    std::vector<RowResult> rows;
    int cells_checked = 0;
    int cells_failed = 0;       // over non-anomalous rows only
    int anomalous_rows = 0;
    bool pass = false;          // true iff every non-anomalous cell matches
};

// Recompute every cell and compare at the printed precision. The printed Err
// column is the difference of the two printed (3-decimal) probability
// columns, so the recomputed probabilities are rounded before differencing.
ReproductionReport reproduce_table_i(const std::vector<TableIRow>& rows);
ReproductionReport reproduce_table_ii(const std::vector<TableIIRow>& rows);

}  // namespace stoprules
