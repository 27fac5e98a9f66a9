#pragma once

#include <string>
#include <vector>

namespace steerkit {

struct ReproductionRow {
    std::string label;
    double computed = 0.0;
    double paper_value = 0.0;
    double abs_error = 0.0;
};

struct ReproductionTable {
    std::string name;       // CSV file stem
    double tolerance = 0.0;
    std::vector<ReproductionRow> rows;

    bool ok() const;
};

/// Recompute every published number at desk scale.
std::vector<ReproductionTable> run_reproduction();

/// Write one CSV per table (header `label,computed,paper_value,abs_error`,
/// '.' decimals, LF endings); returns false if any row misses its table's
/// tolerance.
bool write_reproduction_csv(const std::vector<ReproductionTable>& tables,
                            const std::string& out_dir);

std::string format_fixed6(double v);

}  // namespace steerkit
