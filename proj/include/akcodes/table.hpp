#pragma once

#include <string>
#include <vector>

#include "akcodes/specfile.hpp"

namespace akcodes {

// The bundled reference table: twelve self-dual codes with their twist sets,
// form sets, generator polynomials, and claimed minimum distances. Rows whose
// printed source required interpretation carry a note.
const std::vector<CodeSpec>& bundled_table();

// Result of checking one table row.
struct RowResult {
    std::string name;
    std::size_t n = 0;
    std::uint32_t k = 1;
    VarSet S = 0;
    VarSet T = 0;
    bool skew_cyclic = false;
    bool self_dual = false;
    std::string d_ak;     // component-identity distance, or "infeasible"
    std::string d_gray;   // Gray image distance, or "infeasible"
    std::string table_d;  // claimed distance ("-" if the row has none)
    bool match = false;   // every feasible check agrees with the claim
    std::string notes;
    std::string error;  // nonempty when the row failed to build
};

struct TableReport {
    std::vector<RowResult> rows;
    bool all_match = false;

    // Tab-separated report: header then one line per row, UTF-8, LF endings.
    std::string tsv() const;
};

// Checks every row: builds the code, tests Theta_S-cyclicity and H_T
// self-duality, and computes the minimum distance under both interpretations
// (over A_k and of the Gray image) where feasible. A row matches when it is
// skew-cyclic, self-dual, and each feasible distance equals the claim.
// threads = 0 picks the hardware concurrency; rows are assembled in input
// order so the report is byte-identical for every thread count.
TableReport verify_table(const std::vector<CodeSpec>& rows, unsigned threads = 0);

}  // namespace akcodes
