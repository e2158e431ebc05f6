#pragma once

#include "qp/exact.hpp"

#include <vector>

namespace qp {

// A printed-table cell that disagrees with recomputation.
struct Erratum {
    long long row = 0;
    long long col = 0;
    ExactInt printed;
    ExactInt recomputed;
};

// Embedded copies of the printed reference tables, kept byte-for-byte as
// printed, typos included. Comparison happens against freshly recomputed
// values, so any printed defect shows up as an erratum instead of being
// silently patched here.

// quasi triangle, s = 2, rows 0..9
const std::vector<std::vector<long long>>& golden_tribonacci_table();

// quasi triangle, s = 3, rows 0..9; row 7 is known to carry printed defects
const std::vector<std::vector<long long>>& golden_quadrabonacci_table();

// s-Pascal triangle, s = 3, rows 0..5; the printed row 5 stops at column 13
const std::vector<std::vector<long long>>& golden_biquadranomial_table();

// recompute the quasi triangle and diff against a printed table; ragged or
// truncated printed rows compare only the printed cells
std::vector<Erratum> compare_golden_quasi(int s, const std::vector<std::vector<long long>>& printed);

// same, against bisnomial rows
std::vector<Erratum> compare_golden_bisnomial(int s, const std::vector<std::vector<long long>>& printed);

} // namespace qp
