#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace surfhom {

// Sparse integer row, sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Sorts by column, merges duplicate columns and drops zeros.
SparseRow normalized(SparseRow row);

// Rank over Q by fraction-free elimination: a row is reduced against a pivot
// as piv * row - row_lead * pivot, then divided by its content. Zero rows and
// rows that agree up to a scalar are dropped up front.
std::size_t exact_rank(std::vector<SparseRow> rows);

} // namespace surfhom
