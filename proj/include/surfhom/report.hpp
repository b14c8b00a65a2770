#pragma once

#include "surfhom/homology.hpp"

#include <string>
#include <vector>

namespace surfhom {

enum class TableFormat { Pretty, Tsv };

// One table: tsv is "n\tHH\tHC\tHCco" then one row per degree; pretty is the
// same columns right-aligned. Several tables: columns are suffixed with the
// method name. Entries the oracle did not reach print as "-".
std::string render_tables(const std::vector<const HomologyTable*>& tables, TableFormat format);

std::string render_table(const HomologyTable& table, TableFormat format);

} // namespace surfhom
