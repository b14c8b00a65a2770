#include "surfhom/report.hpp"

#include <algorithm>
#include <sstream>

namespace surfhom {

namespace {

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

} // namespace

std::string render_tables(const std::vector<const HomologyTable*>& tables, TableFormat format) {
    std::vector<std::string> header{"n"};
    const bool suffix = tables.size() > 1;
    for (const auto* t : tables)
        for (const char* col : {"HH", "HC", "HCco"})
            header.push_back(suffix ? std::string(col) + "_" + method_name(t->method) : col);

    std::size_t rows = 0;
    for (const auto* t : tables)
        rows = std::max(rows, t->rows.size());

    std::vector<std::vector<std::string>> cells{header};
    for (std::size_t n = 0; n < rows; ++n) {
        std::vector<std::string> line{std::to_string(n)};
        for (const auto* t : tables) {
            HomologyRow r;
            if (n < t->rows.size())
                r = t->rows[n];
            line.push_back(cell(r.hh));
            line.push_back(cell(r.hc));
            line.push_back(cell(r.hc_co));
        }
        cells.push_back(std::move(line));
    }

    std::ostringstream out;
    if (format == TableFormat::Tsv) {
        for (const auto& line : cells) {
            for (std::size_t k = 0; k < line.size(); ++k)
                out << (k ? "\t" : "") << line[k];
            out << '\n';
        }
        return out.str();
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t k = 0; k < line.size(); ++k)
            width[k] = std::max(width[k], line[k].size());
    for (const auto& line : cells) {
        for (std::size_t k = 0; k < line.size(); ++k)
            out << (k ? "  " : "") << std::string(width[k] - line[k].size(), ' ') << line[k];
        out << '\n';
    }
    return out.str();
}

std::string render_table(const HomologyTable& table, TableFormat format) {
    return render_tables({&table}, format);
}

} // namespace surfhom
