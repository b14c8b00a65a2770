#include "surfhom/exact_rank.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace surfhom {

namespace {

void divide_content(SparseRow& row) {
    mpz_class g = 0;
    for (const auto& [col, v] : row) {
        g = gcd(g, v);
        if (g == 1)
            return;
    }
    if (g == 0 || g == 1)
        return;
    for (auto& [col, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// piv_lead * row - row_lead * pivot; both rows share their leading column.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
    const mpz_class& a = pivot.front().second;
    const mpz_class& b = row.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            mpz_class v = a * row[i].second - b * pivot[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    divide_content(out);
    return out;
}

// Row key for duplicate detection; sign-normalized so r and -r collapse too.
struct RowLess {
    bool operator()(const SparseRow& x, const SparseRow& y) const {
        if (x.size() != y.size())
            return x.size() < y.size();
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k].first != y[k].first)
                return x[k].first < y[k].first;
            if (x[k].second != y[k].second)
                return x[k].second < y[k].second;
        }
        return false;
    }
};

} // namespace

SparseRow normalized(SparseRow row) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow out;
    for (auto& [col, v] : row) {
        if (!out.empty() && out.back().first == col)
            out.back().second += v;
        else
            out.emplace_back(col, std::move(v));
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

std::size_t exact_rank(std::vector<SparseRow> rows) {
    std::set<SparseRow, RowLess> unique;
    for (auto& r : rows) {
        r = normalized(std::move(r));
        if (r.empty())
            continue;
        divide_content(r);
        if (r.front().second < 0)
            for (auto& [c, v] : r)
                v = -v;
        unique.insert(std::move(r));
    }

    // Shorter rows first keeps fill-in down.
    std::vector<SparseRow> work(unique.begin(), unique.end());
    std::map<std::size_t, SparseRow> pivots;
    for (auto& row : work) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            row = eliminate(row, it->second);
        }
    }
    return pivots.size();
}

} // namespace surfhom
