#include "surfhom/homology.hpp"

#include <algorithm>

namespace surfhom {

std::string method_name(Method m) {
    switch (m) {
    case Method::Skoldberg:
        return "skoldberg";
    case Method::ClosedForm:
        return "closed";
    case Method::BarOracle:
        return "oracle";
    }
    return "?";
}

bool HomologyTable::complete() const {
    // the oracle only fills the HH column
    const bool cyclic = method != Method::BarOracle;
    return std::all_of(rows.begin(), rows.end(), [&](const HomologyRow& r) {
        return r.hh && (!cyclic || (r.hc && r.hc_co));
    });
}

AlgebraSummary summarize(const Triangulation& t) {
    return {t.arc_count(), internal_triangles(t).size()};
}

BruteForceQuotients::BruteForceQuotients(const BoundQuiver& bq)
    : a_(bq, AlgebraTag::A), shriek_(bq, AlgebraTag::AShriek) {}

std::size_t BruteForceQuotients::vertex_count() const { return a_.quiver().vertex_count(); }

std::size_t BruteForceQuotients::max_degree_A() const { return *a_.max_degree(); }

std::size_t BruteForceQuotients::cached(std::map<std::size_t, std::size_t>& memo,
                                        const GradedAlgebra& alg, std::size_t k) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo.find(k); it != memo.end())
            return it->second;
    }
    auto value = quotient_dim(alg, k);
    std::lock_guard lock(mutex_);
    return memo.emplace(k, value).first->second;
}

std::size_t BruteForceQuotients::qdim_A(std::size_t k) const { return cached(memo_a_, a_, k); }

std::size_t BruteForceQuotients::qdim_koszul(std::size_t k) const {
    return cached(memo_shriek_, shriek_, k);
}

namespace {

std::int64_t positive_part_A(const QuotientProvider& q) {
    std::int64_t sum = 0;
    for (std::size_t k = 1; k <= q.max_degree_A(); ++k)
        sum += static_cast<std::int64_t>(q.qdim_A(k));
    return sum;
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

} // namespace

std::int64_t hh_dim_skoldberg(std::size_t n, const QuotientProvider& q) {
    if (n == 0)
        return i64(q.vertex_count()) + positive_part_A(q);
    if (n == 1)
        return i64(q.qdim_koszul(2)) + positive_part_A(q);
    return i64(q.qdim_koszul(n)) + i64(q.qdim_koszul(n + 1));
}

std::int64_t hc_dim_skoldberg(std::size_t n, const QuotientProvider& q) {
    if (n == 0)
        return i64(q.vertex_count()) + positive_part_A(q);
    if (n % 2 == 0)
        return i64(q.vertex_count()) + i64(q.qdim_koszul(n + 1));
    return i64(q.qdim_koszul(n + 1));
}

std::int64_t hh_dim_closed(std::size_t n, const AlgebraSummary& s) {
    if (n == 0)
        return i64(s.vertex_count);
    if (n % 6 == 2 || n % 6 == 3)
        return i64(s.internal_triangle_count);
    return 0;
}

std::int64_t hc_dim_closed(std::size_t n, const AlgebraSummary& s) {
    std::int64_t d = n % 2 == 0 ? i64(s.vertex_count) : 0;
    if (n % 6 == 2)
        d += i64(s.internal_triangle_count);
    return d;
}

std::int64_t hc_codim_closed(std::size_t n, const AlgebraSummary& s) { return hc_dim_closed(n, s); }

HomologyTable skoldberg_table(const QuotientProvider& q, std::size_t max_n) {
    HomologyTable t;
    t.method = Method::Skoldberg;
    t.vertex_count = q.vertex_count();
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto hc = hc_dim_skoldberg(n, q);
        t.rows.push_back({hh_dim_skoldberg(n, q), hc, hc});
    }
    return t;
}

HomologyTable closed_table(const AlgebraSummary& s, std::size_t max_n) {
    HomologyTable t;
    t.method = Method::ClosedForm;
    t.vertex_count = s.vertex_count;
    for (std::size_t n = 0; n <= max_n; ++n)
        t.rows.push_back({hh_dim_closed(n, s), hc_dim_closed(n, s), hc_codim_closed(n, s)});
    return t;
}

std::vector<int> ses_dimension_check(const HomologyTable& table, int n_max) {
    std::vector<int> bad;
    const auto q0 = i64(table.vertex_count);
    const int last = std::min(n_max, table.max_n());
    for (int n = 0; n <= last; ++n) {
        const auto& row = table.rows[n];
        if (!row.hh || !row.hc)
            continue;
        bool ok = !row.hc_co || *row.hc_co == *row.hc;
        const auto reduced_hh = *row.hh - (n == 0 ? q0 : 0);
        const auto reduced_hc = *row.hc - (n % 2 == 0 ? q0 : 0);
        std::int64_t reduced_prev = 0;
        if (n > 0) {
            const auto& prev = table.rows[n - 1];
            if (!prev.hc)
                continue;
            reduced_prev = *prev.hc - ((n - 1) % 2 == 0 ? q0 : 0);
        }
        ok = ok && reduced_hh == reduced_hc + reduced_prev;
        if (!ok)
            bad.push_back(n);
    }
    return bad;
}

std::vector<int> differing_degrees(const HomologyTable& a, const HomologyTable& b) {
    std::vector<int> out;
    const auto n = std::min(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a.rows[i] == b.rows[i]))
            out.push_back(static_cast<int>(i));
    return out;
}

bool same_dimensions(const HomologyTable& a, const HomologyTable& b) {
    return a.rows == b.rows;
}

} // namespace surfhom
