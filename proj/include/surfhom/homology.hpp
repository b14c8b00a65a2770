#pragma once

// Dimensions of HH_n, HC_n and HC^n for the algebra of a triangulated surface.
//
// Two routes are provided. The quadratic-monomial route plugs brute-force
// commutator quotients of A and A^! into the general formulas for quadratic
// monomial algebras. The closed-form route only needs |Q_0| and the number of
// internal triangles.

#include "surfhom/commutator.hpp"
#include "surfhom/surface.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace surfhom {

enum class Method { Skoldberg, ClosedForm, BarOracle };

std::string method_name(Method m);

struct HomologyRow {
    // nullopt only in oracle tables, for degrees the oracle did not reach.
    std::optional<std::int64_t> hh;
    std::optional<std::int64_t> hc;
    std::optional<std::int64_t> hc_co;

    friend bool operator==(const HomologyRow&, const HomologyRow&) = default;
};

struct HomologyTable {
    Method method = Method::ClosedForm;
    std::size_t vertex_count = 0;
    std::vector<HomologyRow> rows; // index n = 0..max_n

    int max_n() const { return static_cast<int>(rows.size()) - 1; }
    // every column the method provides is filled
    bool complete() const;
};

struct AlgebraSummary {
    std::size_t vertex_count = 0;
    std::size_t internal_triangle_count = 0;
};

AlgebraSummary summarize(const Triangulation& t);

// Source of qdim_A(k) = dim (A/[A,A])_k and qdim_!(k) = dim (A^!/[A^!,A^!])_k.
class QuotientProvider {
public:
    virtual ~QuotientProvider() = default;
    virtual std::size_t vertex_count() const = 0;
    virtual std::size_t max_degree_A() const = 0;
    virtual std::size_t qdim_A(std::size_t k) const = 0;
    virtual std::size_t qdim_koszul(std::size_t k) const = 0;
};

// Brute force via commutator_span; each value is computed once and memoized.
class BruteForceQuotients final : public QuotientProvider {
public:
    explicit BruteForceQuotients(const BoundQuiver& bq);

    std::size_t vertex_count() const override;
    std::size_t max_degree_A() const override;
    std::size_t qdim_A(std::size_t k) const override;
    std::size_t qdim_koszul(std::size_t k) const override;

    const GradedAlgebra& algebra() const noexcept { return a_; }
    const GradedAlgebra& koszul_dual() const noexcept { return shriek_; }

private:
    std::size_t cached(std::map<std::size_t, std::size_t>& memo, const GradedAlgebra& alg,
                       std::size_t k) const;

    GradedAlgebra a_;
    GradedAlgebra shriek_;
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::size_t> memo_a_, memo_shriek_;
};

// HH_n for a quadratic monomial algebra:
//   n = 0:  |Q_0| + sum_{k>=1} qdim_A(k)
//   n = 1:  qdim_!(2) + sum_{k>=1} qdim_A(k)
//   n >= 2: qdim_!(n) + qdim_!(n+1)
std::int64_t hh_dim_skoldberg(std::size_t n, const QuotientProvider& q);

// HC_n in characteristic 0:
//   n = 0:         |Q_0| + sum_{k>=1} qdim_A(k)
//   n even, > 0:   |Q_0| + qdim_!(n+1)
//   n odd:         qdim_!(n+1)
std::int64_t hc_dim_skoldberg(std::size_t n, const QuotientProvider& q);

// HH_n = |Q_0| at n = 0, |int T| at n = 2, 3 mod 6, 0 otherwise.
std::int64_t hh_dim_closed(std::size_t n, const AlgebraSummary& s);
// HC_n = |Q_0| [n even] + |int T| [n = 2 mod 6]. The |Q_0| term in every even
// degree is HC_n(kQ_0), a direct summand of HC_n(A).
std::int64_t hc_dim_closed(std::size_t n, const AlgebraSummary& s);
// HC^n is dual to HC_n for a finite dimensional unital algebra.
std::int64_t hc_codim_closed(std::size_t n, const AlgebraSummary& s);

HomologyTable skoldberg_table(const QuotientProvider& q, std::size_t max_n);
HomologyTable closed_table(const AlgebraSummary& s, std::size_t max_n);

// Checks dim ~HH_n = dim ~HC_n + dim ~HC_{n-1} for 0 <= n <= n_max, where
// ~HH_n = HH_n - [n=0]|Q_0| and ~HC_n = HC_n - [n even]|Q_0| (~HC_{-1} = 0),
// and HC^n = HC_n. Returns the degrees where either fails; rows with missing
// entries are skipped.
std::vector<int> ses_dimension_check(const HomologyTable& table, int n_max);

// Degrees at which two tables differ (in any column), up to the shorter length.
std::vector<int> differing_degrees(const HomologyTable& a, const HomologyTable& b);

// Row-wise equality of all columns.
bool same_dimensions(const HomologyTable& a, const HomologyTable& b);

} // namespace surfhom
