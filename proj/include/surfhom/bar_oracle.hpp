#pragma once

// Hochschild homology straight from a chain complex, as a cross-check for the
// formula route. Uses the Hochschild complex reduced relative to the
// separable subalgebra spanned by the idempotents: a degree-n chain is a
// cyclically composable tuple (p_0, p_1, ..., p_n) of basis paths with
// p_1..p_n of positive length.

#include "surfhom/commutator.hpp"
#include "surfhom/exact_rank.hpp"
#include "surfhom/homology.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace surfhom {

inline constexpr std::size_t default_oracle_cap = 200'000;

struct TupleHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

struct ChainBasis {
    std::size_t degree = 0;
    std::vector<std::vector<std::uint32_t>> tuples; // entries index BarComplex::paths()
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, TupleHash> index;

    std::size_t size() const noexcept { return tuples.size(); }
};

struct BoundaryMatrix {
    std::size_t degree = 0;          // d_degree : C_degree -> C_{degree-1}
    std::size_t cols = 0;            // |C_{degree-1}|
    std::vector<SparseRow> rows;     // one per chain in C_degree
};

class BarComplex {
public:
    // `a` must carry tag A.
    explicit BarComplex(const GradedAlgebra& a, std::size_t cap = default_oracle_cap);

    const std::vector<Path>& paths() const noexcept { return paths_; }
    std::size_t cap() const noexcept { return cap_; }

    // Throws OracleTooLarge when the degree has more than cap() chains.
    const ChainBasis& chain_basis(std::size_t n) const;

    // d(p_0|...|p_n) = sum_{i<n} (-1)^i (..|p_i p_{i+1}|..) + (-1)^n (p_n p_0|p_1|..|p_{n-1}),
    // zero products dropped. Requires n >= 1.
    BoundaryMatrix boundary_matrix(std::size_t n) const;

    std::size_t boundary_rank(std::size_t n) const;

    // dim ker d_n - rank d_{n+1}.
    std::int64_t hh_dim(std::size_t n) const;

private:
    std::optional<std::uint32_t> product(std::uint32_t x, std::uint32_t y) const {
        auto v = mult_[static_cast<std::size_t>(x) * paths_.size() + y];
        if (v < 0)
            return std::nullopt;
        return static_cast<std::uint32_t>(v);
    }

    const GradedAlgebra& a_;
    std::size_t cap_;
    std::vector<Path> paths_;
    std::vector<std::int32_t> mult_;
    std::vector<std::vector<std::uint32_t>> from_;          // all paths by source
    std::vector<std::vector<std::uint32_t>> positive_from_; // positive-length paths by source
    std::vector<std::size_t> source_, target_;

    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::unique_ptr<ChainBasis>> bases_;
    mutable std::map<std::size_t, std::size_t> ranks_;
};

// True iff first * second is the zero matrix, where `first` maps C_n -> C_{n-1}
// and `second` maps C_{n-1} -> C_{n-2}.
bool composes_to_zero(const BoundaryMatrix& first, const BoundaryMatrix& second);

// HH column from the chain complex; degrees whose chain bases (n or n+1) exceed
// the cap stay empty, as do the cyclic columns.
HomologyTable oracle_table(const GradedAlgebra& a, std::size_t max_n,
                           std::size_t cap = default_oracle_cap);

// Convenience wrapper for a single degree.
std::int64_t hh_dim_bar(const GradedAlgebra& a, std::size_t n, std::size_t cap = default_oracle_cap);

} // namespace surfhom
