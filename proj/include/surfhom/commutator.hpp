#pragma once

// Graded commutator subspaces [B,B] of B = A or A^! and the dimensions of the
// graded pieces of B/[B,B], computed by exact rank over Q.

#include "surfhom/quiver.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace surfhom {

// A (tag A) or A^! (tag AShriek) with lazily enumerated per-degree bases.
// Degree pieces are cached; safe to share between threads.
class GradedAlgebra {
public:
    GradedAlgebra(BoundQuiver bq, AlgebraTag tag);

    AlgebraTag tag() const noexcept { return tag_; }
    const Quiver& quiver() const noexcept { return bq_.quiver; }
    const RelationSet& relations() const noexcept { return bq_.relations; }

    // Empty for degrees above max_degree() (tag A only).
    const std::vector<Path>& basis(std::size_t n) const;
    std::optional<std::size_t> index_of(const Path& p) const;

    // Highest nonzero degree of A; nullopt for A^!, which is infinite dimensional.
    std::optional<std::size_t> max_degree() const;

    // 0 on all of A, path length on A^!.
    std::size_t homological_degree(std::size_t internal_degree) const noexcept {
        return tag_ == AlgebraTag::A ? 0 : internal_degree;
    }

    std::optional<Path> multiply(const Path& x, const Path& y) const {
        return surfhom::multiply(bq_.quiver, x, y, tag_, bq_.relations);
    }

private:
    struct Piece {
        std::vector<Path> paths;
        std::map<Path, std::size_t> index;
    };
    const Piece& piece(std::size_t n) const;

    BoundQuiver bq_;
    AlgebraTag tag_;
    std::optional<GradedBasis> finite_; // tag A
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::unique_ptr<Piece>> pieces_;
};

// Homogeneous element in the fixed ordered basis of one degree piece.
struct GradedVector {
    std::size_t degree = 0;
    std::map<std::size_t, mpq_class> coords; // absent = 0

    bool is_zero() const { return coords.empty(); }
};

GradedVector basis_vector(const GradedAlgebra& alg, const Path& p);

GradedVector operator+(const GradedVector& x, const GradedVector& y);
GradedVector operator*(const mpq_class& c, const GradedVector& x);

// Bilinear product xy.
GradedVector product(const GradedAlgebra& alg, const GradedVector& x, const GradedVector& y);

// xy - (-1)^{homdeg(x) homdeg(y)} yx.
GradedVector graded_commutator(const GradedAlgebra& alg, const GradedVector& x,
                               const GradedVector& y);

struct CommutatorSpan {
    std::size_t degree = 0;
    std::vector<GradedVector> generators;
    std::size_t rank = 0;
};

// Commutators of all basis pairs whose degrees add up to n, idempotents included.
CommutatorSpan commutator_span(const GradedAlgebra& alg, std::size_t n);

// dim B_n - rank [B,B]_n.
std::size_t quotient_dim(const GradedAlgebra& alg, std::size_t n);

struct CyclicOrbitPartition {
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> orbits; // indices into the input list
};

// Orbits of g(a_1...a_n) = a_n a_1...a_{n-1}. Every input must be a cycle of
// positive length n; throws PreconditionError otherwise.
CyclicOrbitPartition cyclic_orbits(const Quiver& q, const std::vector<Path>& cycles);

Path rotate(const Path& p, const Quiver& q);

} // namespace surfhom
