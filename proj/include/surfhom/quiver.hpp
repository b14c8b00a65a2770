#pragma once

// The quiver of a triangulation, its quadratic monomial relations, and path
// bases of the algebra A = kQ/I and of its Koszul dual A^! = kQ/J.

#include "surfhom/surface.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfhom {

struct Arrow {
    std::string id; // "<triangle>/<source>-><target>"
    std::size_t source;
    std::size_t target;
    std::size_t triangle; // provenance; npos-like value for hand-built quivers
};

struct Quiver {
    std::vector<std::string> vertices; // one per arc, in declaration order
    std::vector<Arrow> arrows;         // by triangle index, then side pair order

    std::size_t vertex_count() const noexcept { return vertices.size(); }
    std::size_t arrow_count() const noexcept { return arrows.size(); }
};

// Either the idempotent e_vertex (no arrows) or a composable arrow sequence.
struct Path {
    std::size_t vertex = 0; // source vertex; the vertex itself for idempotents
    std::vector<std::size_t> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    bool is_idempotent() const noexcept { return arrows.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

Path idempotent(std::size_t vertex);
Path arrow_path(const Quiver& q, std::size_t arrow);

std::size_t source(const Quiver& q, const Path& p);
std::size_t target(const Quiver& q, const Path& p);
bool is_cycle(const Quiver& q, const Path& p);

// Generators of I: ordered pairs (a, b) of arrows with t(a) = s(b).
class RelationSet {
public:
    RelationSet() = default;
    RelationSet(std::size_t arrow_count, std::vector<std::pair<std::size_t, std::size_t>> pairs);

    bool contains(std::size_t first, std::size_t second) const noexcept {
        return first < n_ && second < n_ && matrix_[first * n_ + second];
    }
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

private:
    std::size_t n_ = 0;
    std::vector<char> matrix_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

enum class AlgebraTag { A, AShriek };

struct BoundQuiver {
    Quiver quiver;
    RelationSet relations;
};

// One vertex per arc; for every triangle and every ccw-consecutive pair of arc
// sides (x, y), an arrow x -> y.
Quiver build_quiver(const Triangulation& t);

// The three length-two subpaths of the 3-cycle of every internal triangle.
RelationSet relation_set(const Triangulation& t, const Quiver& q);

BoundQuiver bound_quiver(const Triangulation& t);

struct GradedBasis {
    AlgebraTag tag = AlgebraTag::A;
    std::vector<std::vector<Path>> by_degree;

    std::size_t max_degree() const { return by_degree.empty() ? 0 : by_degree.size() - 1; }
    std::size_t total_dimension() const;
};

// All relation-free paths of A, grouped by length. Throws NotFiniteDimensional
// when some relation-free path is longer than `guard`.
GradedBasis basis_A(const Quiver& q, const RelationSet& r, std::size_t guard);

// Degree-n basis of A^!: paths of length n whose consecutive arrow pairs all
// lie in r.
std::vector<Path> basis_koszul(const Quiver& q, const RelationSet& r, std::size_t n);

// Concatenation in A (tag A) or A^! (tag AShriek); nullopt is zero.
std::optional<Path> multiply(const Quiver& q, const Path& p, const Path& w, AlgebraTag tag,
                             const RelationSet& r);

// `vertex`, `arrow`, `relation` lines; vertices sorted by name.
std::string dump_quiver(const BoundQuiver& bq);

std::string describe(const Quiver& q, const Path& p);

} // namespace surfhom
