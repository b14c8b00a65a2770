#pragma once

// Combinatorial triangulated surfaces without punctures.
//
// A surface is given by its triangles, each a counter-clockwise triple of
// directed sides. A side refers to an arc (glued to exactly one other side)
// or to a boundary segment. The two occurrences of an arc carry opposite
// orientations, which is what makes the glued surface oriented. Marked
// points are not stored; they are recovered as orbits of triangle corners.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace surfhom {

enum class EdgeKind { Arc, Boundary };

enum class Orientation { Forward, Reversed };

struct Edge {
    std::string name;
    EdgeKind kind;
};

struct DirectedSide {
    std::size_t edge; // index into Triangulation::edges()
    Orientation orientation;

    friend bool operator==(const DirectedSide&, const DirectedSide&) = default;
};

struct Triangle {
    std::array<DirectedSide, 3> sides; // counter-clockwise
};

class Triangulation {
public:
    Triangulation() = default;

    // Checks only structural well-formedness: unique names and in-range edge
    // references. Gluing rules are left to validate().
    Triangulation(std::vector<Edge> edges, std::vector<Triangle> triangles);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    std::optional<std::size_t> find_edge(std::string_view name) const;

    // Edge indices of the given kind, in declaration order.
    std::vector<std::size_t> arcs() const;
    std::vector<std::size_t> boundaries() const;

    std::size_t arc_count() const;
    std::size_t boundary_count() const;

private:
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct TopologySummary {
    int genus = 0;
    int boundary_components = 0;
    int marked_points = 0;
    int euler_characteristic = 0;

    friend bool operator==(const TopologySummary&, const TopologySummary&) = default;
};

bool is_valid_edge_name(std::string_view name);

// Line-oriented text format:
//   arc <name>
//   boundary <name>
//   triangle <e1><o1> <e2><o2> <e3><o3>     o in {+,-}, sides ccw
// '#' starts a comment. Throws ParseError.
Triangulation parse_triangulation(std::string_view text);

// Inverse of parse_triangulation. Arcs then boundaries, each sorted by name;
// triangles in stored order.
std::string serialize(const Triangulation& t);

// Empty iff every gluing, connectivity and counting invariant holds.
std::vector<std::string> validate(const Triangulation& t);

// Requires validate(t) to be empty.
TopologySummary topology(const Triangulation& t);

// Triangles none of whose sides is a boundary segment, in stored order.
std::vector<std::size_t> internal_triangles(const Triangulation& t);

// Replaces `arc` by the other diagonal of the quadrilateral formed by its two
// triangles. The new arc is named arc + "'" (more primes on collision) and
// takes the place of the old one in the edge list.
Triangulation flip(const Triangulation& t, std::string_view arc);

// Returns a copy with edge `from` renamed to `to`.
Triangulation rename_edge(const Triangulation& t, std::string_view from, std::string_view to);

// Orientation-preserving combinatorial isomorphism: a kind-preserving edge
// bijection, a triangle bijection up to rotation, and a per-edge choice of
// reference direction. With `same_names` the edge bijection must preserve
// names.
bool isomorphic(const Triangulation& a, const Triangulation& b, bool same_names = false);

} // namespace surfhom
