#include "surfhom/surface.hpp"

#include "surfhom/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace surfhom {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

struct Occurrence {
    std::size_t triangle;
    std::size_t slot;
    Orientation orientation;
};

std::vector<std::vector<Occurrence>> occurrences(const Triangulation& t) {
    std::vector<std::vector<Occurrence>> occ(t.edges().size());
    for (std::size_t i = 0; i < t.triangles().size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& s = t.triangles()[i].sides[k];
            occ[s.edge].push_back({i, k, s.orientation});
        }
    }
    return occ;
}

// Corner k of a triangle sits at the start of side k in ccw order.
std::size_t corner(std::size_t triangle, std::size_t k) { return 3 * triangle + (k % 3); }

std::size_t tail_corner(const Occurrence& o) {
    return o.orientation == Orientation::Forward ? corner(o.triangle, o.slot)
                                                 : corner(o.triangle, o.slot + 1);
}

std::size_t head_corner(const Occurrence& o) {
    return o.orientation == Orientation::Forward ? corner(o.triangle, o.slot + 1)
                                                 : corner(o.triangle, o.slot);
}

// Marked points as corner classes; assumes every arc has exactly two
// occurrences.
std::vector<std::size_t> corner_classes(const Triangulation& t,
                                        const std::vector<std::vector<Occurrence>>& occ,
                                        std::size_t& class_count) {
    UnionFind uf(3 * t.triangles().size());
    for (std::size_t e = 0; e < occ.size(); ++e) {
        if (t.edge(e).kind != EdgeKind::Arc || occ[e].size() != 2)
            continue;
        uf.unite(tail_corner(occ[e][0]), tail_corner(occ[e][1]));
        uf.unite(head_corner(occ[e][0]), head_corner(occ[e][1]));
    }
    std::vector<std::size_t> cls(3 * t.triangles().size());
    std::unordered_map<std::size_t, std::size_t> ids;
    for (std::size_t c = 0; c < cls.size(); ++c) {
        auto [it, inserted] = ids.emplace(uf.find(c), ids.size());
        cls[c] = it->second;
    }
    class_count = ids.size();
    return cls;
}

struct BoundaryStructure {
    std::vector<int> degree; // boundary-segment endpoints per marked point
    int components = 0;
};

BoundaryStructure boundary_structure(const Triangulation& t,
                                     const std::vector<std::vector<Occurrence>>& occ,
                                     const std::vector<std::size_t>& cls, std::size_t class_count) {
    BoundaryStructure out;
    out.degree.assign(class_count, 0);
    UnionFind uf(class_count);
    std::vector<bool> touched(class_count, false);
    for (std::size_t e = 0; e < occ.size(); ++e) {
        if (t.edge(e).kind != EdgeKind::Boundary || occ[e].size() != 1)
            continue;
        auto a = cls[tail_corner(occ[e][0])];
        auto b = cls[head_corner(occ[e][0])];
        ++out.degree[a];
        ++out.degree[b];
        touched[a] = touched[b] = true;
        uf.unite(a, b);
    }
    std::set<std::size_t> roots;
    for (std::size_t c = 0; c < class_count; ++c)
        if (touched[c])
            roots.insert(uf.find(c));
    out.components = static_cast<int>(roots.size());
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

char sign_char(Orientation o) { return o == Orientation::Forward ? '+' : '-'; }

} // namespace

Triangulation::Triangulation(std::vector<Edge> edges, std::vector<Triangle> triangles)
    : edges_(std::move(edges)), triangles_(std::move(triangles)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!is_valid_edge_name(edges_[i].name))
            throw Error("invalid edge name '" + edges_[i].name + "'");
        if (!index_.emplace(edges_[i].name, i).second)
            throw Error("duplicate edge name '" + edges_[i].name + "'");
    }
    for (const auto& tri : triangles_)
        for (const auto& s : tri.sides)
            if (s.edge >= edges_.size())
                throw Error("triangle references unknown edge index " + std::to_string(s.edge));
}

std::optional<std::size_t> Triangulation::find_edge(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::size_t> Triangulation::arcs() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].kind == EdgeKind::Arc)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> Triangulation::boundaries() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].kind == EdgeKind::Boundary)
            out.push_back(i);
    return out;
}

std::size_t Triangulation::arc_count() const { return arcs().size(); }

std::size_t Triangulation::boundary_count() const { return boundaries().size(); }

bool is_valid_edge_name(std::string_view name) {
    if (name.empty())
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '\'';
    });
}

Triangulation parse_triangulation(std::string_view text) {
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto tokens = split_ws(trim(raw));
        if (tokens.empty())
            continue;

        const auto& kw = tokens[0];
        if (kw == "arc" || kw == "boundary") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "'" + kw + "' takes exactly one name");
            if (!is_valid_edge_name(tokens[1]))
                throw ParseError(line_no, "invalid edge name '" + tokens[1] + "'");
            if (index.count(tokens[1]))
                throw ParseError(line_no, "duplicate edge name '" + tokens[1] + "'");
            index.emplace(tokens[1], edges.size());
            edges.push_back({tokens[1], kw == "arc" ? EdgeKind::Arc : EdgeKind::Boundary});
        } else if (kw == "triangle") {
            if (tokens.size() != 4)
                throw ParseError(line_no, "'triangle' takes exactly three sides");
            Triangle tri{};
            for (std::size_t k = 0; k < 3; ++k) {
                const auto& tok = tokens[k + 1];
                char sign = tok.back();
                if (tok.size() < 2 || (sign != '+' && sign != '-'))
                    throw ParseError(line_no, "side '" + tok + "' must be <name>+ or <name>-");
                auto name = tok.substr(0, tok.size() - 1);
                auto it = index.find(name);
                if (it == index.end())
                    throw ParseError(line_no, "undeclared edge '" + name + "'");
                tri.sides[k] = {it->second, sign == '+' ? Orientation::Forward : Orientation::Reversed};
            }
            triangles.push_back(tri);
        } else {
            throw ParseError(line_no, "unknown keyword '" + kw + "'");
        }
    }
    return Triangulation(std::move(edges), std::move(triangles));
}

std::string serialize(const Triangulation& t) {
    std::ostringstream out;
    for (auto kind : {EdgeKind::Arc, EdgeKind::Boundary}) {
        std::vector<std::string> names;
        for (const auto& e : t.edges())
            if (e.kind == kind)
                names.push_back(e.name);
        std::sort(names.begin(), names.end());
        for (const auto& n : names)
            out << (kind == EdgeKind::Arc ? "arc " : "boundary ") << n << '\n';
    }
    for (const auto& tri : t.triangles()) {
        out << "triangle";
        for (const auto& s : tri.sides)
            out << ' ' << t.edge(s.edge).name << sign_char(s.orientation);
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> validate(const Triangulation& t) {
    std::vector<std::string> violations;
    const auto occ = occurrences(t);

    for (std::size_t i = 0; i < t.triangles().size(); ++i) {
        const auto& s = t.triangles()[i].sides;
        if (s[0].edge == s[1].edge || s[1].edge == s[2].edge || s[0].edge == s[2].edge)
            violations.push_back("self-folded triangle " + std::to_string(i));
    }

    bool gluing_ok = true;
    for (std::size_t e = 0; e < occ.size(); ++e) {
        const auto& name = t.edge(e).name;
        if (t.edge(e).kind == EdgeKind::Arc) {
            if (occ[e].size() != 2) {
                violations.push_back("arc multiplicity on " + name + ": used " +
                                     std::to_string(occ[e].size()) + " times, expected 2");
                gluing_ok = false;
            } else if (occ[e][0].orientation == occ[e][1].orientation) {
                violations.push_back("non-orientable gluing on " + name);
                gluing_ok = false;
            }
        } else if (occ[e].size() != 1) {
            violations.push_back("boundary multiplicity on " + name + ": used " +
                                 std::to_string(occ[e].size()) + " times, expected 1");
            gluing_ok = false;
        }
    }

    if (t.boundary_count() == 0)
        violations.push_back("no boundary segments");
    if (t.triangles().empty()) {
        violations.push_back("no triangles");
        return violations;
    }

    // Connectivity through shared arcs.
    UnionFind tri_uf(t.triangles().size());
    for (const auto& o : occ)
        for (std::size_t k = 1; k < o.size(); ++k)
            tri_uf.unite(o[0].triangle, o[k].triangle);
    for (std::size_t i = 1; i < t.triangles().size(); ++i)
        if (tri_uf.find(i) != tri_uf.find(0)) {
            violations.push_back("disconnected surface");
            break;
        }

    if (!gluing_ok || !violations.empty())
        return violations;

    std::size_t class_count = 0;
    auto cls = corner_classes(t, occ, class_count);
    auto bd = boundary_structure(t, occ, cls, class_count);
    for (std::size_t c = 0; c < class_count; ++c) {
        if (bd.degree[c] == 0)
            violations.push_back("interior marked point " + std::to_string(c) +
                                 " (punctured surface)");
        else if (bd.degree[c] != 2)
            violations.push_back("non-manifold marked point " + std::to_string(c));
    }
    if (!violations.empty())
        return violations;

    const int c = static_cast<int>(class_count);
    const int chi = c - static_cast<int>(t.edges().size()) + static_cast<int>(t.triangles().size());
    const int twice_genus = 2 - bd.components - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
        violations.push_back("inconsistent Euler characteristic " + std::to_string(chi));
        return violations;
    }
    const int g = twice_genus / 2;
    const int expected_arcs = 6 * g + 3 * bd.components + c - 6;
    if (static_cast<int>(t.arc_count()) != expected_arcs)
        violations.push_back("arc count " + std::to_string(t.arc_count()) +
                             " differs from 6g+3b+c-6 = " + std::to_string(expected_arcs));
    return violations;
}

TopologySummary topology(const Triangulation& t) {
    const auto occ = occurrences(t);
    std::size_t class_count = 0;
    auto cls = corner_classes(t, occ, class_count);
    auto bd = boundary_structure(t, occ, cls, class_count);

    TopologySummary s;
    s.marked_points = static_cast<int>(class_count);
    s.boundary_components = bd.components;
    s.euler_characteristic = s.marked_points - static_cast<int>(t.edges().size()) +
                             static_cast<int>(t.triangles().size());
    const int twice_genus = 2 - s.boundary_components - s.euler_characteristic;
    if (twice_genus < 0 || twice_genus % 2 != 0 || s.boundary_components < 1)
        throw Error("inconsistent corner orbits");
    s.genus = twice_genus / 2;
    return s;
}

std::vector<std::size_t> internal_triangles(const Triangulation& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.triangles().size(); ++i) {
        const auto& s = t.triangles()[i].sides;
        if (std::all_of(s.begin(), s.end(),
                        [&](const DirectedSide& d) { return t.edge(d.edge).kind == EdgeKind::Arc; }))
            out.push_back(i);
    }
    return out;
}

Triangulation flip(const Triangulation& t, std::string_view arc) {
    auto idx = t.find_edge(arc);
    if (!idx)
        throw PreconditionError("unknown edge '" + std::string(arc) + "'");
    if (t.edge(*idx).kind != EdgeKind::Arc)
        throw PreconditionError("cannot flip boundary segment '" + std::string(arc) + "'");
    const auto occ = occurrences(t)[*idx];
    if (occ.size() != 2 || occ[0].orientation == occ[1].orientation ||
        occ[0].triangle == occ[1].triangle)
        throw PreconditionError("arc '" + std::string(arc) + "' is not glued between two triangles");

    // Rotate both triangles so the flipped arc comes first:
    //   T1 = (e, a, b) traversing X->Y->Z,  T2 = (e^-1, c, d) traversing Y->X->W.
    // The quadrilateral reads a b c d; the new diagonal f runs W->Z.
    const auto& o1 = occ[0].orientation == Orientation::Forward ? occ[0] : occ[1];
    const auto& o2 = occ[0].orientation == Orientation::Forward ? occ[1] : occ[0];
    const auto& s1 = t.triangles()[o1.triangle].sides;
    const auto& s2 = t.triangles()[o2.triangle].sides;
    DirectedSide a = s1[(o1.slot + 1) % 3], b = s1[(o1.slot + 2) % 3];
    DirectedSide c = s2[(o2.slot + 1) % 3], d = s2[(o2.slot + 2) % 3];

    std::string new_name = std::string(arc) + "'";
    while (t.find_edge(new_name))
        new_name += "'";

    auto edges = t.edges();
    edges[*idx].name = new_name;
    auto triangles = t.triangles();
    triangles[o1.triangle].sides = {DirectedSide{*idx, Orientation::Forward}, b, c};
    triangles[o2.triangle].sides = {DirectedSide{*idx, Orientation::Reversed}, d, a};
    return Triangulation(std::move(edges), std::move(triangles));
}

Triangulation rename_edge(const Triangulation& t, std::string_view from, std::string_view to) {
    auto idx = t.find_edge(from);
    if (!idx)
        throw PreconditionError("unknown edge '" + std::string(from) + "'");
    auto edges = t.edges();
    edges[*idx].name = std::string(to);
    return Triangulation(std::move(edges), t.triangles());
}

namespace {

struct IsoSearch {
    const Triangulation& a;
    const Triangulation& b;
    bool same_names;
    std::vector<std::size_t> edge_map, edge_inv;
    std::vector<int> reversed; // -1 undecided, else whether b's reference direction is opposite
    std::vector<bool> used;

    bool run(std::size_t i) {
        if (i == a.triangles().size())
            return true;
        const auto& ta = a.triangles()[i].sides;
        for (std::size_t j = 0; j < b.triangles().size(); ++j) {
            if (used[j])
                continue;
            const auto& tb = b.triangles()[j].sides;
            for (std::size_t rot = 0; rot < 3; ++rot) {
                std::vector<std::size_t> assigned;
                std::vector<std::size_t> decided;
                bool ok = true;
                for (std::size_t k = 0; k < 3 && ok; ++k) {
                    const auto& sa = ta[k];
                    const auto& sb = tb[(k + rot) % 3];
                    const auto& ea = a.edge(sa.edge);
                    const auto& eb = b.edge(sb.edge);
                    if (ea.kind != eb.kind || (same_names && ea.name != eb.name)) {
                        ok = false;
                        break;
                    }
                    if (edge_map[sa.edge] == npos && edge_inv[sb.edge] == npos) {
                        edge_map[sa.edge] = sb.edge;
                        edge_inv[sb.edge] = sa.edge;
                        assigned.push_back(sa.edge);
                    } else if (edge_map[sa.edge] != sb.edge) {
                        ok = false;
                        break;
                    }
                    int rev = sa.orientation != sb.orientation ? 1 : 0;
                    if (reversed[sa.edge] == -1) {
                        reversed[sa.edge] = rev;
                        decided.push_back(sa.edge);
                    } else if (reversed[sa.edge] != rev) {
                        ok = false;
                    }
                }
                if (ok) {
                    used[j] = true;
                    if (run(i + 1))
                        return true;
                    used[j] = false;
                }
                for (auto e : assigned) {
                    edge_inv[edge_map[e]] = npos;
                    edge_map[e] = npos;
                }
                for (auto e : decided)
                    reversed[e] = -1;
            }
        }
        return false;
    }
};

} // namespace

bool isomorphic(const Triangulation& a, const Triangulation& b, bool same_names) {
    if (a.edges().size() != b.edges().size() || a.triangles().size() != b.triangles().size() ||
        a.arc_count() != b.arc_count())
        return false;
    IsoSearch s{a,
                b,
                same_names,
                std::vector<std::size_t>(a.edges().size(), npos),
                std::vector<std::size_t>(b.edges().size(), npos),
                std::vector<int>(a.edges().size(), -1),
                std::vector<bool>(b.triangles().size(), false)};
    if (!s.run(0))
        return false;
    // Edges that occur in no triangle still need partners of the same kind.
    return std::none_of(s.edge_map.begin(), s.edge_map.end(), [](std::size_t m) { return m == npos; });
}

} // namespace surfhom
