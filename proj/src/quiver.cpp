#include "surfhom/quiver.hpp"

#include "surfhom/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace surfhom {

Path idempotent(std::size_t vertex) { return Path{vertex, {}}; }

Path arrow_path(const Quiver& q, std::size_t arrow) {
    return Path{q.arrows.at(arrow).source, {arrow}};
}

std::size_t source(const Quiver& q, const Path& p) {
    return p.is_idempotent() ? p.vertex : q.arrows[p.arrows.front()].source;
}

std::size_t target(const Quiver& q, const Path& p) {
    return p.is_idempotent() ? p.vertex : q.arrows[p.arrows.back()].target;
}

bool is_cycle(const Quiver& q, const Path& p) { return source(q, p) == target(q, p); }

RelationSet::RelationSet(std::size_t arrow_count,
                         std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : n_(arrow_count), matrix_(arrow_count * arrow_count, 0) {
    for (auto [a, b] : pairs) {
        if (a >= n_ || b >= n_)
            throw Error("relation references unknown arrow");
        if (!matrix_[a * n_ + b]) {
            matrix_[a * n_ + b] = 1;
            pairs_.emplace_back(a, b);
        }
    }
}

std::size_t GradedBasis::total_dimension() const {
    std::size_t n = 0;
    for (const auto& d : by_degree)
        n += d.size();
    return n;
}

Quiver build_quiver(const Triangulation& t) {
    Quiver q;
    std::vector<std::size_t> vertex_of(t.edges().size(), 0);
    for (auto e : t.arcs()) {
        vertex_of[e] = q.vertices.size();
        q.vertices.push_back(t.edge(e).name);
    }
    for (std::size_t i = 0; i < t.triangles().size(); ++i) {
        const auto& s = t.triangles()[i].sides;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& from = s[k];
            const auto& to = s[(k + 1) % 3];
            if (t.edge(from.edge).kind != EdgeKind::Arc || t.edge(to.edge).kind != EdgeKind::Arc)
                continue;
            Arrow a;
            a.source = vertex_of[from.edge];
            a.target = vertex_of[to.edge];
            a.triangle = i;
            a.id = std::to_string(i) + "/" + q.vertices[a.source] + "->" + q.vertices[a.target];
            q.arrows.push_back(std::move(a));
        }
    }
    return q;
}

RelationSet relation_set(const Triangulation& t, const Quiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto tri : internal_triangles(t)) {
        std::vector<std::size_t> cycle;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].triangle == tri)
                cycle.push_back(a);
        // Arrows of an internal triangle are emitted in side order, so each one
        // is followed by the next (cyclically).
        for (std::size_t k = 0; k < cycle.size(); ++k)
            pairs.emplace_back(cycle[k], cycle[(k + 1) % cycle.size()]);
    }
    return RelationSet(q.arrows.size(), std::move(pairs));
}

BoundQuiver bound_quiver(const Triangulation& t) {
    BoundQuiver bq;
    bq.quiver = build_quiver(t);
    bq.relations = relation_set(t, bq.quiver);
    return bq;
}

namespace {

std::vector<std::vector<std::size_t>> arrows_by_source(const Quiver& q) {
    std::vector<std::vector<std::size_t>> out(q.vertex_count());
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        out[q.arrows[a].source].push_back(a);
    return out;
}

} // namespace

GradedBasis basis_A(const Quiver& q, const RelationSet& r, std::size_t guard) {
    GradedBasis basis;
    basis.tag = AlgebraTag::A;
    basis.by_degree.emplace_back();
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        basis.by_degree[0].push_back(idempotent(v));

    const auto out = arrows_by_source(q);
    std::vector<Path> frontier;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        frontier.push_back(arrow_path(q, a));

    while (!frontier.empty()) {
        if (frontier.front().length() > guard)
            throw NotFiniteDimensional("relation-free path longer than " + std::to_string(guard) +
                                       " arrows; algebra is not finite dimensional");
        std::vector<Path> next;
        for (const auto& p : frontier) {
            auto last = p.arrows.back();
            for (auto b : out[q.arrows[last].target]) {
                if (r.contains(last, b))
                    continue;
                Path ext = p;
                ext.arrows.push_back(b);
                next.push_back(std::move(ext));
            }
        }
        basis.by_degree.push_back(std::move(frontier));
        frontier = std::move(next);
    }
    return basis;
}

std::vector<Path> basis_koszul(const Quiver& q, const RelationSet& r, std::size_t n) {
    std::vector<Path> layer;
    if (n == 0) {
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            layer.push_back(idempotent(v));
        return layer;
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        layer.push_back(arrow_path(q, a));
    const auto out = arrows_by_source(q);
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            auto last = p.arrows.back();
            for (auto b : out[q.arrows[last].target]) {
                if (!r.contains(last, b))
                    continue;
                Path ext = p;
                ext.arrows.push_back(b);
                next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }
    return layer;
}

std::optional<Path> multiply(const Quiver& q, const Path& p, const Path& w, AlgebraTag tag,
                             const RelationSet& r) {
    if (target(q, p) != source(q, w))
        return std::nullopt;
    if (p.is_idempotent())
        return w;
    if (w.is_idempotent())
        return p;
    Path out = p;
    out.arrows.insert(out.arrows.end(), w.arrows.begin(), w.arrows.end());
    for (std::size_t k = 0; k + 1 < out.arrows.size(); ++k) {
        bool rel = r.contains(out.arrows[k], out.arrows[k + 1]);
        if ((tag == AlgebraTag::A) == rel)
            return std::nullopt;
    }
    return out;
}

std::string dump_quiver(const BoundQuiver& bq) {
    const auto& q = bq.quiver;
    std::ostringstream out;
    auto names = q.vertices;
    std::sort(names.begin(), names.end());
    for (const auto& n : names)
        out << "vertex " << n << '\n';
    for (const auto& a : q.arrows)
        out << "arrow " << a.id << ' ' << q.vertices[a.source] << ' ' << q.vertices[a.target] << '\n';
    for (auto [a, b] : bq.relations.pairs())
        out << "relation " << q.arrows[a].id << ' ' << q.arrows[b].id << '\n';
    return out.str();
}

std::string describe(const Quiver& q, const Path& p) {
    if (p.is_idempotent())
        return "e_" + q.vertices[p.vertex];
    std::string s = q.vertices[source(q, p)];
    for (auto a : p.arrows)
        s += "->" + q.vertices[q.arrows[a].target];
    return s;
}

} // namespace surfhom
