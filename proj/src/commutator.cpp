#include "surfhom/commutator.hpp"

#include "surfhom/error.hpp"
#include "surfhom/exact_rank.hpp"

#include <algorithm>

namespace surfhom {

GradedAlgebra::GradedAlgebra(BoundQuiver bq, AlgebraTag tag) : bq_(std::move(bq)), tag_(tag) {
    // A relation-free path of a finite dimensional algebra never repeats an
    // arrow, so the arrow count bounds its length.
    if (tag_ == AlgebraTag::A)
        finite_ = basis_A(bq_.quiver, bq_.relations, bq_.quiver.arrow_count());
}

const GradedAlgebra::Piece& GradedAlgebra::piece(std::size_t n) const {
    std::lock_guard lock(mutex_);
    auto it = pieces_.find(n);
    if (it != pieces_.end())
        return *it->second;
    auto p = std::make_unique<Piece>();
    if (tag_ == AlgebraTag::A) {
        if (n < finite_->by_degree.size())
            p->paths = finite_->by_degree[n];
    } else {
        p->paths = basis_koszul(bq_.quiver, bq_.relations, n);
    }
    for (std::size_t i = 0; i < p->paths.size(); ++i)
        p->index.emplace(p->paths[i], i);
    return *pieces_.emplace(n, std::move(p)).first->second;
}

const std::vector<Path>& GradedAlgebra::basis(std::size_t n) const { return piece(n).paths; }

std::optional<std::size_t> GradedAlgebra::index_of(const Path& p) const {
    const auto& pc = piece(p.length());
    auto it = pc.index.find(p);
    if (it == pc.index.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> GradedAlgebra::max_degree() const {
    if (tag_ == AlgebraTag::A)
        return finite_->max_degree();
    return std::nullopt;
}

GradedVector basis_vector(const GradedAlgebra& alg, const Path& p) {
    auto idx = alg.index_of(p);
    if (!idx)
        throw PreconditionError("path is not a basis element");
    GradedVector v;
    v.degree = p.length();
    v.coords.emplace(*idx, 1);
    return v;
}

GradedVector operator+(const GradedVector& x, const GradedVector& y) {
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.degree != y.degree)
        throw PreconditionError("adding elements of different degrees");
    GradedVector out = x;
    for (const auto& [i, c] : y.coords) {
        auto& slot = out.coords[i];
        slot += c;
        if (slot == 0)
            out.coords.erase(i);
    }
    return out;
}

GradedVector operator*(const mpq_class& c, const GradedVector& x) {
    GradedVector out;
    out.degree = x.degree;
    if (c == 0)
        return out;
    for (const auto& [i, v] : x.coords)
        out.coords.emplace(i, c * v);
    return out;
}

GradedVector product(const GradedAlgebra& alg, const GradedVector& x, const GradedVector& y) {
    GradedVector out;
    out.degree = x.degree + y.degree;
    const auto& bx = alg.basis(x.degree);
    const auto& by = alg.basis(y.degree);
    for (const auto& [i, cx] : x.coords) {
        for (const auto& [j, cy] : y.coords) {
            auto p = alg.multiply(bx[i], by[j]);
            if (!p)
                continue;
            auto k = alg.index_of(*p);
            if (!k)
                throw Error("product left the basis");
            auto& slot = out.coords[*k];
            slot += cx * cy;
            if (slot == 0)
                out.coords.erase(*k);
        }
    }
    return out;
}

GradedVector graded_commutator(const GradedAlgebra& alg, const GradedVector& x,
                               const GradedVector& y) {
    const auto hx = alg.homological_degree(x.degree);
    const auto hy = alg.homological_degree(y.degree);
    const mpq_class sign = (hx * hy) % 2 == 0 ? 1 : -1;
    auto out = product(alg, x, y) + (mpq_class(-sign) * product(alg, y, x));
    out.degree = x.degree + y.degree;
    return out;
}

namespace {

SparseRow integral_row(const GradedVector& v) {
    mpz_class den = 1;
    for (const auto& [i, c] : v.coords)
        den = lcm(den, mpz_class(c.get_den()));
    SparseRow row;
    row.reserve(v.coords.size());
    for (const auto& [i, c] : v.coords)
        row.emplace_back(i, mpz_class(c.get_num() * (den / c.get_den())));
    return row;
}

} // namespace

CommutatorSpan commutator_span(const GradedAlgebra& alg, std::size_t n) {
    CommutatorSpan span;
    span.degree = n;
    for (std::size_t i = 0; i <= n; ++i) {
        const auto& left = alg.basis(i);
        const auto& right = alg.basis(n - i);
        for (const auto& p : left)
            for (const auto& q : right)
                span.generators.push_back(
                    graded_commutator(alg, basis_vector(alg, p), basis_vector(alg, q)));
    }
    std::vector<SparseRow> rows;
    rows.reserve(span.generators.size());
    for (const auto& g : span.generators)
        rows.push_back(integral_row(g));
    span.rank = exact_rank(std::move(rows));
    return span;
}

std::size_t quotient_dim(const GradedAlgebra& alg, std::size_t n) {
    return alg.basis(n).size() - commutator_span(alg, n).rank;
}

Path rotate(const Path& p, const Quiver& q) {
    if (p.arrows.empty())
        return p;
    Path out;
    out.arrows.reserve(p.arrows.size());
    out.arrows.push_back(p.arrows.back());
    out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end() - 1);
    out.vertex = q.arrows[out.arrows.front()].source;
    return out;
}

CyclicOrbitPartition cyclic_orbits(const Quiver& q, const std::vector<Path>& cycles) {
    CyclicOrbitPartition part;
    if (cycles.empty())
        return part;
    part.degree = cycles.front().length();
    std::map<Path, std::size_t> orbit_of_canonical;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& p = cycles[i];
        if (p.length() == 0 || p.length() != part.degree || !is_cycle(q, p))
            throw PreconditionError("'" + describe(q, p) + "' is not a cycle of length " +
                                    std::to_string(part.degree));
        Path canonical = p, r = p;
        for (std::size_t k = 1; k < p.length(); ++k) {
            r = rotate(r, q);
            canonical = std::min(canonical, r);
        }
        auto [it, inserted] = orbit_of_canonical.emplace(canonical, part.orbits.size());
        if (inserted)
            part.orbits.emplace_back();
        part.orbits[it->second].push_back(i);
    }
    return part;
}

} // namespace surfhom
