#include "surfhom/bar_oracle.hpp"

#include "surfhom/error.hpp"

namespace surfhom {

std::size_t TupleHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

BarComplex::BarComplex(const GradedAlgebra& a, std::size_t cap) : a_(a), cap_(cap) {
    if (a.tag() != AlgebraTag::A)
        throw PreconditionError("the bar oracle needs the finite dimensional algebra A");
    const auto& q = a.quiver();
    for (std::size_t d = 0; d <= *a.max_degree(); ++d)
        for (const auto& p : a.basis(d))
            paths_.push_back(p);

    std::map<Path, std::uint32_t> index;
    for (std::uint32_t i = 0; i < paths_.size(); ++i)
        index.emplace(paths_[i], i);

    from_.resize(q.vertex_count());
    positive_from_.resize(q.vertex_count());
    for (std::uint32_t i = 0; i < paths_.size(); ++i) {
        source_.push_back(source(q, paths_[i]));
        target_.push_back(target(q, paths_[i]));
        from_[source_[i]].push_back(i);
        if (paths_[i].length() > 0)
            positive_from_[source_[i]].push_back(i);
    }

    const auto dim = paths_.size();
    mult_.assign(dim * dim, -1);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (auto p = a.multiply(paths_[i], paths_[j]))
                mult_[i * dim + j] = static_cast<std::int32_t>(index.at(*p));
}

const ChainBasis& BarComplex::chain_basis(std::size_t n) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = bases_.find(n); it != bases_.end())
            return *it->second;
    }
    auto basis = std::make_unique<ChainBasis>();
    basis->degree = n;
    auto push = [&](std::vector<std::uint32_t> t) {
        if (basis->tuples.size() >= cap_)
            throw OracleTooLarge("degree " + std::to_string(n) + " chain basis exceeds cap " +
                                 std::to_string(cap_));
        basis->index.emplace(t, basis->tuples.size());
        basis->tuples.push_back(std::move(t));
    };

    if (n == 0) {
        for (std::uint32_t i = 0; i < paths_.size(); ++i)
            if (source_[i] == target_[i])
                push({i});
    } else {
        // tuple[0] is p_0; fill p_1..p_n depth first, then close with p_0.
        std::vector<std::uint32_t> tuple(n + 1, 0);
        auto extend = [&](auto&& self, std::size_t pos) -> void {
            if (pos > n) {
                for (auto p0 : from_[target_[tuple[n]]])
                    if (target_[p0] == source_[tuple[1]]) {
                        tuple[0] = p0;
                        push(tuple);
                    }
                return;
            }
            if (pos == 1) {
                for (std::size_t v = 0; v < positive_from_.size(); ++v)
                    for (auto p : positive_from_[v]) {
                        tuple[1] = p;
                        self(self, 2);
                    }
                return;
            }
            for (auto p : positive_from_[target_[tuple[pos - 1]]]) {
                tuple[pos] = p;
                self(self, pos + 1);
            }
        };
        extend(extend, 1);
    }

    std::lock_guard lock(mutex_);
    return *bases_.emplace(n, std::move(basis)).first->second;
}

BoundaryMatrix BarComplex::boundary_matrix(std::size_t n) const {
    if (n == 0)
        throw PreconditionError("d_0 is the zero map");
    const auto& cn = chain_basis(n);
    const auto& cm = chain_basis(n - 1);
    BoundaryMatrix d;
    d.degree = n;
    d.cols = cm.size();
    d.rows.reserve(cn.size());

    std::vector<std::uint32_t> face(n);
    for (const auto& t : cn.tuples) {
        SparseRow row;
        auto add = [&](const std::vector<std::uint32_t>& f, int sign) {
            auto it = cm.index.find(f);
            if (it == cm.index.end())
                throw Error("face of a chain is missing from the chain basis");
            row.emplace_back(it->second, mpz_class(sign));
        };
        for (std::size_t i = 0; i < n; ++i) {
            auto p = product(t[i], t[i + 1]);
            if (!p)
                continue;
            std::size_t k = 0;
            for (std::size_t j = 0; j < i; ++j)
                face[k++] = t[j];
            face[k++] = *p;
            for (std::size_t j = i + 2; j <= n; ++j)
                face[k++] = t[j];
            add(face, i % 2 == 0 ? 1 : -1);
        }
        if (auto p = product(t[n], t[0])) {
            face[0] = *p;
            for (std::size_t j = 1; j < n; ++j)
                face[j] = t[j];
            add(face, n % 2 == 0 ? 1 : -1);
        }
        d.rows.push_back(normalized(std::move(row)));
    }
    return d;
}

std::size_t BarComplex::boundary_rank(std::size_t n) const {
    if (n == 0)
        return 0;
    {
        std::lock_guard lock(mutex_);
        if (auto it = ranks_.find(n); it != ranks_.end())
            return it->second;
    }
    auto r = exact_rank(boundary_matrix(n).rows);
    std::lock_guard lock(mutex_);
    return ranks_.emplace(n, r).first->second;
}

std::int64_t BarComplex::hh_dim(std::size_t n) const {
    const auto cycles = static_cast<std::int64_t>(chain_basis(n).size()) -
                        static_cast<std::int64_t>(boundary_rank(n));
    return cycles - static_cast<std::int64_t>(boundary_rank(n + 1));
}

bool composes_to_zero(const BoundaryMatrix& first, const BoundaryMatrix& second) {
    if (first.cols != second.rows.size())
        throw PreconditionError("boundary matrices are not composable");
    for (const auto& row : first.rows) {
        SparseRow acc;
        for (const auto& [mid, c] : row)
            for (const auto& [col, v] : second.rows[mid])
                acc.emplace_back(col, c * v);
        if (!normalized(std::move(acc)).empty())
            return false;
    }
    return true;
}

HomologyTable oracle_table(const GradedAlgebra& a, std::size_t max_n, std::size_t cap) {
    HomologyTable t;
    t.method = Method::BarOracle;
    t.vertex_count = a.quiver().vertex_count();
    t.rows.resize(max_n + 1);
    BarComplex bar(a, cap);
    for (std::size_t n = 0; n <= max_n; ++n) {
        try {
            t.rows[n].hh = bar.hh_dim(n);
        } catch (const OracleTooLarge&) {
            break; // remaining degrees are reported as not checked
        }
    }
    return t;
}

std::int64_t hh_dim_bar(const GradedAlgebra& a, std::size_t n, std::size_t cap) {
    return BarComplex(a, cap).hh_dim(n);
}

} // namespace surfhom
