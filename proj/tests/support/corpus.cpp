#include "corpus.hpp"

#include "surfhom/error.hpp"
#include "surfhom/exact_rank.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace surfhom::testing {

std::string data_path(const std::string& name) { return std::string(SURFHOM_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Triangulation load(const std::string& name) { return parse_triangulation(read_file(data_path(name))); }

std::vector<Named> random_descendants(const Triangulation& base, std::size_t count,
                                      std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Named> out;
    Triangulation t = base;
    for (std::size_t k = 1; k <= count; ++k) {
        for (int step = 0; step < 2; ++step) {
            auto arcs = t.arcs();
            std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
            t = flip(t, t.edge(arcs[pick(rng)]).name);
        }
        out.push_back({"pants_walk" + std::to_string(k), t});
    }
    return out;
}

std::vector<Named> corpus() {
    std::vector<Named> out;
    for (const char* f : {"pants", "pants_flipped", "hexagon_fan", "hexagon_internal", "annulus_kronecker",
                          "annulus_internal", "torus_one_boundary"})
        out.push_back({f, load(std::string(f) + ".tri")});
    for (auto& d : random_descendants(out.front().t, 5, 20240611))
        out.push_back(std::move(d));
    return out;
}

Triangulation double_flip(const Triangulation& t, const std::string& arc) {
    const auto slot = *t.find_edge(arc);
    auto once = flip(t, arc);
    auto twice = flip(once, once.edge(slot).name);
    return rename_edge(twice, twice.edge(slot).name, arc);
}

BoundaryMatrix CyclicOracle::connes_B(std::size_t n) const {
    const auto& paths = bar_.paths();
    const auto& cn = bar_.chain_basis(n);
    const auto& up = bar_.chain_basis(n + 1);
    std::vector<std::uint32_t> unit_at;
    for (std::uint32_t i = 0; i < paths.size(); ++i)
        if (paths[i].is_idempotent()) {
            if (unit_at.size() <= paths[i].vertex)
                unit_at.resize(paths[i].vertex + 1);
            unit_at[paths[i].vertex] = i;
        }

    BoundaryMatrix m;
    m.degree = n;
    m.cols = up.size();
    std::vector<std::uint32_t> chain(n + 2);
    for (const auto& t : cn.tuples) {
        SparseRow row;
        if (!paths[t[0]].is_idempotent()) {
            for (std::size_t i = 0; i <= n; ++i) {
                for (std::size_t j = 0; j <= n; ++j)
                    chain[j + 1] = t[(i + j) % (n + 1)];
                chain[0] = unit_at[paths[chain[1]].vertex];
                auto it = up.index.find(chain);
                if (it == up.index.end())
                    throw Error("B lands outside the chain basis");
                row.emplace_back(it->second, mpz_class((n * i) % 2 == 0 ? 1 : -1));
            }
        }
        m.rows.push_back(normalized(std::move(row)));
    }
    return m;
}

std::size_t CyclicOracle::total_size(std::size_t n) const {
    std::size_t s = 0;
    for (std::size_t k = 0; 2 * k <= n; ++k)
        s += bar_.chain_basis(n - 2 * k).size();
    return s;
}

BoundaryMatrix CyclicOracle::total(std::size_t n) const {
    // Column offsets of the summands of Tot_{n-1}, highest chain degree first.
    std::vector<std::size_t> offset;
    std::size_t cols = 0;
    for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
        offset.push_back(cols);
        cols += bar_.chain_basis(n - 1 - 2 * k).size();
    }
    BoundaryMatrix m;
    m.degree = n;
    m.cols = cols;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const auto deg = n - 2 * k;
        const auto size = bar_.chain_basis(deg).size();
        std::vector<SparseRow> rows(size);
        if (deg >= 1) {
            auto b = bar_.boundary_matrix(deg);
            for (std::size_t r = 0; r < size; ++r)
                for (const auto& [c, v] : b.rows[r])
                    rows[r].emplace_back(offset[k] + c, v);
        }
        if (k >= 1) {
            auto B = connes_B(deg);
            for (std::size_t r = 0; r < size; ++r)
                for (const auto& [c, v] : B.rows[r])
                    rows[r].emplace_back(offset[k - 1] + c, v);
        }
        for (auto& r : rows)
            m.rows.push_back(normalized(std::move(r)));
    }
    return m;
}

std::int64_t CyclicOracle::hc_dim(std::size_t n) const {
    auto rank = [&](std::size_t k) -> std::int64_t {
        return k == 0 ? 0 : static_cast<std::int64_t>(exact_rank(total(k).rows));
    };
    return static_cast<std::int64_t>(total_size(n)) - rank(n) - rank(n + 1);
}

} // namespace surfhom::testing
