// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "support/corpus.hpp"

#include "surfhom/bar_oracle.hpp"
#include "surfhom/commutator.hpp"
#include "surfhom/homology.hpp"
#include "surfhom/surface.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace surfhom;
using surfhom::testing::load;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 6)
            notes.push_back(why);
        else if (notes.size() == 6)
            notes.push_back("...");
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << " s";
    return o.str();
}

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

struct Tables {
    HomologyTable closed, skoldberg;
};

Tables both_tables(const Triangulation& t, std::size_t max_n) {
    BruteForceQuotients q(bound_quiver(t));
    return {closed_table(summarize(t), max_n), skoldberg_table(q, max_n)};
}

Outcome pants_hh() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    auto tables = both_tables(load("pants.tri"), 21);
    const double elapsed = seconds_since(t0);
    for (const auto* table : {&tables.closed, &tables.skoldberg})
        for (int n = 0; n <= 21; ++n) {
            const std::int64_t want = n == 0 ? 7 : (n % 6 == 2 || n % 6 == 3) ? 3 : 0;
            if (table->rows[n].hh != want)
                o.fail(method_name(table->method) + " HH_" + std::to_string(n) + " = " +
                       cell(table->rows[n].hh) + ", expected " + std::to_string(want));
        }
    if (elapsed >= 10.0)
        o.fail("took " + fmt(elapsed));
    o.notes.push_back(fmt(elapsed));
    return o;
}

Outcome pants_hc() {
    Outcome o;
    auto tables = both_tables(load("pants.tri"), 21);
    for (const auto* table : {&tables.closed, &tables.skoldberg})
        for (int n = 0; n <= 21; ++n) {
            const std::int64_t want = n == 0 ? 7 : n % 6 == 2 ? 10 : 0;
            const auto& r = table->rows[n];
            if (r.hc != want || r.hc_co != want)
                o.fail(method_name(table->method) + " n=" + std::to_string(n) + ": HC " +
                       cell(r.hc) + ", HC^ " + cell(r.hc_co) + ", expected " + std::to_string(want));
        }
    return o;
}

Outcome flip_regression() {
    Outcome o;
    auto pants = load("pants.tri");
    auto flipped = flip(pants, "t7");
    if (!validate(flipped).empty())
        o.fail("flipped triangulation does not validate");
    if (internal_triangles(flipped).size() != 2)
        o.fail("internal triangles: " + std::to_string(internal_triangles(flipped).size()));
    auto before = both_tables(pants, 21);
    auto after = both_tables(flipped, 21);
    for (auto [b, a] : {std::pair{&before.closed, &after.closed},
                        std::pair{&before.skoldberg, &after.skoldberg}}) {
        const auto m = method_name(a->method);
        for (int n = 0; n <= 21; ++n) {
            const auto& ra = a->rows[n];
            const auto& rb = b->rows[n];
            if (n % 6 == 2 || n % 6 == 3) {
                if (ra.hh != 2)
                    o.fail(m + " HH_" + std::to_string(n) + " = " + cell(ra.hh));
            } else if (ra.hh != rb.hh) {
                o.fail(m + " HH_" + std::to_string(n) + " changed");
            }
            if (n % 6 == 2) {
                if (ra.hc != 9 || ra.hc_co != 9)
                    o.fail(m + " HC_" + std::to_string(n) + " = " + cell(ra.hc));
            } else if (ra.hc != rb.hc || ra.hc_co != rb.hc_co) {
                o.fail(m + " HC_" + std::to_string(n) + " changed");
            }
        }
    }
    return o;
}

Outcome quotient_lemmas(const std::vector<surfhom::testing::Named>& corpus) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, t] : corpus) {
        const auto bq = bound_quiver(t);
        GradedAlgebra a(bq, AlgebraTag::A);
        GradedAlgebra shriek(bq, AlgebraTag::AShriek);
        for (std::size_t n = 1; n <= *a.max_degree(); ++n)
            if (auto d = quotient_dim(a, n); d != 0)
                o.fail(name + ": (A/[A,A])_" + std::to_string(n) + " = " + std::to_string(d));
        const auto k = internal_triangles(t).size();
        for (std::size_t n = 1; n <= 15; ++n) {
            const auto want = n % 6 == 3 ? k : 0;
            if (auto d = quotient_dim(shriek, n); d != want)
                o.fail(name + ": (A!/[A!,A!])_" + std::to_string(n) + " = " + std::to_string(d) +
                       ", expected " + std::to_string(want));
        }
    }
    const double elapsed = seconds_since(t0);
    if (corpus.size() < 10)
        o.fail("corpus has only " + std::to_string(corpus.size()) + " triangulations");
    if (elapsed >= 60.0)
        o.fail("took " + fmt(elapsed));
    o.notes.push_back(std::to_string(corpus.size()) + " triangulations, " + fmt(elapsed));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    auto check = [&](const char* file, const std::vector<std::int64_t>& expected) {
        BruteForceQuotients q(bound_quiver(load(file)));
        BarComplex bar(q.algebra());
        for (std::size_t n = 0; n < expected.size(); ++n) {
            const auto oracle = bar.hh_dim(n);
            const auto formula = hh_dim_skoldberg(n, q);
            if (oracle != expected[n] || formula != expected[n])
                o.fail(std::string(file) + " n=" + std::to_string(n) + ": oracle " +
                       std::to_string(oracle) + ", formula " + std::to_string(formula) +
                       ", expected " + std::to_string(expected[n]));
        }
    };
    check("hexagon_internal.tri", {3, 0, 1, 1, 0});
    check("hexagon_fan.tri", {3, 0, 0, 0});
    return o;
}

Outcome ses_identity(const std::vector<surfhom::testing::Named>& corpus) {
    Outcome o;
    std::size_t faults = 0, single = 0;
    for (const auto& [name, t] : corpus) {
        auto tables = both_tables(t, 30);
        for (const auto* table : {&tables.closed, &tables.skoldberg}) {
            const auto label = name + "/" + method_name(table->method);
            if (auto v = ses_dimension_check(*table, 30); !v.empty())
                o.fail(label + ": " + std::to_string(v.size()) + " violations on the clean table");
            for (int n = 0; n <= 30; ++n)
                for (auto column : {&HomologyRow::hh, &HomologyRow::hc, &HomologyRow::hc_co}) {
                    auto perturbed = *table;
                    auto& entry = perturbed.rows[n].*column;
                    *entry += 1;
                    ++faults;
                    const auto v = ses_dimension_check(perturbed, 30);
                    if (v.size() == 1) {
                        ++single;
                        continue;
                    }
                    const char* col = column == &HomologyRow::hh   ? "HH"
                                      : column == &HomologyRow::hc ? "HC"
                                                                   : "HC^";
                    std::string degrees;
                    for (int d : v)
                        degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
                    o.fail(label + ": " + col + "_" + std::to_string(n) + "+1 flags {" + degrees + "}");
                }
        }
    }
    o.notes.push_back(std::to_string(single) + "/" + std::to_string(faults) +
                      " single-entry faults give exactly one violation");
    return o;
}

std::string run_cli(const std::string& args, int& code) {
    FILE* pipe = popen((std::string(SURFHOM_CLI) + " " + args + " 2>&1").c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    code = pclose(pipe);
    return out;
}

Outcome structure(const std::vector<surfhom::testing::Named>& corpus) {
    Outcome o;
    std::size_t flips = 0, checked = 0;
    auto arc_identity = [&](const std::string& label, const Triangulation& t) {
        if (!validate(t).empty()) {
            o.fail(label + " does not validate");
            return;
        }
        const auto g = topology(t);
        ++checked;
        if (static_cast<int>(t.arc_count()) !=
            6 * g.genus + 3 * g.boundary_components + g.marked_points - 6)
            o.fail(label + ": arc count identity fails");
    };
    for (const auto& [name, t] : corpus) {
        arc_identity(name, t);
        for (auto a : t.arcs()) {
            const auto& arc = t.edge(a).name;
            arc_identity(name + " flip " + arc, flip(t, arc));
            ++flips;
            if (!isomorphic(surfhom::testing::double_flip(t, arc), t, true))
                o.fail(name + ": double flip of " + arc + " is not the identity");
        }
    }

    std::size_t dd = 0;
    for (const char* file : {"hexagon_internal.tri", "hexagon_fan.tri", "annulus_kronecker.tri",
                             "annulus_internal.tri", "torus_one_boundary.tri", "pants.tri"}) {
        GradedAlgebra a(bound_quiver(load(file)), AlgebraTag::A);
        BarComplex bar(a);
        const std::size_t top = std::string(file) == "pants.tri" ? 3 : 5;
        for (std::size_t n = 2; n <= top; ++n) {
            ++dd;
            if (!composes_to_zero(bar.boundary_matrix(n), bar.boundary_matrix(n - 1)))
                o.fail(std::string(file) + ": d_" + std::to_string(n - 1) + " d_" +
                       std::to_string(n) + " != 0");
        }
    }

    std::size_t runs = 0;
    for (const char* file : {"pants.tri", "pants_flipped.tri", "hexagon_fan.tri", "hexagon_internal.tri",
                             "annulus_kronecker.tri", "annulus_internal.tri", "torus_one_boundary.tri"}) {
        const auto path = surfhom::testing::data_path(file);
        for (const std::string& args :
             {"dims " + path, "dims " + path + " --format tsv --max-n 20", "quiver " + path,
              "topology " + path, "validate " + path, "dims " + path + " --method oracle --max-n 2"}) {
            int c1 = 0, c2 = 0;
            const auto a = run_cli(args, c1);
            const auto b = run_cli(args, c2);
            ++runs;
            if (a != b || c1 != c2 || c1 != 0)
                o.fail("cli output differs or fails: " + args);
        }
    }
    o.notes.push_back(std::to_string(flips) + " flips, " + std::to_string(checked) +
                      " arc-count checks, " + std::to_string(dd) + " d^2 checks, " +
                      std::to_string(runs) + " repeated cli runs");
    return o;
}

} // namespace

int main() {
    const auto corpus = surfhom::testing::corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"HH of the pants triangulation, closed and skoldberg, n <= 21, under 10 s", pants_hh},
        {"HC and HC^ of the pants triangulation: 7 at n=0, 10 at n = 2 mod 6, else 0, n <= 21",
         pants_hc},
        {"flip of t7: 2 internal triangles, HH 2 at n = 2,3 mod 6, HC 9 at n = 2 mod 6, rest unchanged",
         flip_regression},
        {"commutator quotients vanish for A and equal |int T| [n = 3 mod 6] for A^!, under 60 s",
         [&] { return quotient_lemmas(corpus); }},
        {"bar complex HH equals the formula route on the single triangle and the fan hexagon",
         oracle_equivalence},
        {"SES identity clean for n <= 30; exactly one violation per single-entry fault",
         [&] { return ses_identity(corpus); }},
        {"flip involution, arc-count identity, d^2 = 0, deterministic cli output",
         [&] { return structure(corpus); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::string notes;
        for (const auto& n : o.notes)
            notes += (notes.empty() ? "" : "; ") + n;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
                  << (notes.empty() ? "" : " (" + notes + ")") << '\n';
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
