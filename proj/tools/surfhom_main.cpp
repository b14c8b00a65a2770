// surfhom: command-line front end over the libsurfhom C API.
//
// Exit codes: 0 success, 1 invalid input (parse or validation failure, or
// disagreeing methods), 2 usage error, 3 oracle too large.

#include "surfhom/surfhom.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kOracleTooLarge = 3 };

struct TriangulationDeleter {
    void operator()(surfhom_triangulation* t) const { surfhom_triangulation_free(t); }
};
struct TableDeleter {
    void operator()(surfhom_table* t) const { surfhom_table_free(t); }
};
struct StringDeleter {
    void operator()(char* s) const { surfhom_string_free(s); }
};
struct IntsDeleter {
    void operator()(int* v) const { surfhom_ints_free(v); }
};

using TriangulationPtr = std::unique_ptr<surfhom_triangulation, TriangulationDeleter>;
using TablePtr = std::unique_ptr<surfhom_table, TableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;
using IntsPtr = std::unique_ptr<int, IntsDeleter>;

// Thrown to unwind with a specific exit code after the message is printed.
struct Abort {
    int code;
};

int exit_code_for(surfhom_status s) {
    switch (s) {
    case SURFHOM_ERR_ORACLE_TOO_LARGE:
        return kOracleTooLarge;
    case SURFHOM_ERR_ARGUMENT:
    case SURFHOM_ERR_IO:
    case SURFHOM_ERR_PRECONDITION:
        return kUsage;
    default:
        return kInvalid;
    }
}

void check(surfhom_status s) {
    if (s == SURFHOM_OK)
        return;
    std::cerr << "surfhom: " << surfhom_last_error() << '\n';
    throw Abort{exit_code_for(s)};
}

TriangulationPtr load(const std::string& path) {
    surfhom_triangulation* raw = nullptr;
    check(surfhom_triangulation_load(path.c_str(), &raw));
    return TriangulationPtr(raw);
}

TablePtr compute(const surfhom_triangulation* t, surfhom_method m, int max_n, std::size_t cap) {
    surfhom_table* raw = nullptr;
    check(surfhom_table_compute(t, m, max_n, cap, &raw));
    return TablePtr(raw);
}

std::vector<int> diff(const surfhom_table* a, const surfhom_table* b) {
    int* raw = nullptr;
    std::size_t count = 0;
    check(surfhom_tables_diff(a, b, &raw, &count));
    IntsPtr guard(raw);
    return std::vector<int>(raw, raw + count);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (auto x : v)
        s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_validate(const std::string& path) {
    auto t = load(path);
    std::size_t count = 0;
    char* raw = nullptr;
    check(surfhom_triangulation_validate(t.get(), &count, &raw));
    StringPtr report(raw);
    if (count == 0) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << report.get();
    return kInvalid;
}

int cmd_topology(const std::string& path) {
    auto t = load(path);
    surfhom_topology_info info{};
    check(surfhom_triangulation_topology(t.get(), &info));
    std::cout << "genus " << info.genus << '\n'
              << "boundary_components " << info.boundary_components << '\n'
              << "marked_points " << info.marked_points << '\n'
              << "euler_characteristic " << info.euler_characteristic << '\n'
              << "arcs " << info.arcs << '\n'
              << "boundary_segments " << info.boundary_segments << '\n'
              << "triangles " << info.triangles << '\n'
              << "internal_triangles " << info.internal_triangles << '\n';
    return kOk;
}

int cmd_quiver(const std::string& path) {
    auto t = load(path);
    char* raw = nullptr;
    check(surfhom_triangulation_quiver(t.get(), &raw));
    StringPtr text(raw);
    std::cout << text.get();
    return kOk;
}

struct DimsOptions {
    std::string path;
    int max_n = 14;
    std::string method = "both";
    std::string format = "pretty";
    std::size_t oracle_cap = 200'000;
};

int cmd_dims(const DimsOptions& o) {
    auto t = load(o.path);
    const auto fmt = o.format == "tsv" ? SURFHOM_FORMAT_TSV : SURFHOM_FORMAT_PRETTY;
    const char* comment = fmt == SURFHOM_FORMAT_TSV ? "# " : "";

    std::vector<TablePtr> tables;
    if (o.method == "closed" || o.method == "both")
        tables.push_back(compute(t.get(), SURFHOM_METHOD_CLOSED, o.max_n, o.oracle_cap));
    if (o.method == "skoldberg" || o.method == "both")
        tables.push_back(compute(t.get(), SURFHOM_METHOD_SKOLDBERG, o.max_n, o.oracle_cap));
    if (o.method == "oracle")
        tables.push_back(compute(t.get(), SURFHOM_METHOD_ORACLE, o.max_n, o.oracle_cap));

    std::vector<const surfhom_table*> raw;
    for (const auto& tb : tables)
        raw.push_back(tb.get());
    char* text = nullptr;
    check(surfhom_tables_render(raw.data(), raw.size(), fmt, &text));
    StringPtr rendered(text);
    std::cout << rendered.get();

    std::cout << comment << "|Q_0| = " << surfhom_table_vertex_count(raw.front()) << '\n'
              << comment << "|int(T)| = " << surfhom_table_internal_triangles(raw.front()) << '\n';

    int code = kOk;
    if (o.method == "both") {
        auto d = diff(raw[0], raw[1]);
        if (d.empty()) {
            std::cout << comment << "methods agree: yes\n";
        } else {
            std::cout << comment << "methods disagree at n = " << join(d) << '\n';
            std::cerr << "surfhom: methods disagree\n";
            code = kInvalid;
        }
    }
    if (o.method == "oracle" && !surfhom_table_complete(raw.front())) {
        std::cout << comment << "oracle: degrees marked - not checked (cap " << o.oracle_cap
                  << ")\n";
        std::cerr << "surfhom: oracle too large for the requested degrees\n";
        code = kOracleTooLarge;
    }
    return code;
}

int cmd_flip(const std::string& path, const std::string& arc, const std::string& output) {
    auto t = load(path);
    surfhom_triangulation* raw = nullptr;
    check(surfhom_triangulation_flip(t.get(), arc.c_str(), &raw));
    TriangulationPtr flipped(raw);
    char* text = nullptr;
    check(surfhom_triangulation_serialize(flipped.get(), &text));
    StringPtr serialized(text);
    if (output.empty() || output == "-") {
        std::cout << serialized.get();
        return kOk;
    }
    std::ofstream out(output, std::ios::binary);
    out << serialized.get();
    if (!out) {
        std::cerr << "surfhom: cannot write '" << output << "'\n";
        return kUsage;
    }
    return kOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, int max_n,
                const std::string& method) {
    auto a = load(a_path);
    auto b = load(b_path);
    const auto m = method == "skoldberg" ? SURFHOM_METHOD_SKOLDBERG : SURFHOM_METHOD_CLOSED;
    auto ta = compute(a.get(), m, max_n, 0);
    auto tb = compute(b.get(), m, max_n, 0);
    auto d = diff(ta.get(), tb.get());
    const std::pair<surfhom_column, const char*> columns[] = {
        {SURFHOM_COLUMN_HH, "HH"}, {SURFHOM_COLUMN_HC, "HC"}, {SURFHOM_COLUMN_HC_CO, "HCco"}};
    for (int n : d) {
        std::cout << n;
        for (const auto& [col, name] : columns) {
            std::int64_t x = 0, y = 0;
            surfhom_table_entry(ta.get(), n, col, &x);
            surfhom_table_entry(tb.get(), n, col, &y);
            if (x != y)
                std::cout << '\t' << name << ' ' << x << " -> " << y;
        }
        std::cout << '\n';
    }
    std::cout << "differing degrees: " << (d.empty() ? "none" : join(d)) << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild and cyclic homology of algebras from triangulated surfaces"};
    app.require_subcommand(1);

    std::string file;
    auto* validate = app.add_subcommand("validate", "check gluing and counting invariants");
    validate->add_option("file", file, "triangulation file")->required();

    auto* topology = app.add_subcommand("topology", "genus, boundary components, marked points");
    topology->add_option("file", file, "triangulation file")->required();

    auto* quiver = app.add_subcommand("quiver", "dump the quiver and its relations");
    quiver->add_option("file", file, "triangulation file")->required();

    DimsOptions dims_opts;
    auto* dims = app.add_subcommand("dims", "dimensions of HH_n, HC_n, HC^n");
    dims->add_option("file", dims_opts.path, "triangulation file")->required();
    dims->add_option("--max-n", dims_opts.max_n, "highest degree")
        ->default_val(14)
        ->check(CLI::NonNegativeNumber);
    dims->add_option("--method", dims_opts.method, "closed|skoldberg|oracle|both")
        ->default_val("both")
        ->check(CLI::IsMember({"closed", "skoldberg", "oracle", "both"}));
    dims->add_option("--format", dims_opts.format, "pretty|tsv")
        ->default_val("pretty")
        ->check(CLI::IsMember({"pretty", "tsv"}));
    dims->add_option("--oracle-cap", dims_opts.oracle_cap, "maximum chain basis size")
        ->default_val(200'000)
        ->check(CLI::PositiveNumber);

    std::string arc, output;
    auto* flip = app.add_subcommand("flip", "flip one arc and print the new triangulation");
    flip->add_option("file", file, "triangulation file")->required();
    flip->add_option("--arc", arc, "arc to flip")->required();
    flip->add_option("-o,--output", output, "output file (default stdout)");

    std::string file_b, compare_method = "closed";
    int compare_max_n = 14;
    auto* compare = app.add_subcommand("compare", "degrees where two tables differ");
    compare->add_option("fileA", file, "first triangulation")->required();
    compare->add_option("fileB", file_b, "second triangulation")->required();
    compare->add_option("--max-n", compare_max_n, "highest degree")
        ->default_val(14)
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--method", compare_method, "closed|skoldberg")
        ->default_val("closed")
        ->check(CLI::IsMember({"closed", "skoldberg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*topology)
            return cmd_topology(file);
        if (*quiver)
            return cmd_quiver(file);
        if (*dims)
            return cmd_dims(dims_opts);
        if (*flip)
            return cmd_flip(file, arc, output);
        if (*compare)
            return cmd_compare(file, file_b, compare_max_n, compare_method);
    } catch (const Abort& a) {
        return a.code;
    }
    return kUsage;
}
