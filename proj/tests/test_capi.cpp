#include "surfhom/surfhom.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string data(const char* name) { return std::string(SURFHOM_TEST_DATA) + "/" + name; }

struct Tri {
    surfhom_triangulation* p = nullptr;
    ~Tri() { surfhom_triangulation_free(p); }
};
struct Table {
    surfhom_table* p = nullptr;
    ~Table() { surfhom_table_free(p); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    surfhom_string_free(s);
    return out;
}

std::vector<int> take(int* v, size_t n) {
    std::vector<int> out(v, v + n);
    surfhom_ints_free(v);
    return out;
}

std::int64_t entry(const surfhom_table* t, int n, surfhom_column c) {
    std::int64_t v = -1;
    REQUIRE(surfhom_table_entry(t, n, c, &v) == 1);
    return v;
}

} // namespace

TEST_CASE("load, validate, topology") {
    Tri t;
    REQUIRE(surfhom_triangulation_load(data("pants.tri").c_str(), &t.p) == SURFHOM_OK);
    size_t count = 99;
    char* report = nullptr;
    REQUIRE(surfhom_triangulation_validate(t.p, &count, &report) == SURFHOM_OK);
    CHECK(count == 0);
    CHECK(take(report).empty());
    surfhom_topology_info info{};
    REQUIRE(surfhom_triangulation_topology(t.p, &info) == SURFHOM_OK);
    CHECK(info.genus == 0);
    CHECK(info.boundary_components == 3);
    CHECK(info.marked_points == 4);
    CHECK(info.euler_characteristic == -1);
    CHECK(info.arcs == 7);
    CHECK(info.boundary_segments == 4);
    CHECK(info.triangles == 6);
    CHECK(info.internal_triangles == 3);
}

TEST_CASE("error codes") {
    Tri t;
    CHECK(surfhom_triangulation_parse("arc t1\narc t2\ntriangle t1+ t2\n", &t.p) == SURFHOM_ERR_PARSE);
    CHECK(std::string(surfhom_last_error()).find("line 3") != std::string::npos);
    CHECK(t.p == nullptr);
    CHECK(surfhom_triangulation_load("/nonexistent/x.tri", &t.p) == SURFHOM_ERR_IO);
    CHECK(surfhom_triangulation_parse(nullptr, &t.p) == SURFHOM_ERR_ARGUMENT);

    Tri bad;
    REQUIRE(surfhom_triangulation_parse("arc x\nboundary a\nboundary b\ntriangle a+ b+ x+\n", &bad.p) ==
            SURFHOM_OK);
    size_t count = 0;
    char* report = nullptr;
    REQUIRE(surfhom_triangulation_validate(bad.p, &count, &report) == SURFHOM_OK);
    CHECK(count > 0);
    CHECK(take(report).find("arc multiplicity on x") != std::string::npos);
    surfhom_topology_info info{};
    CHECK(surfhom_triangulation_topology(bad.p, &info) == SURFHOM_ERR_INVALID);
    Table tb;
    CHECK(surfhom_table_compute(bad.p, SURFHOM_METHOD_CLOSED, 3, 0, &tb.p) == SURFHOM_ERR_INVALID);

    Tri pants;
    REQUIRE(surfhom_triangulation_load(data("pants.tri").c_str(), &pants.p) == SURFHOM_OK);
    Tri out;
    CHECK(surfhom_triangulation_flip(pants.p, "bP", &out.p) == SURFHOM_ERR_PRECONDITION);
    CHECK(std::string(surfhom_last_error()).find("boundary") != std::string::npos);
    CHECK(surfhom_table_compute(pants.p, SURFHOM_METHOD_CLOSED, -1, 0, &tb.p) == SURFHOM_ERR_ARGUMENT);
    CHECK(surfhom_table_compute(pants.p, static_cast<surfhom_method>(9), 3, 0, &tb.p) ==
          SURFHOM_ERR_ARGUMENT);
    CHECK(surfhom_table_compute(pants.p, SURFHOM_METHOD_ORACLE, 3, 5, &tb.p) == SURFHOM_OK);
    CHECK(surfhom_table_complete(tb.p) == 0);
    std::int64_t v = 0;
    CHECK(surfhom_table_entry(tb.p, 3, SURFHOM_COLUMN_HH, &v) == 0);
}

TEST_CASE("tables") {
    Tri pants;
    REQUIRE(surfhom_triangulation_load(data("pants.tri").c_str(), &pants.p) == SURFHOM_OK);
    Table closed, sk;
    REQUIRE(surfhom_table_compute(pants.p, SURFHOM_METHOD_CLOSED, 14, 0, &closed.p) == SURFHOM_OK);
    REQUIRE(surfhom_table_compute(pants.p, SURFHOM_METHOD_SKOLDBERG, 14, 0, &sk.p) == SURFHOM_OK);
    CHECK(surfhom_table_max_n(closed.p) == 14);
    CHECK(surfhom_table_vertex_count(closed.p) == 7);
    CHECK(surfhom_table_internal_triangles(closed.p) == 3);
    const std::int64_t hh[] = {7, 0, 3, 3, 0, 0, 0, 0, 3, 3, 0, 0, 0, 0, 3};
    for (int n = 0; n <= 14; ++n) {
        CHECK(entry(closed.p, n, SURFHOM_COLUMN_HH) == hh[n]);
        CHECK(entry(sk.p, n, SURFHOM_COLUMN_HH) == hh[n]);
    }
    CHECK(entry(sk.p, 8, SURFHOM_COLUMN_HC) == 10);
    CHECK(entry(sk.p, 8, SURFHOM_COLUMN_HC_CO) == 10);
    std::int64_t v = 0;
    CHECK(surfhom_table_entry(sk.p, 15, SURFHOM_COLUMN_HH, &v) == 0);

    int* degrees = nullptr;
    size_t count = 7;
    REQUIRE(surfhom_tables_diff(closed.p, sk.p, &degrees, &count) == SURFHOM_OK);
    CHECK(count == 0);
    CHECK(degrees == nullptr);
    REQUIRE(surfhom_table_ses_check(closed.p, 14, &degrees, &count) == SURFHOM_OK);
    CHECK(take(degrees, count).empty());

    const surfhom_table* list[] = {closed.p};
    char* text = nullptr;
    REQUIRE(surfhom_tables_render(list, 1, SURFHOM_FORMAT_TSV, &text) == SURFHOM_OK);
    auto tsv = take(text);
    CHECK(tsv.rfind("n\tHH\tHC\tHCco\n0\t7\t7\t7\n1\t0\t0\t0\n2\t3\t10\t10\n", 0) == 0);
    CHECK(surfhom_tables_render(list, 0, SURFHOM_FORMAT_TSV, &text) == SURFHOM_ERR_ARGUMENT);
}

TEST_CASE("flip and compare") {
    Tri pants, flipped, hand;
    REQUIRE(surfhom_triangulation_load(data("pants.tri").c_str(), &pants.p) == SURFHOM_OK);
    REQUIRE(surfhom_triangulation_load(data("pants_flipped.tri").c_str(), &hand.p) == SURFHOM_OK);
    REQUIRE(surfhom_triangulation_flip(pants.p, "t7", &flipped.p) == SURFHOM_OK);
    char* text = nullptr;
    REQUIRE(surfhom_triangulation_serialize(flipped.p, &text) == SURFHOM_OK);
    auto s = take(text);
    CHECK(s.find("arc t7'\n") != std::string::npos);
    CHECK(s.find("triangle t7'+ t5+ b3a+\n") != std::string::npos);

    Table a, b, c;
    REQUIRE(surfhom_table_compute(pants.p, SURFHOM_METHOD_CLOSED, 8, 0, &a.p) == SURFHOM_OK);
    REQUIRE(surfhom_table_compute(flipped.p, SURFHOM_METHOD_CLOSED, 8, 0, &b.p) == SURFHOM_OK);
    REQUIRE(surfhom_table_compute(hand.p, SURFHOM_METHOD_SKOLDBERG, 8, 0, &c.p) == SURFHOM_OK);
    int* degrees = nullptr;
    size_t count = 0;
    REQUIRE(surfhom_tables_diff(a.p, b.p, &degrees, &count) == SURFHOM_OK);
    CHECK(take(degrees, count) == std::vector<int>{2, 3, 8});
    REQUIRE(surfhom_tables_diff(b.p, c.p, &degrees, &count) == SURFHOM_OK);
    CHECK(count == 0);
    CHECK(entry(b.p, 2, SURFHOM_COLUMN_HH) == 2);
    CHECK(entry(b.p, 2, SURFHOM_COLUMN_HC) == 9);
    CHECK(surfhom_table_internal_triangles(b.p) == 2);
}

TEST_CASE("quiver dump") {
    Tri t;
    REQUIRE(surfhom_triangulation_load(data("hexagon_internal.tri").c_str(), &t.p) == SURFHOM_OK);
    char* text = nullptr;
    REQUIRE(surfhom_triangulation_quiver(t.p, &text) == SURFHOM_OK);
    auto s = take(text);
    CHECK(s.rfind("vertex x\nvertex y\nvertex z\n", 0) == 0);
    CHECK(s.find("relation 3/x->y 3/y->z\n") != std::string::npos);
}
