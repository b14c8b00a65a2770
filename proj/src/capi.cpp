#include "surfhom/surfhom.h"

#include "surfhom/bar_oracle.hpp"
#include "surfhom/error.hpp"
#include "surfhom/homology.hpp"
#include "surfhom/quiver.hpp"
#include "surfhom/report.hpp"
#include "surfhom/surface.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

struct surfhom_triangulation {
    surfhom::Triangulation value;
};

struct surfhom_table {
    surfhom::HomologyTable value;
    std::size_t internal_triangles = 0;
};

namespace {

thread_local std::string last_error;

surfhom_status fail(surfhom_status code, std::string message) {
    last_error = std::move(message);
    return code;
}

char* copy_string(const std::string& s) {
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

surfhom_status copy_ints(const std::vector<int>& v, int** out, size_t* count) {
    *count = v.size();
    *out = nullptr;
    if (v.empty())
        return SURFHOM_OK;
    *out = static_cast<int*>(std::malloc(v.size() * sizeof(int)));
    if (!*out)
        throw std::bad_alloc();
    std::memcpy(*out, v.data(), v.size() * sizeof(int));
    return SURFHOM_OK;
}

// Maps library exceptions onto status codes.
template <class F>
surfhom_status guarded(F&& body) {
    try {
        return body();
    } catch (const surfhom::ParseError& e) {
        return fail(SURFHOM_ERR_PARSE, e.what());
    } catch (const surfhom::PreconditionError& e) {
        return fail(SURFHOM_ERR_PRECONDITION, e.what());
    } catch (const surfhom::OracleTooLarge& e) {
        return fail(SURFHOM_ERR_ORACLE_TOO_LARGE, e.what());
    } catch (const surfhom::Error& e) {
        return fail(SURFHOM_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SURFHOM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SURFHOM_ERR_INTERNAL, e.what());
    }
}

surfhom_status require_valid(const surfhom::Triangulation& t) {
    auto violations = surfhom::validate(t);
    if (violations.empty())
        return SURFHOM_OK;
    std::string msg = "invalid triangulation:";
    for (const auto& v : violations)
        msg += "\n  " + v;
    return fail(SURFHOM_ERR_INVALID, msg);
}

} // namespace

extern "C" {

const char* surfhom_last_error(void) { return last_error.c_str(); }

void surfhom_string_free(char* s) { std::free(s); }

void surfhom_ints_free(int* v) { std::free(v); }

surfhom_status surfhom_triangulation_parse(const char* text, surfhom_triangulation** out) {
    if (!text || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new surfhom_triangulation{surfhom::parse_triangulation(text)};
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_triangulation_load(const char* path, surfhom_triangulation** out) {
    if (!path || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return fail(SURFHOM_ERR_IO, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto status = surfhom_triangulation_parse(buf.str().c_str(), out);
    if (status == SURFHOM_ERR_PARSE)
        last_error = std::string(path) + ": " + last_error;
    return status;
}

void surfhom_triangulation_free(surfhom_triangulation* t) { delete t; }

surfhom_status surfhom_triangulation_serialize(const surfhom_triangulation* t, char** out) {
    if (!t || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_string(surfhom::serialize(t->value));
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_triangulation_validate(const surfhom_triangulation* t,
                                              size_t* violation_count, char** report) {
    if (!t || !violation_count)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto violations = surfhom::validate(t->value);
        *violation_count = violations.size();
        if (report) {
            std::string text;
            for (const auto& v : violations)
                text += v + "\n";
            *report = copy_string(text);
        }
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_triangulation_topology(const surfhom_triangulation* t,
                                              surfhom_topology_info* out) {
    if (!t || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != SURFHOM_OK)
            return s;
        auto topo = surfhom::topology(t->value);
        out->genus = topo.genus;
        out->boundary_components = topo.boundary_components;
        out->marked_points = topo.marked_points;
        out->euler_characteristic = topo.euler_characteristic;
        out->arcs = t->value.arc_count();
        out->boundary_segments = t->value.boundary_count();
        out->triangles = t->value.triangles().size();
        out->internal_triangles = surfhom::internal_triangles(t->value).size();
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_triangulation_quiver(const surfhom_triangulation* t, char** out) {
    if (!t || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != SURFHOM_OK)
            return s;
        *out = copy_string(surfhom::dump_quiver(surfhom::bound_quiver(t->value)));
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_triangulation_flip(const surfhom_triangulation* t, const char* arc,
                                          surfhom_triangulation** out) {
    if (!t || !arc || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != SURFHOM_OK)
            return s;
        auto flipped = surfhom::flip(t->value, arc);
        if (auto s = require_valid(flipped); s != SURFHOM_OK)
            return fail(SURFHOM_ERR_INTERNAL, "flip produced an invalid triangulation");
        *out = new surfhom_triangulation{std::move(flipped)};
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_table_compute(const surfhom_triangulation* t, surfhom_method method,
                                     int max_n, size_t oracle_cap, surfhom_table** out) {
    if (!t || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    if (max_n < 0)
        return fail(SURFHOM_ERR_ARGUMENT, "max_n must be non-negative");
    return guarded([&]() -> surfhom_status {
        if (auto s = require_valid(t->value); s != SURFHOM_OK)
            return s;
        const auto n = static_cast<std::size_t>(max_n);
        auto table = std::make_unique<surfhom_table>();
        table->internal_triangles = surfhom::internal_triangles(t->value).size();
        switch (method) {
        case SURFHOM_METHOD_CLOSED:
            table->value = surfhom::closed_table(surfhom::summarize(t->value), n);
            break;
        case SURFHOM_METHOD_SKOLDBERG: {
            surfhom::BruteForceQuotients q(surfhom::bound_quiver(t->value));
            table->value = surfhom::skoldberg_table(q, n);
            break;
        }
        case SURFHOM_METHOD_ORACLE: {
            surfhom::GradedAlgebra a(surfhom::bound_quiver(t->value), surfhom::AlgebraTag::A);
            table->value = surfhom::oracle_table(
                a, n, oracle_cap == 0 ? surfhom::default_oracle_cap : oracle_cap);
            break;
        }
        default:
            return fail(SURFHOM_ERR_ARGUMENT, "unknown method");
        }
        *out = table.release();
        return SURFHOM_OK;
    });
}

void surfhom_table_free(surfhom_table* table) { delete table; }

int surfhom_table_max_n(const surfhom_table* table) { return table ? table->value.max_n() : -1; }

size_t surfhom_table_vertex_count(const surfhom_table* table) {
    return table ? table->value.vertex_count : 0;
}

size_t surfhom_table_internal_triangles(const surfhom_table* table) {
    return table ? table->internal_triangles : 0;
}

int surfhom_table_entry(const surfhom_table* table, int n, surfhom_column column, int64_t* value) {
    if (!table || !value || n < 0 || n > table->value.max_n())
        return 0;
    const auto& row = table->value.rows[static_cast<std::size_t>(n)];
    const std::optional<std::int64_t>* cell = nullptr;
    switch (column) {
    case SURFHOM_COLUMN_HH:
        cell = &row.hh;
        break;
    case SURFHOM_COLUMN_HC:
        cell = &row.hc;
        break;
    case SURFHOM_COLUMN_HC_CO:
        cell = &row.hc_co;
        break;
    default:
        return 0;
    }
    if (!*cell)
        return 0;
    *value = **cell;
    return 1;
}

int surfhom_table_complete(const surfhom_table* table) {
    return table && table->value.complete() ? 1 : 0;
}

surfhom_status surfhom_tables_render(const surfhom_table* const* tables, size_t count,
                                     surfhom_format format, char** out) {
    if (!tables || count == 0 || !out)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    if (format != SURFHOM_FORMAT_PRETTY && format != SURFHOM_FORMAT_TSV)
        return fail(SURFHOM_ERR_ARGUMENT, "unknown format");
    return guarded([&] {
        std::vector<const surfhom::HomologyTable*> list;
        for (size_t i = 0; i < count; ++i) {
            if (!tables[i])
                return fail(SURFHOM_ERR_ARGUMENT, "null table");
            list.push_back(&tables[i]->value);
        }
        *out = copy_string(surfhom::render_tables(
            list, format == SURFHOM_FORMAT_TSV ? surfhom::TableFormat::Tsv
                                               : surfhom::TableFormat::Pretty));
        return SURFHOM_OK;
    });
}

surfhom_status surfhom_table_ses_check(const surfhom_table* table, int n_max, int** degrees,
                                       size_t* count) {
    if (!table || !degrees || !count)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        return copy_ints(surfhom::ses_dimension_check(table->value, n_max), degrees, count);
    });
}

surfhom_status surfhom_tables_diff(const surfhom_table* a, const surfhom_table* b, int** degrees,
                                   size_t* count) {
    if (!a || !b || !degrees || !count)
        return fail(SURFHOM_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        return copy_ints(surfhom::differing_degrees(a->value, b->value), degrees, count);
    });
}

} // extern "C"
