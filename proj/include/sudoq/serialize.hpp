// serialize.hpp - JSON persistence for grids and hypercubes, plus small CSV
// helpers shared by the CLI and the analysis exports.
//
// Grid format:      {"n": N, "dim": N^2, "cells": [[cell|null, ...], ...]}
// Hypercube format: {"n": N, "dim": N^D, "d_sides": D, "cells": [cell|null, ...]}
// where a cell is an array of dim two-element arrays [re, im], hypercube cells
// are flattened row-major over (i_1..i_D, k_1..k_D), and blanks are null.
//
// Saving is canonical (fixed key order, shortest round-trip float text), so
// save -> load -> save is byte-identical. Loading accepts unnormalized cells:
// a cell whose norm is within 1e-6 of 1 is kept bit-for-bit, any other
// nonzero cell is rescaled to unit norm, and zero or non-finite cells are
// rejected.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_SERIALIZE_HPP
#define SUDOQ_SERIALIZE_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sudoq/grid.hpp"
#include "sudoq/hypercube.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json cell_to_json(const Vec& v) {
    ordered_json entry = ordered_json::array();
    for (Eigen::Index m = 0; m < v.size(); ++m) {
        entry.push_back(ordered_json::array({v[m].real(), v[m].imag()}));
    }
    return entry;
}

/// Parses one cell entry and applies the ingest normalization rule.
inline Vec cell_from_json(const ordered_json& entry, int dim, const std::string& where) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != dim) {
        throw format_error(where + ": cell must be an array of " + std::to_string(dim) +
                           " [re, im] pairs");
    }
    Vec v(dim);
    for (int m = 0; m < dim; ++m) {
        const auto& pair = entry[static_cast<std::size_t>(m)];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw format_error(where + ": component " + std::to_string(m) +
                               " is not a [re, im] pair");
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw format_error(where + ": non-finite component");
        }
        v[m] = Complex(re, im);
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) <= 1e-6) return v; // keep bits: round-trip stays exact
    if (norm <= 1e-12) throw format_error(where + ": cell has (near-)zero norm");
    return v / norm;
}

inline int require_int_field(const ordered_json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw format_error(where + ": missing integer field \"" + key + "\"");
    }
    return j[key].get<int>();
}

} // namespace detail

inline ordered_json to_json(const SudoQGrid& g) {
    ordered_json j;
    j["n"] = g.n();
    j["dim"] = g.dim();
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < g.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < g.dim(); ++c) {
            row.push_back(g.has(r, c) ? detail::cell_to_json(g.at(r, c)) : ordered_json(nullptr));
        }
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    return j;
}

inline ordered_json to_json(const SudoQHypercube& h) {
    ordered_json j;
    j["n"] = h.n();
    j["dim"] = h.dim();
    j["d_sides"] = h.d_sides();
    ordered_json cells = ordered_json::array();
    for (std::size_t f = 0; f < h.cell_count(); ++f) {
        cells.push_back(h.has_flat(f) ? detail::cell_to_json(h.at_flat(f))
                                      : ordered_json(nullptr));
    }
    j["cells"] = std::move(cells);
    return j;
}

inline SudoQGrid grid_from_json(const ordered_json& j) {
    const std::string where = "grid";
    if (!j.is_object()) throw format_error(where + ": top level must be an object");
    const int n = detail::require_int_field(j, "n", where);
    const int dim = detail::require_int_field(j, "dim", where);
    if (n < 2 || dim != n * n) {
        throw format_error(where + ": require n >= 2 and dim == n^2");
    }
    if (!j.contains("cells") || !j["cells"].is_array() ||
        static_cast<int>(j["cells"].size()) != dim) {
        throw format_error(where + ": \"cells\" must be an array of " + std::to_string(dim) +
                           " rows");
    }
    SudoQGrid g(n);
    for (int r = 0; r < dim; ++r) {
        const auto& row = j["cells"][static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw format_error(where + ": row " + std::to_string(r) + " must have " +
                               std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
            const auto& entry = row[static_cast<std::size_t>(c)];
            if (entry.is_null()) continue;
            g.set(r, c,
                  detail::cell_from_json(entry, dim,
                                         where + " cell (" + std::to_string(r) + "," +
                                             std::to_string(c) + ")"));
        }
    }
    return g;
}

inline SudoQHypercube hypercube_from_json(const ordered_json& j) {
    const std::string where = "hypercube";
    if (!j.is_object()) throw format_error(where + ": top level must be an object");
    const int n = detail::require_int_field(j, "n", where);
    const int dim = detail::require_int_field(j, "dim", where);
    const int d = detail::require_int_field(j, "d_sides", where);
    SudoQHypercube h(n, d); // range checks live in the constructor
    if (dim != h.dim()) throw format_error(where + ": dim must equal n^d_sides");
    if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].size() != h.cell_count()) {
        throw format_error(where + ": \"cells\" must be a flat array of " +
                           std::to_string(h.cell_count()) + " entries");
    }
    for (std::size_t f = 0; f < h.cell_count(); ++f) {
        const auto& entry = j["cells"][f];
        if (entry.is_null()) continue;
        h.set_flat(f, detail::cell_from_json(entry, dim,
                                             where + " cell " + std::to_string(f)));
    }
    return h;
}

/// Parses JSON text, converting parser failures to format_error.
inline ordered_json parse_json_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("malformed JSON: ") + e.what());
    }
}

inline bool json_is_hypercube(const ordered_json& j) {
    return j.is_object() && j.contains("d_sides");
}

/// Canonical text form: compact dump plus one trailing newline.
inline std::string dump_canonical(const ordered_json& j) { return j.dump() + "\n"; }

inline std::string save_grid(const SudoQGrid& g) { return dump_canonical(to_json(g)); }
inline std::string save_hypercube(const SudoQHypercube& h) { return dump_canonical(to_json(h)); }

inline SudoQGrid load_grid(const std::string& text) { return grid_from_json(parse_json_text(text)); }
inline SudoQHypercube load_hypercube(const std::string& text) {
    return hypercube_from_json(parse_json_text(text));
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw format_error("write failed: " + path);
}

/// Shortest fixed-precision text with 17 significant digits (round-trip safe
/// for IEEE doubles); used by the CSV exports.
inline std::string format_sig17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace sudoq

#endif // SUDOQ_SERIALIZE_HPP
