#pragma once

// JSON encodings of the library's values (nlohmann/json).

#include <string>
#include <vector>

#include <json.hpp>

#include "gcdegen/error.hpp"
#include "gcdegen/gcpattern.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/ideals.hpp"
#include "gcdegen/polynomial.hpp"
#include "gcdegen/sagbi.hpp"

namespace gcdegen::json_io {

using nlohmann::json;

inline json cells_to_json(const std::vector<Cell>& cells) {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back({c.row, c.col});
    return arr;
}

/// {"n": 5, "cells": [[2,1], [2,2]]}
inline json to_json(const Diagram& d) { return {{"n", d.n()}, {"cells", cells_to_json(d.cells())}}; }

inline Diagram diagram_from_json(const json& j) {
    try {
        std::vector<Cell> cells;
        for (const auto& c : j.at("cells")) {
            if (!c.is_array() || c.size() != 2) throw DomainError("diagram cell must be an [i, j] pair");
            cells.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        return Diagram(j.at("n").get<int>(), std::move(cells));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed diagram JSON: ") + e.what());
    }
}

/// Terms sorted by exponent tuple: [{"exponents": [2,1,0], "coeff": "1"}, ...]
inline json to_json(const MultiPolynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({{"exponents", e}, {"coeff", c.str()}});
    return arr;
}

inline MultiPolynomial polynomial_from_json(const json& j, int nvars) {
    try {
        MultiPolynomial p(nvars);
        for (const auto& t : j) p.add_term(t.at("exponents").get<Exponents>(), BigInt(t.at("coeff").get<std::string>()));
        return p;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw DomainError(std::string("malformed polynomial coefficient: ") + e.what());
    }
}

/// {"n": 3, "rows": [[2,1,0], [1,1], [0]]}
inline json to_json(const GCPattern& p) { return {{"n", p.n()}, {"rows", p.rows()}}; }

inline GCPattern pattern_from_json(const json& j) {
    try {
        return GCPattern(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<long long>>>());
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed pattern JSON: ") + e.what());
    }
}

/// {"variables": [[1,2], ...], "A": [[...]], "b": [...]} for A x <= b.
inline json to_json(const HRepresentation& h) {
    return {{"variables", cells_to_json(h.variables)}, {"A", h.a}, {"b", h.b}};
}

/// {"n": 4, "entries": [[i, j, e], ...]} sparse, lexicographic.
inline json to_json(const ExponentVector& e) {
    json arr = json::array();
    for (const auto& c : e.support()) arr.push_back({c.row, c.col, e.at(c.row, c.col)});
    return {{"n", e.n()}, {"entries", arr}};
}

inline ExponentVector exponent_vector_from_json(const json& j) {
    try {
        ExponentVector e(j.at("n").get<int>());
        for (const auto& t : j.at("entries")) e.set(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
        return e;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed exponent vector JSON: ") + ex.what());
    }
}

/// Generators as lists of [i, j] cells.
inline json to_json(const MonomialIdeal& ideal) {
    json arr = json::array();
    for (const auto& g : ideal.generators()) arr.push_back(cells_to_json(g.support()));
    return arr;
}

inline json to_json(const DegenerationReport& r) {
    return {{"w", r.w.to_string()},
            {"equal", r.equal},
            {"initial_generators", to_json(r.initial)},
            {"intersection_generators", to_json(r.intersection)},
            {"pipe_dream_count", r.pipe_dream_count},
            {"millis", r.millis}};
}

} // namespace gcdegen::json_io
