#pragma once

#include "tropcirc/bridge.hpp"
#include "tropcirc/circuit.hpp"
#include "tropcirc/lattice.hpp"
#include "tropcirc/numeric.hpp"
#include "tropcirc/polynomial.hpp"
#include "tropcirc/tropical.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcirc {

using Json = nlohmann::json;

inline Json poly_to_json(const ExactPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [exp, coeff] : f.terms())
        terms.push_back({{"exp", exp}, {"coeff", to_string(coeff)}});
    return {{"vars", f.nvars()}, {"terms", std::move(terms)}};
}

inline Json trop_to_json(const TropicalPolynomial& g) {
    Json terms = Json::array();
    for (const auto& [exp, coeff] : g.terms())
        terms.push_back({{"exp", exp}, {"coeff", to_string(coeff)}});
    return {{"vars", g.nvars()}, {"terms", std::move(terms)}};
}

namespace detail {

inline ExpVec exp_from_json(const Json& j, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != nvars)
        throw std::invalid_argument("term exponent must be an array of length vars");
    ExpVec exp;
    exp.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::invalid_argument("exponents must be nonnegative integers");
        exp.push_back(v.get<int>());
    }
    return exp;
}

inline int vars_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j["vars"].is_number_integer() ||
        j["vars"].get<long long>() < 1)
        throw std::invalid_argument("\"vars\" must be a positive integer");
    return j["vars"].get<int>();
}

}  // namespace detail

inline ExactPolynomial poly_from_json(const Json& j) {
    int nvars = detail::vars_from_json(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("\"terms\" must be an array");
    ExactPolynomial f(nvars);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
            !t["coeff"].is_string())
            throw std::invalid_argument("each term needs \"exp\" and a string \"coeff\"");
        f.add_term(detail::exp_from_json(t["exp"], nvars), parse_int(t["coeff"].get<std::string>()));
    }
    return f;
}

inline TropicalPolynomial trop_from_json(const Json& j) {
    int nvars = detail::vars_from_json(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("\"terms\" must be an array");
    TropicalPolynomial g(nvars);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
            !t["coeff"].is_string())
            throw std::invalid_argument("each term needs \"exp\" and a string \"coeff\"");
        g.add_term(detail::exp_from_json(t["exp"], nvars),
                   parse_rational(t["coeff"].get<std::string>()));
    }
    return g;
}

inline Json lattice_to_json(const LatticePointSet& s) {
    Json points = Json::array();
    for (const auto& p : s.points) points.push_back(p);
    return {{"dim", s.dim}, {"points", std::move(points)}};
}

inline LatticePointSet lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() ||
        j["dim"].get<long long>() < 1)
        throw std::invalid_argument("\"dim\" must be a positive integer");
    if (!j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("\"points\" must be an array");
    LatticePointSet s{j["dim"].get<int>(), {}};
    for (const auto& p : j["points"]) {
        if (!p.is_array() || static_cast<int>(p.size()) != s.dim)
            throw std::invalid_argument("each point must be an array of length dim");
        ExpVec v;
        for (const auto& x : p) {
            if (!x.is_number_integer())
                throw std::invalid_argument("lattice point entries must be integers");
            v.push_back(x.get<int>());
        }
        s.points.insert(std::move(v));
    }
    return s;
}

inline Json circuit_to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::input: gates.push_back({{"op", "input"}, {"var", g.a}}); break;
            case GateKind::constant:
                gates.push_back({{"op", "const"}, {"val", to_string(g.value)}});
                break;
            case GateKind::oplus:
                gates.push_back({{"op", "oplus"}, {"args", {g.a, g.b}}});
                break;
            case GateKind::odot:
                gates.push_back({{"op", "odot"}, {"args", {g.a, g.b}}});
                break;
        }
    }
    return {{"vars", c.nvars()}, {"gates", std::move(gates)}, {"output", c.output()}};
}

// Deserialization validates shape, index bounds, and acyclicity (arguments
// strictly before their gate); malformed circuits are rejected, not repaired.
inline Circuit circuit_from_json(const Json& j) {
    int nvars = detail::vars_from_json(j);
    if (!j.contains("gates") || !j["gates"].is_array() || j["gates"].empty())
        throw std::invalid_argument("\"gates\" must be a nonempty array");
    if (!j.contains("output") || !j["output"].is_number_integer() ||
        j["output"].get<long long>() < 0)
        throw std::invalid_argument("\"output\" must be a nonnegative gate index");
    std::vector<Gate> gates;
    for (const auto& gj : j["gates"]) {
        if (!gj.is_object() || !gj.contains("op") || !gj["op"].is_string())
            throw std::invalid_argument("each gate needs a string \"op\"");
        const std::string op = gj["op"].get<std::string>();
        Gate g{GateKind::input, -1, -1, Rational(0)};
        if (op == "input") {
            if (!gj.contains("var") || !gj["var"].is_number_integer())
                throw std::invalid_argument("input gate needs an integer \"var\"");
            g.kind = GateKind::input;
            g.a = gj["var"].get<int>();
        } else if (op == "const") {
            if (!gj.contains("val") || !gj["val"].is_string())
                throw std::invalid_argument("const gate needs a string \"val\"");
            g.kind = GateKind::constant;
            g.value = parse_rational(gj["val"].get<std::string>());
        } else if (op == "oplus" || op == "odot") {
            if (!gj.contains("args") || !gj["args"].is_array() || gj["args"].size() != 2 ||
                !gj["args"][0].is_number_integer() || !gj["args"][1].is_number_integer())
                throw std::invalid_argument("operation gate needs integer \"args\" [i,j]");
            g.kind = op == "oplus" ? GateKind::oplus : GateKind::odot;
            g.a = gj["args"][0].get<int>();
            g.b = gj["args"][1].get<int>();
        } else {
            throw std::invalid_argument("unknown gate op: " + op);
        }
        gates.push_back(std::move(g));
    }
    return Circuit(nvars, std::move(gates), j["output"].get<std::size_t>());
}

inline Json report_to_json(const TheoremReport& r) {
    return {{"shape", r.shape.to_string()},
            {"n", r.n},
            {"beta", r.beta.to_string()},
            {"beta1_equals_lambda1", r.beta1_equals_lambda1},
            {"trop_equal_axiomatic", r.trop_equal_axiomatic},
            {"dominating_partition_is_beta", r.dominating_partition_is_beta}};
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

}  // namespace tropcirc
