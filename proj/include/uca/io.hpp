#pragma once

#include "uca/reduction.hpp"
#include "uca/representation.hpp"
#include "uca/solver.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace uca {

using json = nlohmann::json;

/// Schema violation in an input file; the message names the offending field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io_detail {

inline void expect_keys(const json& j, std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional,
                        const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    for (const char* k : required)
        if (!j.contains(k)) throw ParseError(what + ": missing field \"" + k + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : required) known = known || it.key() == k;
        for (const char* k : optional) known = known || it.key() == k;
        if (!known) throw ParseError(what + ": unknown field \"" + it.key() + "\"");
    }
}

inline Rat rat_field(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + ": expected a \"p/q\" string");
    auto r = Rat::parse(j.get<std::string>());
    if (!r) throw ParseError(what + ": malformed rational \"" + j.get<std::string>() + "\"");
    return *r;
}

} // namespace io_detail

inline json domain_to_json(const Domain& d) {
    if (d.is_circle())
        return {{"kind", "circle"}, {"circumference", d.circumference().str()}};
    return {{"kind", "line"}, {"window", d.window().str()}};
}

inline Domain domain_from_json(const json& j) {
    io_detail::expect_keys(j, {"kind"}, {"circumference", "window"}, "domain");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "circle") {
            if (!j.contains("circumference"))
                throw ParseError("domain: missing field \"circumference\"");
            return Domain::circle(io_detail::rat_field(j.at("circumference"), "circumference"));
        }
        if (kind == "line") {
            if (!j.contains("window"))
                throw ParseError("domain: missing field \"window\"");
            return Domain::line(io_detail::rat_field(j.at("window"), "window"));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("domain: ") + e.what());
    }
    throw ParseError("domain: kind must be \"circle\" or \"line\", got \"" + kind + "\"");
}

inline json instance_to_json(const SolveInstance& inst) {
    json edges = json::array();
    for (auto [i, j] : inst.graph.edges())
        edges.push_back({inst.graph.vertex(i), inst.graph.vertex(j)});
    json fixed = json::object();
    for (const auto& [v, s] : inst.partial.fixed) fixed[v] = s.str();
    return {{"domain", domain_to_json(inst.domain)},
            {"vertices", inst.graph.vertices()},
            {"edges", edges},
            {"fixed", fixed}};
}

inline SolveInstance instance_from_json(const json& j) {
    io_detail::expect_keys(j, {"domain", "vertices", "edges"}, {"fixed"}, "instance");
    Domain domain = domain_from_json(j.at("domain"));
    if (!j.at("vertices").is_array()) throw ParseError("vertices: expected an array");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string() || v.get<std::string>().empty())
            throw ParseError("vertices: names must be non-empty strings");
        vs.push_back(v.get<std::string>());
    }
    Graph g;
    try {
        g = Graph(vs);
        if (!j.at("edges").is_array()) throw ParseError("edges: expected an array");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("edges: each edge must be a pair of vertex names");
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    PartialRep partial;
    if (j.contains("fixed")) {
        if (!j.at("fixed").is_object()) throw ParseError("fixed: expected an object");
        for (auto it = j.at("fixed").begin(); it != j.at("fixed").end(); ++it) {
            if (!g.has_vertex(it.key()))
                throw ParseError("fixed: unknown vertex \"" + it.key() + "\"");
            partial.fixed[it.key()] = io_detail::rat_field(it.value(), "fixed." + it.key());
        }
    }
    return SolveInstance{std::move(g), std::move(domain), std::move(partial)};
}

inline json witness_to_json(const Representation& rep) {
    json starts = json::object();
    for (const auto& [v, s] : rep.starts) starts[v] = s.str();
    return {{"starts", starts}};
}

inline Representation witness_from_json(const json& j) {
    io_detail::expect_keys(j, {"starts"}, {}, "witness");
    if (!j.at("starts").is_object()) throw ParseError("starts: expected an object");
    Representation rep;
    for (auto it = j.at("starts").begin(); it != j.at("starts").end(); ++it)
        rep.starts[it.key()] = io_detail::rat_field(it.value(), "starts." + it.key());
    return rep;
}

inline json three_partition_to_json(const ThreePartitionInstance& inst, PartitionMode mode) {
    return {{"k", inst.k},
            {"M", inst.M},
            {"A", inst.A},
            {"mode", mode == PartitionMode::Checked ? "checked" : "unchecked"}};
}

/// The file's "mode" field may be overridden by the caller (CLI --mode flag);
/// pass nullptr to use the file's own mode, defaulting to checked.
inline std::pair<ThreePartitionInstance, PartitionMode>
three_partition_from_json(const json& j) {
    io_detail::expect_keys(j, {"k", "M", "A"}, {"mode"}, "3-partition instance");
    ThreePartitionInstance inst;
    if (!j.at("k").is_number_integer()) throw ParseError("k: expected an integer");
    if (!j.at("M").is_number_integer()) throw ParseError("M: expected an integer");
    inst.k = j.at("k").get<std::int64_t>();
    inst.M = j.at("M").get<std::int64_t>();
    if (!j.at("A").is_array()) throw ParseError("A: expected an array of integers");
    for (const auto& a : j.at("A")) {
        if (!a.is_number_integer()) throw ParseError("A: expected an array of integers");
        inst.A.push_back(a.get<std::int64_t>());
    }
    PartitionMode mode = PartitionMode::Checked;
    if (j.contains("mode")) {
        std::string m = j.at("mode").get<std::string>();
        if (m == "checked")
            mode = PartitionMode::Checked;
        else if (m == "unchecked")
            mode = PartitionMode::Unchecked;
        else
            throw ParseError("mode: must be \"checked\" or \"unchecked\", got \"" + m + "\"");
    }
    return {std::move(inst), mode};
}

inline json partition_witness_to_json(const PartitionWitness& w) {
    json groups = json::array();
    for (const auto& g : w.groups) groups.push_back(g);
    return {{"groups", groups}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

} // namespace uca
