#pragma once

#include "uca/geometry.hpp"
#include "uca/graph.hpp"
#include "uca/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace uca {

/// Pre-drawn, immovable arcs: start points for a subset of the vertices.
struct PartialRep {
    std::map<std::string, Rat> fixed;

    bool empty() const { return fixed.empty(); }
};

/// A full representation: one unit-arc start per vertex.
struct Representation {
    std::map<std::string, Rat> starts;
};

enum class MismatchKind { MissingEdge, ExtraEdge };

struct Mismatch {
    std::string u, v;
    Rat distance;
    MismatchKind kind; // MissingEdge: uv in G but arcs disjoint; ExtraEdge: the converse
};

struct ValidationReport {
    bool ok = true;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> coverage_errors; // vertices without a start, or out-of-range starts

    explicit operator bool() const { return ok; }
};

/// The intersection graph induced by a representation: edge iff the two
/// closed unit arcs share a point.
inline Graph derived_graph(const Representation& rep, const Domain& domain,
                           const std::vector<std::string>& vertices) {
    Graph g(vertices);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Rat& si = rep.starts.at(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (intersects(si, rep.starts.at(vertices[j]), domain))
                g.add_edge(vertices[i], vertices[j]);
        }
    }
    return g;
}

/// Checks that the representation realizes exactly the given graph. Every
/// offending pair is reported with its start distance.
inline ValidationReport validate_rep(const Graph& g, const Representation& rep,
                                     const Domain& domain) {
    ValidationReport report;
    for (const auto& v : g.vertices()) {
        auto it = rep.starts.find(v);
        if (it == rep.starts.end()) {
            report.coverage_errors.push_back("no start for vertex " + v);
        } else if (!domain.start_in_range(it->second)) {
            report.coverage_errors.push_back("start out of range for vertex " + v +
                                             ": " + it->second.str());
        }
    }
    if (!report.coverage_errors.empty()) {
        report.ok = false;
        return report;
    }
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Rat& si = rep.starts.at(vs[i]);
            const Rat& sj = rep.starts.at(vs[j]);
            bool geo = intersects(si, sj, domain);
            bool edge = g.has_edge(i, j);
            if (geo == edge) continue;
            Rat d = domain.is_circle()
                        ? circ_dist(si, sj, domain.circumference())
                        : (si >= sj ? si - sj : sj - si);
            report.mismatches.push_back(
                {vs[i], vs[j], d, edge ? MismatchKind::MissingEdge : MismatchKind::ExtraEdge});
        }
    }
    report.ok = report.mismatches.empty();
    return report;
}

/// Admission check for problem inputs: the pinned arcs must represent the
/// induced subgraph on the pinned vertices.
inline ValidationReport validate_partial(const Graph& g, const PartialRep& partial,
                                         const Domain& domain) {
    ValidationReport report;
    std::set<std::string> pinned;
    for (const auto& [v, s] : partial.fixed) {
        if (!g.has_vertex(v))
            report.coverage_errors.push_back("pinned vertex not in graph: " + v);
        else
            pinned.insert(v);
    }
    if (!report.coverage_errors.empty()) {
        report.ok = false;
        return report;
    }
    Graph sub = g.induced(pinned);
    Representation rep;
    for (const auto& v : pinned) rep.starts[v] = partial.fixed.at(v);
    return validate_rep(sub, rep, domain);
}

/// Exact agreement (as canonical rationals) with every pinned start.
inline bool extends(const Representation& rep, const PartialRep& partial) {
    for (const auto& [v, s] : partial.fixed) {
        auto it = rep.starts.find(v);
        if (it == rep.starts.end() || !(it->second == s)) return false;
    }
    return true;
}

/// The RepExt input: a graph, a domain, and pre-drawn arcs to honor.
struct SolveInstance {
    Graph graph;
    Domain domain;
    PartialRep partial;

    ValidationReport validate() const {
        return validate_partial(graph, partial, domain);
    }
};

} // namespace uca
