#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uca {

/// Simple undirected graph over named vertices. The vertex list order is the
/// canonical iteration order used by the solver; it is the determinism anchor
/// for every enumeration in the library.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> vertices)
        : vertices_(std::move(vertices)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].empty())
                throw std::invalid_argument("Graph: empty vertex name");
            if (!index_.emplace(vertices_[i], i).second)
                throw std::invalid_argument("Graph: duplicate vertex " + vertices_[i]);
        }
    }

    std::size_t size() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }

    bool has_vertex(const std::string& name) const {
        return index_.count(name) != 0;
    }
    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("Graph: unknown vertex " + name);
        return it->second;
    }

    /// Idempotent; loops and unknown endpoints are rejected.
    void add_edge(const std::string& u, const std::string& v) {
        std::size_t i = index_of(u), j = index_of(v);
        if (i == j)
            throw std::invalid_argument("Graph: loop at " + u);
        edges_.insert(std::minmax(i, j));
    }

    bool has_edge(std::size_t i, std::size_t j) const {
        return edges_.count(std::minmax(i, j)) != 0;
    }
    bool has_edge(const std::string& u, const std::string& v) const {
        return has_edge(index_of(u), index_of(v));
    }

    /// Index pairs (i, j) with i < j, in lexicographic order.
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
        return edges_;
    }

    /// Induced subgraph; keep order follows this graph's canonical order.
    Graph induced(const std::set<std::string>& keep) const {
        std::vector<std::string> vs;
        for (const auto& v : vertices_)
            if (keep.count(v)) vs.push_back(v);
        Graph g(vs);
        for (auto [i, j] : edges_)
            if (keep.count(vertices_[i]) && keep.count(vertices_[j]))
                g.add_edge(vertices_[i], vertices_[j]);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

} // namespace uca
