#pragma once

#include "uca/eps_rational.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace uca {

/// x_to - x_from <= bound.
struct DiffConstraint {
    int from;
    int to;
    EpsRat bound;
};

/// A conjunction of difference constraints over EpsRat bounds. Feasible iff
/// the weighted constraint graph (edge from->to of weight bound) has no
/// negative cycle.
struct DiffSystem {
    int var_count = 0;
    std::vector<DiffConstraint> constraints;

    void add(int i, int j, EpsRat bound) {
        if (i < 0 || j < 0 || i >= var_count || j >= var_count)
            throw std::invalid_argument("DiffSystem: constraint references undeclared variable");
        constraints.push_back({i, j, std::move(bound)});
    }

    /// x_i = v, encoded as a constraint pair against a designated zero variable.
    void pin(int zero_var, int i, const Rat& v) {
        add(zero_var, i, EpsRat(v));
        add(i, zero_var, EpsRat(-v));
    }
};

struct Feasibility {
    bool sat = false;
    std::vector<EpsRat> potentials; // satisfies every constraint when sat
};

/// Bellman-Ford from a virtual super-source (all potentials start at 0).
inline Feasibility feasible(const DiffSystem& sys) {
    Feasibility result;
    int n = sys.var_count;
    std::vector<EpsRat> pot(n, EpsRat(Rat(0)));
    for (int pass = 0; pass < n; ++pass) {
        bool changed = false;
        for (const auto& c : sys.constraints) {
            EpsRat relaxed = pot[c.from] + c.bound;
            if (relaxed < pot[c.to]) {
                pot[c.to] = std::move(relaxed);
                changed = true;
            }
        }
        if (!changed) {
            result.sat = true;
            result.potentials = std::move(pot);
            return result;
        }
    }
    // One more pass; any relaxation now certifies a negative cycle.
    for (const auto& c : sys.constraints)
        if (pot[c.from] + c.bound < pot[c.to]) return result;
    result.sat = true;
    result.potentials = std::move(pot);
    return result;
}

/// The componentwise-minimal solution with x[zero_var] = 0, from shortest
/// paths to the zero variable. Requires every variable to reach zero_var in
/// the constraint graph and the system to be feasible.
inline std::optional<std::vector<EpsRat>> minimal_solution(const DiffSystem& sys,
                                                           int zero_var) {
    int n = sys.var_count;
    // Shortest path from each variable to zero_var = single-source search on
    // reversed edges.
    std::vector<std::optional<EpsRat>> dist(n);
    dist[zero_var] = EpsRat(Rat(0));
    for (int pass = 0; pass < n; ++pass) {
        bool changed = false;
        for (const auto& c : sys.constraints) {
            // reversed edge: to -> from, same weight
            if (!dist[c.to]) continue;
            EpsRat relaxed = *dist[c.to] + c.bound;
            if (!dist[c.from] || relaxed < *dist[c.from]) {
                dist[c.from] = std::move(relaxed);
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const auto& c : sys.constraints)
        if (dist[c.to] && (!dist[c.from] || *dist[c.to] + c.bound < *dist[c.from]))
            return std::nullopt; // negative cycle
    std::vector<EpsRat> xs(n);
    for (int v = 0; v < n; ++v) {
        if (!dist[v]) return std::nullopt; // unbounded below
        xs[v] = -*dist[v];
    }
    return xs;
}

/// Incremental feasibility engine for the search: constraints are appended
/// one at a time, potentials are repaired by label correcting, and marks
/// allow exact rollback on backtrack via an undo log.
class DiffEngine {
public:
    explicit DiffEngine(int var_count)
        : n_(var_count), out_(var_count), pot_(var_count, EpsRat(Rat(0))),
          queued_(var_count, 0) {}

    struct Mark {
        std::size_t constraint_count;
        std::size_t undo_depth;
    };

    Mark mark() const { return {constraints_.size(), undo_.size()}; }

    void rollback(const Mark& m) {
        while (constraints_.size() > m.constraint_count) {
            const auto& c = constraints_.back();
            out_[c.from].pop_back();
            constraints_.pop_back();
        }
        while (undo_.size() > m.undo_depth) {
            pot_[undo_.back().first] = std::move(undo_.back().second);
            undo_.pop_back();
        }
    }

    /// Appends one constraint and repairs the potentials. Returns false when
    /// the system became infeasible; the caller must roll back to a mark then
    /// (the potentials are not meaningful after a failure).
    bool add(int i, int j, EpsRat bound) {
        constraints_.push_back({i, j, bound});
        out_[i].push_back({j, std::move(bound)});
        const auto& c = constraints_.back();
        if (!(pot_[c.from] + c.bound < pot_[c.to])) return true;
        return repair(c.from, c.to, pot_[c.from] + c.bound);
    }

    bool add_pin(int zero_var, int i, const Rat& v) {
        if (!add(zero_var, i, EpsRat(v))) return false;
        return add(i, zero_var, EpsRat(-v));
    }

    const std::vector<EpsRat>& potentials() const { return pot_; }
    const std::vector<DiffConstraint>& constraints() const { return constraints_; }

    DiffSystem snapshot() const {
        DiffSystem sys;
        sys.var_count = n_;
        sys.constraints = constraints_;
        return sys;
    }

private:
    void lower(int v, EpsRat value) {
        undo_.emplace_back(v, std::move(pot_[v]));
        pot_[v] = std::move(value);
    }

    // Before this add the potentials were feasible, so any new negative cycle
    // runs through the added edge (source -> start). Propagating the decrease
    // of `start` tries to lower `source` again iff such a cycle exists; if the
    // propagation settles without touching `source`, the system is feasible.
    bool repair(int source, int start, EpsRat value) {
        lower(start, std::move(value));
        queue_.clear();
        queue_.push_back(start);
        queued_[start] = 1;
        while (!queue_.empty()) {
            int u = queue_.front();
            queue_.pop_front();
            queued_[u] = 0;
            for (const auto& [v, w] : out_[u]) {
                EpsRat relaxed = pot_[u] + w;
                if (relaxed < pot_[v]) {
                    if (v == source) {
                        for (int q : queue_) queued_[q] = 0;
                        queue_.clear();
                        return false; // negative cycle through the new edge
                    }
                    lower(v, std::move(relaxed));
                    if (!queued_[v]) {
                        queue_.push_back(v);
                        queued_[v] = 1;
                    }
                }
            }
        }
        return true;
    }

    int n_;
    std::vector<DiffConstraint> constraints_;
    std::vector<std::vector<std::pair<int, EpsRat>>> out_;
    std::vector<EpsRat> pot_;
    std::vector<std::pair<int, EpsRat>> undo_;
    std::vector<char> queued_;
    std::deque<int> queue_;
};

} // namespace uca
