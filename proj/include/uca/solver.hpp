#pragma once

#include "uca/diff_system.hpp"
#include "uca/representation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uca {

struct Budget {
    std::optional<std::uint64_t> max_feasibility_checks;
    std::optional<double> max_seconds;

    static Budget unlimited() { return {}; }
};

enum class Verdict { Sat, Unsat, Unknown };

struct SolveStats {
    std::uint64_t orderings_explored = 0;
    std::uint64_t feasibility_checks = 0;
    double elapsed_seconds = 0.0;
};

struct SolveOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<Representation> witness; // present iff Sat
    SolveStats stats;
};

/// Replaces the symbolic infinitesimal in a feasible set of unrolled arc
/// positions by a concrete positive rational 2^(-t), halving until the
/// resulting purely rational representation validates and extends. The EpsRat
/// solution certifies a nonempty open slab of valid values, so this
/// terminates.
inline Representation materialize_epsilon(const std::map<std::string, EpsRat>& positions,
                                          const SolveInstance& inst) {
    for (unsigned t = 1; t <= 256; ++t) {
        Rat iota = rat_pow2_inv(t);
        Representation rep;
        for (const auto& [v, x] : positions) {
            Rat s = x.substitute(iota);
            if (inst.domain.is_circle()) s = rat_mod(s, inst.domain.circumference());
            rep.starts[v] = std::move(s);
        }
        if (validate_rep(inst.graph, rep, inst.domain).ok && extends(rep, inst.partial))
            return rep;
    }
    throw std::logic_error("materialize_epsilon: no concrete iota found (internal bug)");
}

namespace detail {

struct BudgetExhausted {};

/// Shared setup for both solvers: anchoring, unrolled pin values, and the
/// constraint vocabulary. Variables are the graph vertices (by canonical
/// index) plus one designated zero variable at index n.
class SearchBase {
public:
    explicit SearchBase(const SolveInstance& inst, Budget budget)
        : inst_(inst),
          budget_(budget),
          n_(static_cast<int>(inst.graph.size())),
          zero_(static_cast<int>(inst.graph.size())),
          circle_(inst.domain.is_circle()),
          extent_(circle_ ? inst.domain.circumference() : inst.domain.window()),
          pinned_(inst.graph.size(), 0),
          pin_value_(inst.graph.size()),
          start_(std::chrono::steady_clock::now()) {
        auto report = inst.validate();
        if (!report.ok)
            throw std::invalid_argument("solve: invalid instance (partial representation "
                                        "does not represent its induced subgraph)");
        for (const auto& [v, s] : inst.partial.fixed) {
            if (!inst.domain.start_in_range(s))
                throw std::invalid_argument("solve: pinned start out of range for " + v);
            int i = static_cast<int>(inst.graph.index_of(v));
            pinned_[i] = 1;
            pin_value_[i] = s;
        }
        // Anchor: smallest pinned start (ties by canonical index), else the
        // first vertex, virtually pinned to 0 -- sound by rotation invariance
        // on the circle and harmless on the line (there the anchor is not
        // pinned at all).
        anchor_ = -1;
        for (int i = 0; i < n_; ++i) {
            if (!pinned_[i]) continue;
            if (anchor_ < 0 || pin_value_[i] < pin_value_[anchor_]) anchor_ = i;
        }
        if (anchor_ >= 0) {
            anchor_start_ = pin_value_[anchor_];
        } else if (circle_ && n_ > 0) {
            anchor_ = 0;
            anchor_start_ = Rat(0);
            pinned_[0] = 1;
            pin_value_[0] = Rat(0);
            virtual_anchor_ = true;
        }
        // Unroll circular pin positions into the window [anchor_start,
        // anchor_start + C); the anchor carries the smallest pin, so every
        // pinned start is already its own unrolled value.
        for (int i = 0; i < n_; ++i)
            if (pinned_[i]) pin_order_.push_back(i);
        std::sort(pin_order_.begin(), pin_order_.end(), [&](int a, int b) {
            if (pin_value_[a] != pin_value_[b]) return pin_value_[a] < pin_value_[b];
            return a < b;
        });
    }

    void count_check() {
        ++stats_.feasibility_checks;
        if (budget_.max_feasibility_checks &&
            stats_.feasibility_checks > *budget_.max_feasibility_checks)
            throw BudgetExhausted{};
        if (budget_.max_seconds && (stats_.feasibility_checks & 1023) == 0 &&
            elapsed() > *budget_.max_seconds)
            throw BudgetExhausted{};
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    /// Canonical witness from the final system: tightest-left potentials via
    /// shortest paths to the zero variable, then epsilon materialization.
    Representation witness_from(const DiffSystem& sys,
                                const std::vector<int>& order) const {
        auto xs = minimal_solution(sys, zero_);
        if (!xs)
            throw std::logic_error("solver: feasible leaf had no minimal solution");
        std::map<std::string, EpsRat> positions;
        for (int v : order) positions[inst_.graph.vertex(v)] = (*xs)[v];
        return materialize_epsilon(positions, inst_);
    }

    bool witness_ok(const Representation& rep) const {
        return validate_rep(inst_.graph, rep, inst_.domain).ok &&
               extends(rep, inst_.partial);
    }

    const SolveInstance& inst_;
    Budget budget_;
    int n_;
    int zero_;
    bool circle_;
    Rat extent_; // circumference or window
    std::vector<char> pinned_;
    std::vector<Rat> pin_value_;
    std::vector<int> pin_order_; // pinned vertices by increasing unrolled value
    int anchor_ = -1;
    Rat anchor_start_;
    bool virtual_anchor_ = false;
    SolveStats stats_;
    std::chrono::steady_clock::time_point start_;
};

/// The pruned, complete search. Enumerates linear orderings of start points
/// around the cut in canonical order, branches circular edge disjunctions
/// clockwise-short first, and prunes every partial branch by incremental
/// difference-constraint feasibility.
class Search : public SearchBase {
public:
    Search(const SolveInstance& inst, Budget budget)
        : SearchBase(inst, budget),
          engine_(n_ + 1),
          order_(),
          used_(n_, 0) {
        order_.reserve(n_);
    }

    SolveOutcome run() {
        SolveOutcome out;
        try {
            bool sat = n_ == 0 ? handle_empty(out) : place(0);
            if (sat && n_ > 0) {
                out.verdict = Verdict::Sat;
                out.witness = std::move(witness_);
            } else if (n_ > 0) {
                out.verdict = Verdict::Unsat;
            }
        } catch (const BudgetExhausted&) {
            out.verdict = Verdict::Unknown;
            out.witness.reset();
        }
        stats_.elapsed_seconds = elapsed();
        out.stats = stats_;
        return out;
    }

private:
    bool handle_empty(SolveOutcome& out) {
        out.verdict = Verdict::Sat;
        out.witness = Representation{};
        ++stats_.orderings_explored;
        return true;
    }

    // Reflection pruning applies only with an empty partial representation;
    // pinned arcs break the symmetry. On the circle a representation and its
    // mirror give reversed orderings of the vertices after the anchor; on the
    // line the whole ordering reverses.
    bool reflection_pruned() const {
        if (!inst_.partial.empty() || n_ < 3) return false;
        if (circle_ && !virtual_anchor_) return false;
        if (circle_) return order_[1] > order_[n_ - 1];
        return order_[0] > order_[n_ - 1];
    }

    bool place(int depth) {
        if (depth == n_) {
            ++stats_.orderings_explored;
            if (reflection_pruned()) return false;
            Representation rep = witness_from(engine_.snapshot(), order_);
            if (!witness_ok(rep))
                throw std::logic_error("solver: produced witness failed validation");
            witness_ = std::move(rep);
            return true;
        }
        for (int c = 0; c < n_; ++c) {
            if (used_[c]) continue;
            if (circle_ && depth == 0 && c != anchor_) continue;
            // Pinned vertices appear in increasing pin order.
            if (pinned_[c] && c != pin_order_[static_cast<std::size_t>(next_pin_)])
                continue;
            auto m = engine_.mark();
            used_[c] = 1;
            order_.push_back(c);
            if (pinned_[c]) ++next_pin_;
            bool ok = add_placement_constraints(c, depth);
            count_check();
            if (ok) {
                std::vector<int> pending;
                if (circle_) {
                    for (int i = 0; i < depth; ++i)
                        if (inst_.graph.has_edge(order_[i], c)) pending.push_back(order_[i]);
                }
                if (branch_edges(c, pending, 0, depth)) return true;
            }
            engine_.rollback(m);
            if (pinned_[c]) --next_pin_;
            order_.pop_back();
            used_[c] = 0;
        }
        return false;
    }

    // Lookahead: any independent set S among the still-unplaced vertices ends
    // up pairwise more than 1 apart, all at or beyond x_c, and inside the
    // domain, so x_c <= upper_bound - (|S|-1)(1+iota). Greedy over canonical
    // order; the constraint is implied by every completion, so adding it is
    // sound and leaves witnesses unchanged.
    bool add_lookahead(int c) {
        int count = 0;
        indep_.clear();
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            bool free = true;
            for (int s : indep_)
                if (inst_.graph.has_edge(static_cast<std::size_t>(s),
                                         static_cast<std::size_t>(v))) {
                    free = false;
                    break;
                }
            if (free) {
                indep_.push_back(v);
                ++count;
            }
        }
        if (count < 2) return true;
        if (circle_)
            return engine_.add(zero_, c,
                               EpsRat(anchor_start_ + extent_ - Rat(count - 1), -count));
        return engine_.add(zero_, c, EpsRat(extent_ - Rat(count), -(count - 1)));
    }

    // Constraints that placing vertex c at position `depth` settles for good:
    // the monotone chain, its pin, domain bounds, all non-edge separations to
    // already-placed vertices, and (line mode) edge closeness.
    bool add_placement_constraints(int c, int depth) {
        if (depth > 0 && !engine_.add(c, order_[depth - 1], EpsRat(Rat(0))))
            return false;
        if (pinned_[c] && !engine_.add_pin(zero_, c, pin_value_[c]))
            return false;
        if (circle_) {
            // x_c <= anchor_start + C - iota: the unrolled window stays short
            // of one full turn, so the cyclic order is exactly the ordering.
            if (!engine_.add(zero_, c, EpsRat(anchor_start_ + extent_, -1)))
                return false;
        } else {
            if (!engine_.add(zero_, c, EpsRat(extent_ - Rat(1)))) return false;
            if (!engine_.add(c, zero_, EpsRat(Rat(0)))) return false;
        }
        for (int i = 0; i < depth; ++i) {
            int u = order_[i];
            if (inst_.graph.has_edge(u, c)) {
                if (!circle_ && !engine_.add(u, c, EpsRat(Rat(1)))) return false;
                // circle edges are disjunctive; branched separately
            } else {
                // separation > 1 on the near side ...
                if (!engine_.add(c, u, EpsRat(Rat(-1), -1))) return false;
                // ... and, on the circle, on the wrap side too
                if (circle_ && !engine_.add(u, c, EpsRat(extent_ - Rat(1), -1)))
                    return false;
            }
        }
        return add_lookahead(c);
    }

    // Circular edge {u, c}: start distance <= 1 clockwise or counterclockwise.
    // Clockwise-short (the direct gap) is tried first; that is the documented
    // branch order behind witness determinism.
    bool branch_edges(int c, const std::vector<int>& pending, std::size_t idx, int depth) {
        if (idx == pending.size()) return place(depth + 1);
        int u = pending[idx];
        {
            auto m = engine_.mark();
            bool ok = engine_.add(u, c, EpsRat(Rat(1)));
            count_check();
            if (ok && branch_edges(c, pending, idx + 1, depth)) return true;
            engine_.rollback(m);
        }
        {
            auto m = engine_.mark();
            bool ok = engine_.add(c, u, EpsRat(-(extent_ - Rat(1))));
            count_check();
            if (ok && branch_edges(c, pending, idx + 1, depth)) return true;
            engine_.rollback(m);
        }
        return false;
    }

    DiffEngine engine_;
    std::vector<int> order_;
    std::vector<char> used_;
    std::vector<int> indep_;
    int next_pin_ = 0;
    Representation witness_;
};

/// Unpruned differential-testing oracle: every anchored ordering, every side
/// choice for every circular edge, one full Bellman-Ford each.
class ReferenceSearch : public SearchBase {
public:
    ReferenceSearch(const SolveInstance& inst)
        : SearchBase(inst, Budget::unlimited()) {
        if (n_ > 7)
            throw std::invalid_argument("solve_reference: guarded to at most 7 vertices");
    }

    SolveOutcome run() {
        SolveOutcome out;
        if (n_ == 0) {
            out.verdict = Verdict::Sat;
            out.witness = Representation{};
            stats_.elapsed_seconds = elapsed();
            out.stats = stats_;
            return out;
        }
        std::vector<int> rest;
        for (int i = 0; i < n_; ++i)
            if (!(circle_ && i == anchor_)) rest.push_back(i);
        std::vector<std::pair<std::size_t, std::size_t>> edge_list(
            inst_.graph.edges().begin(), inst_.graph.edges().end());
        std::optional<Representation> witness;
        do {
            ++stats_.orderings_explored;
            std::vector<int> order;
            if (circle_) order.push_back(anchor_);
            order.insert(order.end(), rest.begin(), rest.end());
            std::uint64_t masks = circle_ ? (std::uint64_t(1) << edge_list.size()) : 1;
            for (std::uint64_t mask = 0; mask < masks && !witness; ++mask) {
                DiffSystem sys = build_system(order, edge_list, mask);
                ++stats_.feasibility_checks;
                if (!feasible(sys).sat) continue;
                Representation rep = witness_from(sys, order);
                if (!witness_ok(rep))
                    throw std::logic_error("solve_reference: witness failed validation");
                witness = std::move(rep);
            }
        } while (!witness && std::next_permutation(rest.begin(), rest.end()));
        out.verdict = witness ? Verdict::Sat : Verdict::Unsat;
        out.witness = std::move(witness);
        stats_.elapsed_seconds = elapsed();
        out.stats = stats_;
        return out;
    }

private:
    DiffSystem build_system(const std::vector<int>& order,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edge_list,
                            std::uint64_t mask) const {
        DiffSystem sys;
        sys.var_count = n_ + 1;
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        for (int i = 1; i < n_; ++i) sys.add(order[i], order[i - 1], EpsRat(Rat(0)));
        for (int v = 0; v < n_; ++v) {
            if (pinned_[v]) sys.pin(zero_, v, pin_value_[v]);
            if (circle_) {
                sys.add(zero_, v, EpsRat(anchor_start_ + extent_, -1));
            } else {
                sys.add(zero_, v, EpsRat(extent_ - Rat(1)));
                sys.add(v, zero_, EpsRat(Rat(0)));
            }
        }
        auto ordered = [&](int a, int b) { // earlier, later along the cut
            return pos[a] < pos[b] ? std::pair<int, int>(a, b) : std::pair<int, int>(b, a);
        };
        if (circle_) {
            for (std::size_t e = 0; e < edge_list.size(); ++e) {
                auto [u, v] = ordered(static_cast<int>(edge_list[e].first),
                                      static_cast<int>(edge_list[e].second));
                if (mask >> e & 1)
                    sys.add(v, u, EpsRat(-(extent_ - Rat(1)))); // wrap side short
                else
                    sys.add(u, v, EpsRat(Rat(1))); // direct side short
            }
        }
        for (int a = 0; a < n_; ++a) {
            for (int b = a + 1; b < n_; ++b) {
                auto [u, v] = ordered(a, b);
                if (inst_.graph.has_edge(static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(b))) {
                    if (!circle_) sys.add(u, v, EpsRat(Rat(1)));
                } else {
                    sys.add(v, u, EpsRat(Rat(-1), -1)); // x_v - x_u >= 1 + iota
                    if (circle_) sys.add(u, v, EpsRat(extent_ - Rat(1), -1));
                }
            }
        }
        return sys;
    }
};

} // namespace detail

/// Complete exact decision procedure for RepExt on unit arcs. Deterministic:
/// identical inputs yield identical outcomes, including the witness.
inline SolveOutcome solve(const SolveInstance& inst, Budget budget = Budget::unlimited()) {
    detail::Search s(inst, budget);
    return s.run();
}

/// Brute-force oracle with the same contract as solve, no pruning, guarded to
/// at most 7 vertices.
inline SolveOutcome solve_reference(const SolveInstance& inst) {
    detail::ReferenceSearch s(inst);
    return s.run();
}

} // namespace uca
