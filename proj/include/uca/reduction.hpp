#pragma once

#include "uca/representation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uca {

enum class PartitionMode { Checked, Unchecked };

/// A 3-Partition instance: split A_1..A_3k into k triples, each summing to M.
/// Checked mode enforces the classical size constraints (which force every
/// exact-M group to be a triple); unchecked mode admits any positive numbers
/// with the right total, so that tiny hand-analyzable instances exist.
struct ThreePartitionInstance {
    std::int64_t k = 0;
    std::int64_t M = 0;
    std::vector<std::int64_t> A;
};

/// Groups of 1-based indices into A, each summing to M.
struct PartitionWitness {
    std::vector<std::vector<std::size_t>> groups;
};

inline std::vector<std::string> validate_3p(const ThreePartitionInstance& inst,
                                            PartitionMode mode) {
    std::vector<std::string> violations;
    if (inst.k < 1) violations.push_back("k must be positive, got " + std::to_string(inst.k));
    if (inst.M < 1) violations.push_back("M must be positive, got " + std::to_string(inst.M));
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < inst.A.size(); ++i) {
        if (inst.A[i] < 1)
            violations.push_back("A[" + std::to_string(i + 1) + "] must be positive, got " +
                                 std::to_string(inst.A[i]));
        sum += inst.A[i];
    }
    if (sum != inst.k * inst.M)
        violations.push_back("sum of A is " + std::to_string(sum) + ", expected k*M = " +
                             std::to_string(inst.k * inst.M));
    if (mode == PartitionMode::Checked) {
        if (inst.A.size() != static_cast<std::size_t>(3 * inst.k))
            violations.push_back("checked mode needs exactly 3k = " +
                                 std::to_string(3 * inst.k) + " numbers, got " +
                                 std::to_string(inst.A.size()));
        if (inst.M < 8)
            violations.push_back("checked mode requires M >= 8, got " + std::to_string(inst.M));
        for (std::size_t i = 0; i < inst.A.size(); ++i) {
            // M/4 < A_i < M/2, compared exactly
            if (!(4 * inst.A[i] > inst.M && 2 * inst.A[i] < inst.M))
                violations.push_back("A[" + std::to_string(i + 1) + "] = " +
                                     std::to_string(inst.A[i]) +
                                     " violates M/4 < A_i < M/2 for M = " +
                                     std::to_string(inst.M));
        }
    }
    return violations;
}

inline bool validate_witness(const ThreePartitionInstance& inst, PartitionMode mode,
                             const PartitionWitness& w) {
    if (w.groups.size() != static_cast<std::size_t>(inst.k)) return false;
    std::vector<char> seen(inst.A.size(), 0);
    for (const auto& g : w.groups) {
        if (mode == PartitionMode::Checked && g.size() != 3) return false;
        std::int64_t sum = 0;
        for (std::size_t idx : g) {
            if (idx < 1 || idx > inst.A.size() || seen[idx - 1]) return false;
            seen[idx - 1] = 1;
            sum += inst.A[idx - 1];
        }
        if (sum != inst.M) return false;
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

/// Exhaustive backtracking partition oracle. Each index goes to the lowest
/// eligible group; a new group may be opened only as the first empty one, so
/// the first witness found is the lexicographically smallest.
inline std::optional<PartitionWitness> oracle_partition(const ThreePartitionInstance& inst,
                                                        PartitionMode mode) {
    if (!validate_3p(inst, mode).empty())
        throw std::invalid_argument("oracle_partition: invalid instance");
    std::size_t n = inst.A.size();
    std::size_t k = static_cast<std::size_t>(inst.k);
    std::vector<std::vector<std::size_t>> groups(k);
    std::vector<std::int64_t> sums(k, 0);

    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
            for (std::size_t g = 0; g < k; ++g)
                if (sums[g] != inst.M) return false;
            return true;
        }
        for (std::size_t g = 0; g < k; ++g) {
            if (sums[g] + inst.A[i] > inst.M) continue;
            if (mode == PartitionMode::Checked && groups[g].size() >= 3) continue;
            groups[g].push_back(i + 1);
            sums[g] += inst.A[i];
            if (self(self, i + 1)) return true;
            sums[g] -= inst.A[i];
            groups[g].pop_back();
            if (groups[g].empty()) break; // opening a later empty group is symmetric
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return PartitionWitness{std::move(groups)};
}

/// The hardness reduction: a circle of circumference k(M+2), one path on
/// 2*A_i vertices per number, and k isolated vertices pinned one unit apart
/// at multiples of M+2. Vertex names: "p{i}_{t}" for the t-th vertex of the
/// i-th path, "v{j}" for the pinned vertices; canonical order is paths by i
/// then t, then pins by j.
inline SolveInstance reduce_to_repext(const ThreePartitionInstance& inst,
                                      PartitionMode mode) {
    auto violations = validate_3p(inst, mode);
    if (!violations.empty()) {
        std::string msg = "reduce_to_repext: invalid instance:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < inst.A.size(); ++i)
        for (std::int64_t t = 0; t < 2 * inst.A[i]; ++t)
            names.push_back("p" + std::to_string(i) + "_" + std::to_string(t));
    for (std::int64_t j = 0; j < inst.k; ++j)
        names.push_back("v" + std::to_string(j));
    Graph g(names);
    for (std::size_t i = 0; i < inst.A.size(); ++i)
        for (std::int64_t t = 0; t + 1 < 2 * inst.A[i]; ++t)
            g.add_edge("p" + std::to_string(i) + "_" + std::to_string(t),
                       "p" + std::to_string(i) + "_" + std::to_string(t + 1));
    Rat circumference(inst.k * (inst.M + 2));
    PartialRep partial;
    for (std::int64_t j = 0; j < inst.k; ++j)
        partial.fixed["v" + std::to_string(j)] = Rat(j * (inst.M + 2));
    return SolveInstance{std::move(g), Domain::circle(std::move(circumference)),
                         std::move(partial)};
}

/// The k maximal free stretches between consecutive pinned arcs, as (start,
/// length) pairs in clockwise order. For reduction instances every gap has
/// length exactly M+1.
inline std::vector<std::pair<Rat, Rat>> gap_structure(const SolveInstance& inst) {
    if (!inst.domain.is_circle())
        throw std::invalid_argument("gap_structure: circle instances only");
    if (inst.partial.empty())
        throw std::invalid_argument("gap_structure: no pinned arcs");
    std::vector<Rat> pins;
    for (const auto& [v, s] : inst.partial.fixed) pins.push_back(s);
    std::sort(pins.begin(), pins.end());
    const Rat& C = inst.domain.circumference();
    std::vector<std::pair<Rat, Rat>> gaps;
    for (std::size_t j = 0; j < pins.size(); ++j) {
        Rat start = pins[j] + Rat(1);
        Rat next = j + 1 < pins.size() ? pins[j + 1] : pins[0] + C;
        gaps.emplace_back(rat_mod(start, C), next - start);
    }
    return gaps;
}

} // namespace uca
