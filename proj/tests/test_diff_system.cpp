#include "uca/diff_system.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace uca;

namespace {

// Independent oracle: a 3-variable system with integer bounds is feasible iff
// some integer assignment on a grid satisfies it (difference constraints have
// integral extreme solutions; x0 may be fixed to 0 by translation).
bool grid_feasible(const std::vector<std::tuple<int, int, int>>& cons, int range) {
    for (int x1 = -range; x1 <= range; ++x1)
        for (int x2 = -range; x2 <= range; ++x2) {
            int xs[3] = {0, x1, x2};
            bool ok = true;
            for (auto [i, j, c] : cons)
                if (xs[j] - xs[i] > c) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    return false;
}

} // namespace

TEST_CASE("feasible: strict vs non-strict touch") {
    DiffSystem contradictory;
    contradictory.var_count = 2;
    contradictory.add(0, 1, EpsRat(Rat(1)));        // x1 - x0 <= 1
    contradictory.add(1, 0, EpsRat(Rat(-1), -1));   // x0 - x1 <= -(1+iota)
    CHECK_FALSE(feasible(contradictory).sat);

    DiffSystem touching;
    touching.var_count = 2;
    touching.add(0, 1, EpsRat(Rat(1)));
    touching.add(1, 0, EpsRat(Rat(-1)));
    auto r = feasible(touching);
    REQUIRE(r.sat);
    CHECK(r.potentials[1] - r.potentials[0] == EpsRat(Rat(1)));

    DiffSystem empty;
    empty.var_count = 3;
    auto e = feasible(empty);
    REQUIRE(e.sat);
    for (const auto& p : e.potentials) CHECK(p == EpsRat(Rat(0)));
}

TEST_CASE("feasible potentials satisfy every constraint (randomized)") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> var(0, 4), bound(-3, 3), strict(0, 1), count(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
        DiffSystem sys;
        sys.var_count = 5;
        int m = count(rng);
        for (int c = 0; c < m; ++c) {
            int i = var(rng), j = var(rng);
            if (i == j) continue;
            sys.add(i, j, EpsRat(Rat(bound(rng)), -strict(rng)));
        }
        auto r = feasible(sys);
        if (!r.sat) continue;
        for (const auto& c : sys.constraints)
            REQUIRE(r.potentials[c.to] - r.potentials[c.from] <= c.bound);
    }
}

TEST_CASE("negative-cycle criterion vs naive grid (randomized 3-variable systems)") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> var(0, 2), bound(-3, 3), count(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::tuple<int, int, int>> cons;
        int m = count(rng);
        for (int c = 0; c < m; ++c) {
            int i = var(rng), j = var(rng);
            if (i == j) continue;
            cons.emplace_back(i, j, bound(rng));
        }
        DiffSystem sys;
        sys.var_count = 3;
        for (auto [i, j, c] : cons) sys.add(i, j, EpsRat(Rat(c)));
        REQUIRE(feasible(sys).sat == grid_feasible(cons, 18));
    }
}

TEST_CASE("minimal_solution is feasible and componentwise minimal") {
    DiffSystem sys;
    sys.var_count = 4; // vars 0..2, zero var 3
    sys.pin(3, 0, Rat(2));
    sys.add(0, 1, EpsRat(Rat(5)));        // x1 <= x0 + 5
    sys.add(1, 0, EpsRat(Rat(-1), -1));   // x1 >= x0 + 1 + iota
    sys.add(1, 2, EpsRat(Rat(3)));
    sys.add(2, 1, EpsRat(Rat(0)));        // x2 >= x1
    auto xs = minimal_solution(sys, 3);
    REQUIRE(xs.has_value());
    CHECK((*xs)[3] == EpsRat(Rat(0)));
    CHECK((*xs)[0] == EpsRat(Rat(2)));
    CHECK((*xs)[1] == EpsRat(Rat(3), 1)); // tightest-left: lower bound met exactly
    CHECK((*xs)[2] == EpsRat(Rat(3), 1));
    for (const auto& c : sys.constraints)
        REQUIRE((*xs)[c.to] - (*xs)[c.from] <= c.bound);

    DiffSystem cyc;
    cyc.var_count = 2;
    cyc.add(0, 1, EpsRat(Rat(0), -1));
    cyc.add(1, 0, EpsRat(Rat(0)));
    CHECK_FALSE(minimal_solution(cyc, 0).has_value());
}

TEST_CASE("incremental engine agrees with batch feasibility (randomized)") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> var(0, 4), bound(-3, 3), strict(0, 1), count(1, 14);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = count(rng);
        std::vector<DiffConstraint> cons;
        for (int c = 0; c < m; ++c) {
            int i = var(rng), j = var(rng);
            if (i == j) continue;
            cons.push_back({i, j, EpsRat(Rat(bound(rng)), -strict(rng))});
        }
        DiffSystem sys;
        sys.var_count = 5;
        for (const auto& c : cons) sys.add(c.from, c.to, c.bound);
        bool batch = feasible(sys).sat;

        DiffEngine engine(5);
        bool inc = true;
        for (const auto& c : cons) {
            if (!engine.add(c.from, c.to, c.bound)) {
                inc = false;
                break;
            }
        }
        REQUIRE(inc == batch);
        if (inc)
            for (const auto& c : engine.constraints())
                REQUIRE(engine.potentials()[c.to] - engine.potentials()[c.from] <= c.bound);
    }
}

TEST_CASE("engine rollback restores state exactly") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> var(0, 3), bound(-2, 2), strict(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        DiffEngine engine(4);
        // a failed add leaves the engine unusable until rolled back
        auto checked_add = [&](int i, int j, EpsRat b) {
            auto m = engine.mark();
            if (!engine.add(i, j, std::move(b))) engine.rollback(m);
        };
        for (int c = 0; c < 4; ++c) {
            int i = var(rng), j = var(rng);
            if (i == j) continue;
            checked_add(i, j, EpsRat(Rat(bound(rng)), -strict(rng)));
        }
        auto before_pot = engine.potentials();
        auto before_cnt = engine.constraints().size();
        auto m = engine.mark();
        for (int c = 0; c < 3; ++c) {
            int i = var(rng), j = var(rng);
            if (i == j) continue;
            checked_add(i, j, EpsRat(Rat(bound(rng)), -strict(rng)));
        }
        engine.rollback(m);
        REQUIRE(engine.potentials() == before_pot);
        REQUIRE(engine.constraints().size() == before_cnt);
    }
}
