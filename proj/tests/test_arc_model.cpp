#include "uca/representation.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace uca;

namespace {

Rat random_start(std::mt19937& rng, const Rat& upper_exclusive) {
    // multiples of 1/4 in [0, upper)
    long cells = static_cast<long>((upper_exclusive * Rat(4)).to_double());
    std::uniform_int_distribution<long> d(0, cells - 1);
    return Rat(d(rng), 4);
}

} // namespace

TEST_CASE("Domain construction limits") {
    CHECK_THROWS_AS(Domain::circle(Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(Domain::circle(Rat(3, 2)), std::invalid_argument);
    CHECK_NOTHROW(Domain::circle(Rat(9, 4)));
    CHECK_THROWS_AS(Domain::line(Rat(1, 2)), std::invalid_argument);
    CHECK_NOTHROW(Domain::line(Rat(1)));
}

TEST_CASE("circ_dist") {
    CHECK(circ_dist(Rat(0), Rat(13), Rat(14)) == Rat(1));
    CHECK(circ_dist(Rat(5), Rat(5), Rat(14)) == Rat(0));
    CHECK(circ_dist(Rat(0), Rat(7), Rat(14)) == Rat(7));
    CHECK(circ_dist(Rat(1, 2), Rat(27, 2), Rat(14)) == Rat(1));
}

TEST_CASE("circ_dist properties (randomized)") {
    std::mt19937 rng(7);
    Rat C(14);
    for (int i = 0; i < 500; ++i) {
        Rat a = random_start(rng, C), b = random_start(rng, C), c = random_start(rng, C);
        REQUIRE(circ_dist(a, b, C) == circ_dist(b, a, C));
        REQUIRE(circ_dist(a, a, C) == Rat(0));
        REQUIRE(circ_dist(a, b, C) <= Rat(7));
        REQUIRE(circ_dist(a, c, C) <= circ_dist(a, b, C) + circ_dist(b, c, C));
    }
}

TEST_CASE("intersects: closed arcs, endpoint touch counts") {
    Domain circle = Domain::circle(Rat(14));
    CHECK(intersects(Rat(0), Rat(1), circle));
    CHECK_FALSE(intersects(Rat(0), Rat(11, 10), circle));
    CHECK(intersects(Rat(0), Rat(13), circle)); // wrap-around touch
    Domain line = Domain::line(Rat(5));
    CHECK(intersects(Rat(0), Rat(0), line));
    CHECK(intersects(Rat(2), Rat(3), line));
    CHECK_FALSE(intersects(Rat(2), Rat(31, 10), line));
}

TEST_CASE("derived_graph") {
    Domain line = Domain::line(Rat(3));
    Representation rep;
    rep.starts = {{"a", Rat(0)}, {"b", Rat(1)}, {"c", Rat(2)}};
    Graph g = derived_graph(rep, line, {"a", "b", "c"});
    CHECK(g.has_edge("a", "b"));
    CHECK(g.has_edge("b", "c"));
    CHECK_FALSE(g.has_edge("a", "c")); // |0 - 2| = 2 > 1

    Representation single;
    single.starts = {{"a", Rat(0)}};
    CHECK(derived_graph(single, line, {"a"}).edges().empty());

    Representation coincident;
    coincident.starts = {{"a", Rat(0)}, {"b", Rat(0)}};
    CHECK(derived_graph(coincident, Domain::circle(Rat(14)), {"a", "b"}).has_edge("a", "b"));
}

TEST_CASE("validate_rep") {
    Domain line2 = Domain::line(Rat(2));
    Graph p2({"a", "b"});
    p2.add_edge("a", "b");
    Representation good;
    good.starts = {{"a", Rat(0)}, {"b", Rat(1, 2)}};
    CHECK(validate_rep(p2, good, line2).ok);

    Representation far;
    far.starts = {{"a", Rat(0)}, {"b", Rat(3, 2)}};
    auto report = validate_rep(p2, far, Domain::line(Rat(3)));
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].kind == MismatchKind::MissingEdge);
    CHECK(report.mismatches[0].distance == Rat(3, 2));

    Graph no_edge({"a", "b"});
    Representation touching;
    touching.starts = {{"a", Rat(0)}, {"b", Rat(1)}};
    auto report2 = validate_rep(no_edge, touching, Domain::circle(Rat(14)));
    REQUIRE_FALSE(report2.ok);
    CHECK(report2.mismatches[0].kind == MismatchKind::ExtraEdge);

    Representation missing;
    missing.starts = {{"a", Rat(0)}};
    CHECK_FALSE(validate_rep(p2, missing, line2).ok);
    CHECK_FALSE(validate_rep(p2, missing, line2).coverage_errors.empty());

    Representation out_of_range;
    out_of_range.starts = {{"a", Rat(0)}, {"b", Rat(3, 2)}};
    CHECK_FALSE(validate_rep(p2, out_of_range, line2).ok);
}

TEST_CASE("validate_partial") {
    Graph g({"a", "b", "c"});
    g.add_edge("a", "b");
    Domain circle = Domain::circle(Rat(14));

    PartialRep empty;
    CHECK(validate_partial(g, empty, circle).ok);

    PartialRep adj_far;
    adj_far.fixed = {{"a", Rat(0)}, {"b", Rat(2)}};
    CHECK_FALSE(validate_partial(g, adj_far, circle).ok);

    PartialRep fine;
    fine.fixed = {{"a", Rat(0)}, {"c", Rat(5)}};
    CHECK(validate_partial(g, fine, circle).ok);

    PartialRep unknown;
    unknown.fixed = {{"z", Rat(0)}};
    CHECK_FALSE(validate_partial(g, unknown, circle).ok);
}

TEST_CASE("extends") {
    PartialRep partial;
    partial.fixed = {{"a", Rat(0)}};
    Representation exact;
    exact.starts = {{"a", Rat(0)}, {"b", Rat(5)}};
    CHECK(extends(exact, partial));
    Representation close;
    close.starts = {{"a", Rat(1, 1000000)}, {"b", Rat(5)}};
    CHECK_FALSE(extends(close, partial));
    CHECK(extends(exact, PartialRep{}));
}

TEST_CASE("round trip, rotation and reflection invariance (randomized)") {
    std::mt19937 rng(99);
    Rat C(14);
    Domain circle = Domain::circle(C);
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    for (int trial = 0; trial < 200; ++trial) {
        Representation rep;
        for (const auto& v : names) rep.starts[v] = random_start(rng, C);
        Graph g = derived_graph(rep, circle, names);
        REQUIRE(validate_rep(g, rep, circle).ok);

        Rat delta = random_start(rng, C);
        Representation rotated, reflected;
        for (const auto& [v, s] : rep.starts) {
            rotated.starts[v] = rat_mod(s + delta, C);
            reflected.starts[v] = rat_mod(C - s - Rat(1), C);
        }
        REQUIRE(derived_graph(rotated, circle, names) == g);
        REQUIRE(derived_graph(reflected, circle, names) == g);
    }
    // line reflection
    Domain line = Domain::line(Rat(4));
    for (int trial = 0; trial < 200; ++trial) {
        Representation rep;
        for (const auto& v : names) rep.starts[v] = random_start(rng, Rat(13, 4));
        Graph g = derived_graph(rep, line, names);
        Representation reflected;
        for (const auto& [v, s] : rep.starts) reflected.starts[v] = Rat(3) - s;
        REQUIRE(derived_graph(reflected, line, names) == g);
    }
}
