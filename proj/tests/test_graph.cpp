#include <catch2/catch_amalgamated.hpp>

#include "hz/edgelist.hpp"
#include "hz/families.hpp"
#include "hz/graph.hpp"
#include "oracles.hpp"

using hz::Graph;

namespace {

Graph triangle() { return hz::new_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

} // namespace

TEST_CASE("construction accepts exactly the given simple edges") {
    const Graph c3 = triangle();
    REQUIRE(c3.vertex_count() == 3);
    REQUIRE(c3.edge_count() == 3);
    for (int u = 0; u < 3; ++u) REQUIRE(c3.degree(u) == 2);

    const Graph p1 = hz::new_graph(1, {});
    REQUIRE(p1.vertex_count() == 1);
    REQUIRE(p1.edge_count() == 0);
    REQUIRE(p1.degree(0) == 0);

    // Duplicates (in either orientation) collapse silently.
    const Graph p2 = hz::new_graph(2, {{0, 1}, {1, 0}});
    REQUIRE(p2.edge_count() == 1);
    REQUIRE(p2 == hz::new_graph(2, {{0, 1}}));
}

TEST_CASE("construction rejects bad endpoints") {
    REQUIRE_THROWS_MATCHES(hz::new_graph(3, {{0, 3}}), hz::error,
                           Catch::Matchers::Predicate<hz::error>(
                               [](const hz::error& e) { return e.code() == hz::errc::out_of_range; }));
    REQUIRE_THROWS_MATCHES(hz::new_graph(3, {{1, 1}}), hz::error,
                           Catch::Matchers::Predicate<hz::error>(
                               [](const hz::error& e) { return e.code() == hz::errc::self_loop; }));
}

TEST_CASE("degree and neighbor degree sum") {
    const Graph c6 = hz::cycle(6);
    for (int u = 0; u < 6; ++u) {
        REQUIRE(c6.degree(u) == 2);
        REQUIRE(hz::neighbor_degree_sum(c6, u) == 4);
    }
    const Graph p3 = hz::path(3);
    REQUIRE(p3.degree(1) == 2);
    REQUIRE(p3.degree(0) == 1);
    REQUIRE(hz::neighbor_degree_sum(p3, 1) == 2);
    for (int m = 3; m <= 8; ++m) REQUIRE(hz::neighbor_degree_sum(hz::path(m), 0) == 2);
    REQUIRE_THROWS_AS(c6.degree(6), hz::error);
    REQUIRE_THROWS_AS(hz::neighbor_degree_sum(c6, -1), hz::error);
}

TEST_CASE("index values on small fixed graphs") {
    const Graph c6 = hz::cycle(6);
    REQUIRE(hz::hyper_zagreb(c6) == 96);
    REQUIRE(hz::first_zagreb(c6) == 24);
    REQUIRE(hz::second_zagreb(c6) == 24);
    REQUIRE(hz::forgotten_index(c6) == 48);
    REQUIRE(hz::index_report(c6) == hz::IndexReport{24, 24, 48, 96});

    const Graph p3 = hz::path(3);
    REQUIRE(hz::index_report(p3) == hz::IndexReport{6, 4, 10, 18});

    const Graph k4 = hz::new_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE(hz::first_zagreb(k4) == 36);
    const Graph star = hz::new_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    REQUIRE(hz::second_zagreb(star) == 9);

    REQUIRE(hz::index_report(hz::path(1)) == hz::IndexReport{0, 0, 0, 0});
}

TEST_CASE("paths match the direct edge-summation oracle") {
    for (int m = 3; m <= 16; ++m) {
        const std::int64_t expect = oracle::hm(oracle::pathg(m));
        REQUIRE(expect == 16 * m - 30);
        REQUIRE(hz::hyper_zagreb(hz::path(m)) == expect);
    }
    REQUIRE(hz::hyper_zagreb(hz::path(5)) == 50);
}

TEST_CASE("index identities hold on seeded random graphs") {
    hz::SplitMix64 rng(0xA11CE5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(12));
        const std::int64_t cap = static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
        const std::int64_t extra =
            cap > 0 ? static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(cap + 1)))
                    : 0;
        const Graph g = hz::random_connected(n, extra, rng.next());

        const hz::IndexReport r = hz::index_report(g);
        REQUIRE(r.hm == r.f + 2 * r.m2);

        // Against the independent oracle.
        const oracle::RawGraph raw = oracle::raw(n, g.edges());
        REQUIRE(r.m1 == oracle::m1(raw));
        REQUIRE(r.m2 == oracle::m2(raw));
        REQUIRE(r.f == oracle::f(raw));
        REQUIRE(r.hm == oracle::hm(raw));

        // Handshake.
        std::int64_t degsum = 0;
        for (int u = 0; u < n; ++u) degsum += g.degree(u);
        REQUIRE(degsum == 2 * g.edge_count());

        // delta(u) <= (n-1) * degree(u).
        for (int u = 0; u < n; ++u)
            REQUIRE(hz::neighbor_degree_sum(g, u) <=
                    static_cast<std::int64_t>(n - 1) * g.degree(u));
    }
}

TEST_CASE("edge-list text round trip") {
    REQUIRE(hz::parse_edge_list("3 3\n0 1\n1 2\n2 0\n") == triangle());
    REQUIRE(hz::emit_edge_list(hz::path(2)) == "2 1\n0 1\n");
    REQUIRE(hz::parse_edge_list("# comment\n1 0\n") == hz::path(1));
    REQUIRE(hz::parse_edge_list("2 1\n0 1") == hz::path(2));  // no trailing newline

    hz::SplitMix64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(10));
        const std::int64_t cap = static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
        const Graph g = hz::random_connected(
            n, cap > 0 ? static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(cap + 1))) : 0,
            rng.next());
        REQUIRE(hz::parse_edge_list(hz::emit_edge_list(g)) == g);
    }
}

TEST_CASE("edge-list parse failures carry the offending line") {
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const hz::error& e) {
            return e.code();
        }
        return hz::errc::internal_identity_violation;
    };
    REQUIRE(code_of([] { hz::parse_edge_list(""); }) == hz::errc::parse_error);
    REQUIRE(code_of([] { hz::parse_edge_list("3 1\n0 x\n"); }) == hz::errc::parse_error);
    REQUIRE(code_of([] { hz::parse_edge_list("3 2\n0 1\n"); }) == hz::errc::parse_error);
    REQUIRE(code_of([] { hz::parse_edge_list("3 1\n0 1\n1 2\n"); }) == hz::errc::parse_error);
    REQUIRE(code_of([] { hz::parse_edge_list("3 1\n0 5\n"); }) == hz::errc::out_of_range);
    REQUIRE(code_of([] { hz::parse_edge_list("3 1\n2 2\n"); }) == hz::errc::self_loop);

    try {
        hz::parse_edge_list("# leading comment\n3 3\n0 1\nbogus line\n");
        FAIL("expected parse_error");
    } catch (const hz::error& e) {
        REQUIRE(e.code() == hz::errc::parse_error);
        REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 4"));
    }
}

TEST_CASE("connectivity predicate") {
    REQUIRE(hz::is_connected(hz::path(1)));
    REQUIRE(hz::is_connected(hz::cycle(5)));
    REQUIRE_FALSE(hz::is_connected(hz::new_graph(4, {{0, 1}, {2, 3}})));
    REQUIRE_FALSE(hz::is_connected(hz::new_graph(2, {})));
}

TEST_CASE("closed-form arithmetic overflows loudly") {
    // Summary scalars near the 64-bit edge: d * hm overflows.
    hz::ComponentSummary s;
    s.hm = std::int64_t{1} << 62;
    s.deg_v = 2;
    s.delta_v = 4;
    REQUIRE_THROWS_MATCHES(hz::hm_b1_uniform(s, 4), hz::error,
                           Catch::Matchers::Predicate<hz::error>(
                               [](const hz::error& e) { return e.code() == hz::errc::overflow; }));
}
