#include <doctest.h>

#include <cmath>
#include <string>

#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/detection.hpp"
#include "dhero/errors.hpp"
#include "dhero/generators.hpp"
#include "dhero/limits.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dhero;
using testing::ordered;
using testing::singletons;

namespace {

int ceil_log2(int x) {
    int r = 0;
    while ((1 << r) < x) ++r;
    return r;
}

std::vector<std::vector<Vertex>> singleton_layers(int n) { return singletons(n).parts; }

struct LimitsGuard {
    Limits saved = limits();
    ~LimitsGuard() { set_limits(saved); }
};

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("dichromatic number examples") {
    for (int n = 1; n <= 8; ++n) CHECK(dichromatic_number(tt(n)).k == 1);
    const auto tri = dichromatic_number(c3());
    CHECK(tri.k == 2);
    CHECK(validate_dicoloring(c3(), tri.coloring));
    CHECK(dichromatic_number(build_ds(4).graph).k == 1);
    CHECK(dichromatic_number(Digraph(0)).k == 0);
    CHECK(!find_dicoloring(c3(), 1).has_value());
    CHECK(find_dicoloring(c3(), 2).has_value());
}

TEST_CASE("dichromatic number matches partition brute force") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oriented_graph_classes(n)) {
            const auto r = dichromatic_number(g);
            CHECK(r.k == oracle::dichromatic(g));
            CHECK(oracle::valid_dicolouring(g, r.coloring.colors, r.k));
            CHECK(dichromatic_number(reverse(g)).k == r.k);
        }
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_digraph(rng.range(6, 7), rng);
        const auto r = dichromatic_number(g);
        CHECK(r.k == oracle::dichromatic(g));
        CHECK(dichromatic_number(reverse(g)).k == r.k);
    }
}

TEST_CASE("dichromatic number of larger tournaments") {
    // The quadratic-residue tournament on 7 vertices needs three colours.
    const std::vector<int> qr7{1, 2, 4};
    CHECK(dichromatic_number(circulant(7, qr7)).k == 3);
    const std::vector<int> r5{1, 2};
    CHECK(dichromatic_number(circulant(5, r5)).k == 2);
    const std::vector<int> qr11{1, 3, 4, 5, 9};
    const auto p11 = circulant(11, qr11);
    const auto r11 = dichromatic_number(p11);
    CHECK(validate_dicoloring(p11, r11.coloring));
    CHECK(!find_dicoloring(p11, r11.k - 1).has_value());
}

TEST_CASE("resource guard reports the greedy bound") {
    LimitsGuard guard;
    Limits l = limits();
    l.solver_vertices = 4;
    set_limits(l);
    // Greedy needs three colours here, so proving optimality requires the search.
    const std::vector<int> qr7{1, 2, 4};
    try {
        dichromatic_number(circulant(7, qr7));
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        REQUIRE(e.upper_bound().has_value());
        CHECK(*e.upper_bound() >= 3);
    }
    // Acyclic inputs never need the search.
    CHECK(dichromatic_number(tt(20)).k == 1);
}

TEST_CASE("chromatic number") {
    const std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {0, 2}};
    CHECK(chromatic_number(UndirectedGraph::from_edges(3, tri)).k == 3);
    CHECK(chromatic_number(UndirectedGraph(4)).k == 1);
    const auto llt5 = line_graph(line_digraph(tt(5)));
    CHECK(llt5.size() == 10);
    const auto r = chromatic_number(llt5);
    CHECK(r.k == oracle::chromatic(llt5));
    CHECK(validate_coloring(llt5, r.coloring));

    Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = underlying(random_digraph(rng.range(1, 8), rng));
        CHECK(chromatic_number(g).k == oracle::chromatic(g));
    }
}

TEST_CASE("arc-colouring transform") {
    const auto tri = c3();
    const auto sc = lemma21_transform(tri, {3, {0, 1, 2}});
    CHECK(validate_coloring(underlying(tri), sc.coloring));
    CHECK(sc.coloring.k == 3);
    for (const auto& p : sc.palette) CHECK(p.size() == 1);

    const auto t2 = lemma21_transform(tt(2), {1, {0}});
    CHECK(t2.palette == std::vector<std::vector<int>>{{}, {0}});
    CHECK(t2.coloring.colors == std::vector<int>{0, 1});

    CHECK_THROWS_AS(lemma21_transform(tri, {1, {0, 0, 0}}), ContractViolation);
    CHECK_THROWS_AS(lemma21_transform(tri, {3, {0, 1}}), ContractViolation);

    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_digraph(rng.range(1, 6), rng);
        const auto lc = chromatic_number(line_graph(g));
        const auto chi = chromatic_number(underlying(g)).k;
        CHECK(lc.k >= ceil_log2(chi));
        const auto out = lemma21_transform(g, lc.coloring);
        CHECK(validate_coloring(underlying(g), out.coloring));
        CHECK(out.coloring.k <= (1 << lc.k));
    }
}

TEST_CASE("layered colouring") {
    for (int n = 1; n <= 6; ++n) {
        const LayeredInstance inst{tt(n), singleton_layers(n), 1};
        const auto c = lemma37_color(inst);
        CHECK(validate_dicoloring(inst.host, c));
        CHECK(colors_used(c.colors) <= 2);
        CHECK(c.k == 2);
    }
    const LayeredInstance tri{c3(), {{0, 1, 2}}, 2};
    const auto c = lemma37_color(tri);
    CHECK(validate_dicoloring(c3(), c));
    CHECK(c.k <= 4);

    const LayeredInstance too_dense{c3(), {{0, 1, 2}}, 1};
    try {
        lemma37_color(too_dense);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("first hypothesis") != std::string::npos);
    }
    // Backward arc 2->0 spans layers {1},{2}, which is acyclic: fine for d = 1.
    CHECK_NOTHROW(lemma37_color({c3(), singleton_layers(3), 1}));
    // Backward arc over a span containing a triangle breaks d = 1.
    const auto g = compose_arrow(k1(), c3());
    const auto back = Digraph::from_arcs(4, [&] {
        auto a = g.arcs();
        a.erase(std::remove(a.begin(), a.end(), Arc{0, 3}), a.end());
        a.push_back({3, 0});
        return a;
    }());
    const LayeredInstance span_bad{back, {{0}, {1}, {2, 3}}, 1};
    try {
        lemma37_color(span_bad);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("second hypothesis") != std::string::npos);
    }
    const LayeredInstance bad_partition{c3(), {{0, 1}}, 1};
    CHECK_THROWS(lemma37_color(bad_partition));

    Rng rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_layered_instance(8, 2, rng);
        const auto col = lemma37_color(inst);
        CHECK(oracle::valid_dicolouring(inst.host, col.colors, col.k));
        CHECK(col.k <= 4);
        const auto blocks = lemma37_blocks(inst);
        REQUIRE(!blocks.empty());
        CHECK(blocks.back() == static_cast<int>(inst.layers.size()));
    }
}

TEST_CASE("layered bound hypotheses") {
    const auto tri = c3();
    CHECK(lemma38_hypotheses(tri, {{0, 1, 2}}, 2).holds());
    CHECK(!lemma38_hypotheses(tri, {{0, 1, 2}}, 1).layers_bounded);

    const auto d4 = build_ds(4);
    const auto rep = lemma38_hypotheses(d4.graph, d4.parts.parts, 1);
    // D_4 is acyclic, so every clause holds with r = 1.
    CHECK(rep.multipartite);
    CHECK(rep.layers_bounded);
    CHECK(rep.out_to_earlier);
    CHECK(rep.in_from_later);
    CHECK(rep.holds());

    const auto h = c3();
    CHECK(!lemma38_hypotheses(delta(k1(), c3()), singleton_layers(5), 2, &h).delta11h_free);
    CHECK(!lemma38_hypotheses(disjoint_union(k1(), tt(2)), singleton_layers(3), 1).multipartite);
}

TEST_CASE("quasi-transitive colouring") {
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const auto dag = random_transitive_dag(rng.range(1, 8), rng);
        const auto c = qt_color(dag, c3());
        CHECK(c.k == 1);
    }
    Digraph blown = c3();
    for (int i = 0; i < 3; ++i) blown = substitute({blown, 0, tt(2)});
    REQUIRE(blown.size() == 6);
    // Every vertex of the triangle becomes a TT2, so TT4 appears but TT5 cannot.
    CHECK(!is_free_of(blown, tt(4)));
    REQUIRE(is_free_of(blown, tt(5)));
    const auto c = qt_color(blown, tt(5));
    CHECK(validate_dicoloring(blown, c));
    CHECK(c.k >= 2);
    CHECK(dichromatic_number(blown).k == 2);

    CHECK_THROWS_AS(qt_color(directed_path(3), c3()), PreconditionError);
    CHECK_THROWS_AS(qt_color(c3(), c3()), PreconditionError);

    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_qt_instance(10, rng);
        REQUIRE(is_quasi_transitive(g));
        CHECK(in_substitution_closure(g));
        const auto h = rng.coin() ? tt(3) : c3();
        if (!is_free_of(g, h)) continue;
        const auto col = qt_color(g, h);
        CHECK(validate_dicoloring(g, col));
        CHECK(col.k >= dichromatic_number(g).k);
        if (h == c3()) CHECK(col.k == 1);
        if (h == tt(3)) CHECK(col.k <= 2);
    }
}

TEST_CASE("modules and substitution closure") {
    const auto g = substitute({c3(), 0, tt(2)});
    CHECK(is_module(g, to_set(4, std::vector<Vertex>{2, 3})));
    CHECK(!is_module(g, to_set(4, std::vector<Vertex>{0, 2})));
    CHECK(in_substitution_closure(g));
    // Acyclic pieces are allowed, so P3 belongs.
    CHECK(in_substitution_closure(directed_path(3)));
    // A triangle with a pendant arc is prime and neither acyclic nor a tournament.
    const auto pendant = Digraph::from_arcs(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(!in_substitution_closure(pendant));
    const auto split = find_acyclic_module_partition(disjoint_union(c3(), c3()));
    REQUIRE(split.has_value());
    CHECK(split->parts.size() == 2);
    CHECK(!find_acyclic_module_partition(c3()).has_value());
}

TEST_CASE("graph colouring extracted from D(G)") {
    const auto edge = ordered(2, {{0, 1}});
    const auto dg = build_dg(edge, c3(), singletons(3));
    const auto dc = find_dicoloring(dg.graph, 2);
    REQUIRE(dc.has_value());
    const auto nc = extract_graph_coloring(edge, dg, *dc, 2);
    CHECK(validate_coloring(edge.graph, nc.coloring));
    CHECK(nc.coloring.k <= 16);

    const Dicoloring three{3, std::vector<int>(static_cast<std::size_t>(dg.graph.size()), 0)};
    CHECK_THROWS_AS(extract_graph_coloring(edge, dg, three, 2), PreconditionError);

    const OrderedGraph empty{UndirectedGraph(3)};
    const auto dg0 = build_dg(empty, c3(), singletons(3));
    const auto dc0 = find_dicoloring(dg0.graph, 2);
    REQUIRE(dc0.has_value());
    CHECK(validate_coloring(empty.graph, extract_graph_coloring(empty, dg0, *dc0, 2).coloring));
}

}  // TEST_SUITE
