#include <doctest.h>

#include "dhero/bounds.hpp"
#include "dhero/canonical.hpp"
#include "dhero/constructions.hpp"
#include "dhero/errors.hpp"
#include "dhero/generators.hpp"
#include "dhero/hero.hpp"
#include "oracles.hpp"

using namespace dhero;

namespace {

Digraph r5() {
    const std::vector<int> offs{1, 2};
    return circulant(5, offs);
}

Digraph permuted(const Digraph& g, Rng& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.size()));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return relabel(g, perm);
}

using Status = MultipartiteVerdict::Status;

}  // namespace

TEST_SUITE("hero") {

TEST_CASE("tournament heroes") {
    const auto single = hero_in_tournaments(k1());
    REQUIRE(single);
    CHECK(single->kind == HeroDerivation::Kind::K1);
    CHECK(to_sexpr(*single) == "(k1)");

    const auto tri = hero_in_tournaments(c3());
    REQUIRE(tri);
    CHECK(tri->kind == HeroDerivation::Kind::Delta);
    CHECK(to_sexpr(*tri) == "(c3)");

    CHECK(!hero_in_tournaments(r5()));
    CHECK(hero_in_tournaments(delta(tt(2), c3())));
    CHECK(hero_in_tournaments(delta(c3(), tt(2))));
    CHECK_THROWS_AS(hero_in_tournaments(directed_path(3)), PreconditionError);
    CHECK_THROWS_AS(hero_in_tournaments(Digraph(0)), RangeError);

    const auto d = hero_in_tournaments(delta(tt(2), c3()));
    CHECK(to_sexpr(*d) == "(delta 1 2 (c3))");
}

TEST_CASE("derivations evaluate to the input") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : tournament_classes(n)) {
            const auto d = hero_in_tournaments(t);
            if (d) CHECK(oracle::isomorphic(evaluate(*d), t));
            const auto m = hero_in_multipartite(t);
            if (m.derivation) CHECK(oracle::isomorphic(evaluate(*m.derivation), t));
            if (m.status == Status::Yes) CHECK(d != nullptr);
        }
}

TEST_CASE("every tournament on at most four vertices is a tournament hero") {
    int classes = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : tournament_classes(n)) {
            ++classes;
            CHECK(hero_in_tournaments(t) != nullptr);
        }
    CHECK(classes == 1 + 1 + 2 + 4);
}

TEST_CASE("reversal invariance") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : tournament_classes(n)) {
            CHECK((hero_in_tournaments(t) == nullptr) == (hero_in_tournaments(reverse(t)) == nullptr));
            CHECK(hero_in_multipartite(t).status == hero_in_multipartite(reverse(t)).status);
        }
}

TEST_CASE("multipartite heroes") {
    const auto yes = hero_in_multipartite(delta(k1(), c3()));
    CHECK(yes.status == Status::Yes);
    CHECK(hero_in_multipartite(compose_arrow(c3(), c3())).status == Status::Yes);
    for (const auto& h : {delta(tt(2), c3()), delta(c3(), tt(2)), delta(tt(2), tt(3)), delta(tt(3), tt(2))})
        CHECK(hero_in_multipartite(h).status == Status::No);
    const auto d122 = delta(tt(2), tt(2));
    const auto tri = hero_in_multipartite(d122);
    CHECK(tri.status == Status::DependsOnDelta122);
    REQUIRE(tri.derivation);
    CHECK(to_sexpr(*tri.derivation) == "(delta122)");
    CHECK(hero_in_multipartite(d122, Delta122Mode::AssumeNotHero).status == Status::No);
    CHECK(hero_in_multipartite(compose_arrow(d122, k1())).status == Status::DependsOnDelta122);
    CHECK(hero_in_multipartite(directed_path(3)).status == Status::No);
    CHECK(to_string(Status::DependsOnDelta122) == "depends-on-delta122");

    clear_hero_memo();
    CHECK(hero_in_multipartite(d122).status == Status::DependsOnDelta122);
}

TEST_CASE("canonical forms") {
    CHECK(canonical_form(c3()) == canonical_form(reverse(c3())));
    CHECK(!(canonical_form(tt(3)) == canonical_form(c3())));
    Rng rng(88);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_digraph(rng.range(1, 9), rng);
        const auto p = permuted(g, rng);
        CHECK(canonical_form(g) == canonical_form(p));
        CHECK(canonical_digraph(g) == canonical_digraph(p));
        CHECK(isomorphic(g, p));
    }
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.range(1, 6);
        const auto a = random_digraph(n, rng), b = random_digraph(n, rng);
        CHECK(isomorphic(a, b) == oracle::isomorphic(a, b));
    }
    // vertex-transitive inputs exercise the twin and automorphism handling
    const auto ds = build_ds(7);
    CHECK(canonical_form(ds.graph) == canonical_form(permuted(ds.graph, rng)));
    const std::vector<int> qr11{1, 3, 4, 5, 9};
    CHECK(canonical_form(circulant(11, qr11)) == canonical_form(permuted(circulant(11, qr11), rng)));
    CHECK(canonical_form(edgeless(20)) == canonical_form(edgeless(20)));
}

TEST_CASE("bound recurrences") {
    CHECK(bound_f(1) == 1);
    CHECK(bound_f(2) == 3);
    CHECK(bound_f(3) == 13);
    CHECK(bound_f(4) == 183);
    for (int t = 1; t <= 6; ++t) CHECK(bound_f(t) <= f_envelope(t));
    for (int c = 1; c <= 6; ++c)
        for (int h = 1; h <= 6; ++h)
            for (int t = 1; t <= 6; ++t) CHECK(bound_phi(c, h, t) <= phi_envelope(c, h, t));
    // one step by hand
    const BigInt base = boost::multiprecision::pow(BigInt(2 * 2 * 3), 3);
    CHECK(bound_phi(1, 2, 1) == base);
    CHECK(bound_phi(1, 2, 2) == 2 + 2 * 3 * (1 + base) + 2 + 1);

    CHECK(bound_K(1, 1) == std::max(BigInt(4096), BigInt(1) << 163));
    CHECK_THROWS_AS(bound_f(0), RangeError);
    CHECK_THROWS_AS(bound_phi(1, 0, 1), RangeError);
    CHECK_THROWS_AS(bound_K(-1, 2), RangeError);
    CHECK_THROWS_AS(bound_K(40, 2), ResourceError);
}

}  // TEST_SUITE
