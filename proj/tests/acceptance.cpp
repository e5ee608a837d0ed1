// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dhero/bounds.hpp"
#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/detection.hpp"
#include "dhero/generators.hpp"
#include "dhero/hero.hpp"
#include "oracles.hpp"

using namespace dhero;

namespace {

// Pinned sample sizes and seeds.
constexpr std::uint64_t kSeed = 1;
constexpr int kSubtournamentSamples = 1000;
constexpr int kLineGraphSamples = 500;
constexpr int kSolverSamples = 500;
constexpr int kArrowPairs = 200;
constexpr int kFlatHosts = 1000;
constexpr int kQtInstances = 200;
constexpr int kAcyclicSamples = 500;
constexpr int kExtractMaxColours = 16;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) failure = what;
        pass = pass && ok;
    }
};

int ceil_log2(int x) {
    int r = 0;
    while ((1 << r) < x) ++r;
    return r;
}

bool bipartite(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<OrderedGraph> all_ordered_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<OrderedGraph> out;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) e.push_back(pairs[i]);
        out.push_back({UndirectedGraph::from_edges(n, e)});
    }
    return out;
}

MultipartiteStructure singletons(int n) {
    MultipartiteStructure m;
    for (int v = 0; v < n; ++v) m.parts.push_back({v});
    return m;
}

// ---------------------------------------------------------------------------

Outcome no_delta_in_ds() {
    Outcome o;
    const auto d12c3 = delta(tt(2), c3());
    const auto d123 = delta(tt(2), tt(3));
    for (int s = 4; s <= 8; ++s) {
        const auto ds = build_ds(s);
        o.require(!find_induced(d12c3, ds.graph), "Delta(1,2,C3) in D_" + std::to_string(s));
        o.require(!find_induced(d123, ds.graph), "Delta(1,2,3) in D_" + std::to_string(s));
        if (s <= 6) {
            o.require(!oracle::induced(d12c3, ds.graph), "brute force finds Delta(1,2,C3) in D_" + std::to_string(s));
            o.require(!oracle::induced(d123, ds.graph), "brute force finds Delta(1,2,3) in D_" + std::to_string(s));
        }
    }
    o.detail = "s=4..8, |V(D_8)|=56, brute-force confirmation for s<=6";
    return o;
}

Outcome subtournament_paths() {
    Outcome o;
    Rng rng(kSeed);
    int checked = 0;
    for (int s = 4; s <= 7; ++s) {
        const auto ds = build_ds(s);
        const auto fw = forward_arcs(ds.graph, ds.layout);
        for (int i = 0; i < kSubtournamentSamples; ++i) {
            const auto t = random_subtournament(ds, rng);
            o.require(check_subtournament_fas(ds.graph, ds.layout, t), "library check fails in D_" + std::to_string(s));
            const auto in_t = to_set(ds.graph.size(), t);
            std::vector<Arc> forward, rest;
            for (const auto& a : ds.graph.arcs()) {
                if (!in_t.test(static_cast<std::size_t>(a.tail)) || !in_t.test(static_cast<std::size_t>(a.head))) continue;
                const bool is_fw = std::binary_search(fw.begin(), fw.end(), a);
                (is_fw ? forward : rest).push_back(a);
            }
            o.require(oracle::disjoint_paths(ds.graph.size(), forward), "forward arcs not paths in D_" + std::to_string(s));
            o.require(oracle::acyclic(Digraph::from_arcs(ds.graph.size(), rest)), "residue cyclic in D_" + std::to_string(s));
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " subtournaments, s=4..7";
    return o;
}

Outcome line_graph_bound() {
    Outcome o;
    Rng rng(kSeed);
    for (int i = 0; i < kLineGraphSamples; ++i) {
        const auto g = random_digraph(rng.range(1, 6), rng);
        const auto lg = line_graph(g);
        const auto lc = chromatic_number(lg);
        if (lg.size() <= 10) o.require(lc.k == oracle::chromatic(lg), "chi(L(G)) differs from brute force");
        o.require(oracle::proper(lg, lc.coloring.colors), "line graph colouring improper");
        const int chi = oracle::chromatic(underlying(g));
        o.require(lc.k >= ceil_log2(chi), "chi(L(G)) < ceil(log2 chi(G))");
        const auto sc = lemma21_transform(g, lc.coloring);
        o.require(oracle::proper(underlying(g), sc.coloring.colors), "transform output improper");
        o.require(oracle::chromatic(underlying(g)) <= sc.coloring.k, "transform beats chi");
        o.require(static_cast<std::size_t>(sc.coloring.k) <= (std::size_t{1} << lc.k), "more than 2^chi(L) colours");
    }
    o.detail = std::to_string(kLineGraphSamples) + " digraphs on <=6 vertices";
    return o;
}

Outcome fas_core() {
    Outcome o;
    for (const auto& h : {delta(tt(2), c3()), delta(tt(2), tt(3))}) {
        o.require(h.arc_count() == 15, "pattern does not have 15 arcs");
        o.require(!fas_disjoint_paths(h), "library finds a path-shaped FAS");
        o.require(!oracle::survey_fas(h).path_fas_exists, "exhaustive search finds a path-shaped FAS");
    }
    auto witness_ok = [&](const Digraph& g, const std::string& name) {
        const auto f = fas_disjoint_paths(g);
        o.require(f.has_value(), "no witness for " + name);
        if (!f) return;
        o.require(oracle::disjoint_paths(g.size(), *f), "witness not paths for " + name);
        std::vector<Arc> rest;
        for (const auto& a : g.arcs())
            if (std::find(f->begin(), f->end(), a) == f->end()) rest.push_back(a);
        o.require(oracle::acyclic(Digraph::from_arcs(g.size(), rest)), "witness not a FAS for " + name);
    };
    witness_ok(c3(), "C3");
    for (int n = 1; n <= 6; ++n) witness_ok(tt(n), "TT" + std::to_string(n));
    int tournaments = 0;
    for (int n = 1; n <= 4; ++n)
        oracle::for_each_oriented(n, [&](const Digraph& g) {
            if (!is_tournament(g)) return;
            ++tournaments;
            witness_ok(g, "a labelled tournament on " + std::to_string(n) + " vertices");
        });
    o.detail = "2^15 subsets each for both patterns, " + std::to_string(tournaments) + " labelled tournaments";
    return o;
}

Outcome solver_equivalence() {
    Outcome o;
    int classes = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oriented_graph_classes(n)) {
            ++classes;
            const auto r = dichromatic_number(g);
            o.require(r.k == oracle::dichromatic(g), "mismatch on a class with " + std::to_string(n) + " vertices");
            o.require(oracle::valid_dicolouring(g, r.coloring.colors, r.k), "invalid witness");
            o.require(dichromatic_number(reverse(g)).k == r.k, "reversal changes the value");
        }
    Rng rng(kSeed);
    for (int i = 0; i < kSolverSamples; ++i) {
        const auto g = random_digraph(rng.range(6, 7), rng);
        const auto r = dichromatic_number(g);
        o.require(r.k == oracle::dichromatic(g), "mismatch on a random digraph");
        o.require(oracle::valid_dicolouring(g, r.coloring.colors, r.k), "invalid witness on a random digraph");
        o.require(dichromatic_number(reverse(g)).k == r.k, "reversal changes the value on a random digraph");
    }
    for (int i = 0; i < kArrowPairs; ++i) {
        const auto a = random_digraph(rng.range(1, 5), rng);
        const auto b = random_digraph(rng.range(1, 5), rng);
        o.require(dichromatic_number(compose_arrow(a, b)).k == std::max(oracle::dichromatic(a), oracle::dichromatic(b)),
                  "arrow composition breaks the max rule");
    }
    o.detail = std::to_string(classes) + " classes on <=5 vertices, " + std::to_string(kSolverSamples) +
               " random on 6-7, " + std::to_string(kArrowPairs) + " arrow pairs";
    return o;
}

Outcome hero_recognition() {
    Outcome o;
    using S = MultipartiteVerdict::Status;
    const std::vector<int> offs{1, 2};
    const auto r5 = circulant(5, offs);
    for (const auto& [h, name] : std::vector<std::pair<Digraph, std::string>>{
             {k1(), "K1"}, {c3(), "C3"}, {delta(tt(2), c3()), "Delta(1,2,C3)"}, {delta(c3(), tt(2)), "Delta(1,C3,2)"}}) {
        const auto d = hero_in_tournaments(h);
        o.require(d != nullptr, "tournament grammar rejects " + name);
        if (d) o.require(oracle::isomorphic(evaluate(*d), h), "derivation of " + name + " does not evaluate back");
    }
    o.require(hero_in_tournaments(r5) == nullptr, "tournament grammar accepts R5");

    auto status = [](const Digraph& h) { return hero_in_multipartite(h).status; };
    o.require(status(delta(k1(), c3())) == S::Yes, "Delta(1,1,C3) not Yes");
    o.require(status(compose_arrow(c3(), c3())) == S::Yes, "C3=>C3 not Yes");
    for (const auto& [h, name] : std::vector<std::pair<Digraph, std::string>>{{delta(tt(2), c3()), "Delta(1,2,C3)"},
                                                                             {delta(c3(), tt(2)), "Delta(1,C3,2)"},
                                                                             {delta(tt(2), tt(3)), "Delta(1,2,3)"},
                                                                             {delta(tt(3), tt(2)), "Delta(1,3,2)"}})
        o.require(status(h) == S::No, name + " not No");
    o.require(status(delta(tt(2), tt(2))) == S::DependsOnDelta122, "Delta(1,2,2) not conditional");

    int tournaments = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : tournament_classes(n)) {
            ++tournaments;
            const auto rt = reverse(t);
            o.require((hero_in_tournaments(t) == nullptr) == (hero_in_tournaments(rt) == nullptr),
                      "tournament verdict not reversal invariant");
            o.require(hero_in_multipartite(t).status == hero_in_multipartite(rt).status,
                      "multipartite verdict not reversal invariant");
        }
    o.detail = "reversal checked on " + std::to_string(tournaments) + " tournament classes";
    return o;
}

Outcome flat_role_order() {
    Outcome o;
    const auto d122 = delta(tt(2), tt(2));
    std::size_t hosts = 0, witnesses = 0;
    auto sweep = [&](const Digraph& g, const MultipartiteStructure& parts) {
        ++hosts;
        const auto part = parts.part_of(g.size());
        for_each_induced(d122, g, [&](std::span<const Vertex> m) {
            ++witnesses;
            o.require(lemma41_order_check(g, parts, m), "library reports a role-order violation");
            for (std::size_t r = 0; r + 1 < kDelta122Roles.size(); ++r) {
                const Vertex a = m[static_cast<std::size_t>(kDelta122Roles[r])];
                const Vertex b = m[static_cast<std::size_t>(kDelta122Roles[r + 1])];
                o.require(part[static_cast<std::size_t>(a)] < part[static_cast<std::size_t>(b)],
                          "roles out of order in a flat host");
            }
            return true;
        });
        return true;
    };
    for (int n = 1; n <= 6; ++n) for_each_flat_ordered_ocm(n, sweep);
    Rng rng(kSeed);
    for (int i = 0; i < kFlatHosts; ++i) {
        const auto host = random_flat_host(rng.range(5, 8), rng);
        o.require(flat_check(host.graph, host.parts), "generated host is not flat");
        sweep(host.graph, host.parts);
    }
    o.require(witnesses > 0, "no Delta(1,2,2) witnesses encountered");
    o.detail = std::to_string(hosts) + " flat hosts, " + std::to_string(witnesses) + " Delta(1,2,2) copies";
    return o;
}

Outcome dg_pipeline() {
    Outcome o;
    const auto r = c3();
    o.require(oracle::dichromatic(r) == 2, "chi(C3) != 2");
    const auto d122 = delta(tt(2), tt(2));
    int graphs = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : all_ordered_graphs(n)) {
            if (non_interlaced_check(g)) continue;
            ++graphs;
            const auto dg = build_dg(g, r, singletons(3));
            o.require(flat_check(dg.graph, dg.parts), "D(G) order not flat");
            o.require(!find_induced(d122, dg.graph), "D(G) contains Delta(1,2,2)");
            const auto dc = find_dicoloring(dg.graph, 2);
            o.require(dc.has_value(), "D(G) not 2-dicolourable");
            if (!dc) continue;
            o.require(oracle::valid_dicolouring(dg.graph, dc->colors, 2), "2-dicolouring invalid");
            const auto nc = extract_graph_coloring(g, dg, *dc, 2);
            o.require(oracle::proper(g.graph, nc.coloring.colors), "extracted colouring improper");
            o.require(nc.coloring.k <= kExtractMaxColours, "more than 16 colours");
        }
    o.detail = std::to_string(graphs) + " non-interlaced ordered graphs, R=C3";
    return o;
}

Outcome quasi_transitive() {
    Outcome o;
    std::vector<Digraph> inputs;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : oriented_graph_classes(n, is_quasi_transitive)) inputs.push_back(std::move(g));
    const std::size_t exhaustive = inputs.size();
    Rng rng(kSeed);
    for (int i = 0; i < kQtInstances; ++i) inputs.push_back(random_qt_instance(12, rng));

    int c3_free = 0, tt3_free = 0;
    for (const auto& g : inputs) {
        o.require(oracle::induced(directed_path(3), g) == std::nullopt, "input not quasi-transitive");
        const int optimum = g.size() <= 7 ? oracle::dichromatic(g) : dichromatic_number(g).k;
        if (!oracle::induced(c3(), g)) {
            ++c3_free;
            const auto c = qt_color(g, c3());
            o.require(c.k == 1, "C3-free input not 1-coloured");
            o.require(oracle::acyclic(g), "C3-free quasi-transitive input has a cycle");
            o.require(oracle::valid_dicolouring(g, c.colors, c.k), "invalid colouring for H=C3");
        }
        if (!oracle::induced(tt(3), g)) {
            ++tt3_free;
            const auto c = qt_color(g, tt(3));
            o.require(oracle::valid_dicolouring(g, c.colors, c.k), "invalid colouring for H=TT3");
            o.require(c.k <= 2, "more than 2 colours for H=TT3");
            o.require(c.k >= optimum, "beats the exact optimum");
        }
    }
    o.detail = std::to_string(exhaustive) + " classes on <=6 vertices + " + std::to_string(kQtInstances) +
               " substitution instances; " + std::to_string(c3_free) + " C3-free, " + std::to_string(tt3_free) +
               " TT3-free";
    return o;
}

Outcome forward_bipartite() {
    Outcome o;
    Rng rng(kSeed);
    for (int s = 4; s <= 6; ++s) {
        const auto ds = build_ds(s);
        const auto fw = forward_arcs(ds.graph, ds.layout);
        for (int i = 0; i < kAcyclicSamples; ++i) {
            const auto r = random_maximal_acyclic(ds.graph, rng);
            o.require(oracle::acyclic(ds.graph, r), "sampled set is not acyclic");
            const auto in_r = to_set(ds.graph.size(), r);
            std::vector<int> in_deg(static_cast<std::size_t>(ds.graph.size())), out_deg(in_deg);
            std::vector<std::pair<int, int>> edges;
            for (const auto& a : fw) {
                if (!in_r.test(static_cast<std::size_t>(a.tail)) || !in_r.test(static_cast<std::size_t>(a.head))) continue;
                ++out_deg[static_cast<std::size_t>(a.tail)];
                ++in_deg[static_cast<std::size_t>(a.head)];
                edges.emplace_back(a.tail, a.head);
            }
            for (std::size_t v = 0; v < in_deg.size(); ++v)
                o.require(in_deg[v] == 0 || out_deg[v] == 0, "forward part contains a directed path on 3 vertices");
            o.require(bipartite(ds.graph.size(), edges), "forward part not 2-colourable");
        }
    }
    o.detail = std::to_string(3 * kAcyclicSamples) + " maximal acyclic sets, s=4..6";
    return o;
}

Outcome bounds() {
    using boost::multiprecision::pow;
    Outcome o;
    o.require(bound_f(1) == 1 && bound_f(2) == 3 && bound_f(3) == 13, "f(1..3) != 1,3,13");
    BigInt f = 1;
    for (int t = 1; t <= 6; ++t) {
        if (t > 1) f = 1 + f * (1 + f);
        o.require(bound_f(t) == f, "f recurrence mismatch");
        int three = 1;
        for (int i = 0; i < t; ++i) three *= 3;
        o.require(f <= (BigInt(1) << (2 * three)), "f(t) above 2^(2*3^t)");
    }
    for (int c = 1; c <= 6; ++c)
        for (int h = 1; h <= 6; ++h) {
            const BigInt base = 2 * h * (h + 1);
            BigInt phi = pow(base, static_cast<unsigned>(2 * c + 1));
            for (int t = 1; t <= 6; ++t) {
                if (t > 1) phi = h + h * (h + 1) * (c + phi) + c * h + c;
                o.require(bound_phi(c, h, t) == phi, "phi recurrence mismatch");
                o.require(phi <= pow(base, static_cast<unsigned>(2 * c + t)), "phi above (2h(h+1))^(2c+t)");
            }
        }
    int k_checked = 0;
    for (int c = 1; c <= 4; ++c)
        for (int h = 1; h <= 6; ++h) {
            const BigInt first = pow(BigInt(2 * h * (h + 1)), static_cast<unsigned>(5 * c + 1));
            unsigned long long e = 1;
            for (int i = 0; i < 3 * c + 1; ++i) e *= 3;
            const BigInt second = (BigInt(1) << static_cast<unsigned>(2 * e + 1)) * c;
            o.require(bound_K(c, h) == std::max(first, second), "K(c,h) mismatch");
            ++k_checked;
        }
    o.detail = "c,h,t in 1..6; K(c,h) on " + std::to_string(k_checked) + " pairs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"D_s has no induced Delta(1,2,C3) or Delta(1,2,3)", no_delta_in_ds},
        {"forward arcs of subtournaments form disjoint paths", subtournament_paths},
        {"line graph bound and arc-colour transform", line_graph_bound},
        {"path-shaped feedback arc sets", fas_core},
        {"exact dichromatic solver matches brute force", solver_equivalence},
        {"hero recognizers", hero_recognition},
        {"Delta(1,2,2) role order in flat hosts", flat_role_order},
        {"D(G) pipeline", dg_pipeline},
        {"quasi-transitive colouring", quasi_transitive},
        {"forward part of acyclic subgraphs is bipartite", forward_bipartite},
        {"bound recurrences and envelopes", bounds},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    out.pass ? out.detail.c_str() : out.failure.c_str(), secs);
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
