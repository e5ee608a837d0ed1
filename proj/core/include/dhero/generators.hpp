#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/digraph.hpp"

namespace dhero {

/// Seeded generator. Sampling is done with integer rejection on top of
/// mt19937_64 so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

/// Each pair independently non-adjacent, u->v or v->u with probability 1/3.
Digraph random_digraph(int n, Rng& rng);
Digraph random_tournament(int n, Rng& rng);

/// One random vertex from each part of a random nonempty subset of parts.
std::vector<Vertex> random_subtournament(const DsDigraph& ds, Rng& rng);

/// Greedy maximal acyclic set over a random vertex order, sorted.
std::vector<Vertex> random_maximal_acyclic(const Digraph& g, Rng& rng);

struct FlatHost {
    Digraph graph;
    MultipartiteStructure parts;
};

/// Random oriented complete multipartite digraph on n vertices with a flat
/// part order: random part sizes, then cross pairs in random order turned
/// backward with probability 1/2 whenever flatness allows it.
FlatHost random_flat_host(int n, Rng& rng);

/// Every oriented complete multipartite digraph on n labelled vertices whose
/// parts are consecutive index blocks and whose part order is flat. Stops
/// when `visit` returns false.
void for_each_flat_ordered_ocm(int n, const std::function<bool(const Digraph&, const MultipartiteStructure&)>& visit);

/// One canonical representative per isomorphism class of oriented graphs on
/// n vertices satisfying `keep`, which must be hereditary (closed under
/// induced subgraphs). An empty `keep` accepts everything.
std::vector<Digraph> oriented_graph_classes(int n, const std::function<bool(const Digraph&)>& keep = {});
std::vector<Digraph> tournament_classes(int n);

/// Quasi-transitive digraph on at most max_n vertices built by repeatedly
/// substituting tournaments, edgeless digraphs and transitive acyclic
/// digraphs for random vertices.
Digraph random_qt_instance(int max_n, Rng& rng);

/// Random digraph on at most max_n vertices split into consecutive layers of
/// 1..3 vertices, with every backward arc whose span X_{i+1..j} is not
/// d-dicolourable removed, so the layered 2d bound applies. Requires d >= 2.
LayeredInstance random_layered_instance(int max_n, int d, Rng& rng);

/// Random transitive acyclic digraph (closure of a random DAG) on n vertices.
Digraph random_transitive_dag(int n, Rng& rng);

}  // namespace dhero
