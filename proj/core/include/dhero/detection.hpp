#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dhero/constructions.hpp"
#include "dhero/digraph.hpp"

namespace dhero {

// ---------------------------------------------------------------------------
// Induced subgraph isomorphism

/// witness[i] is the host vertex playing pattern vertex i.
using VertexMap = std::vector<Vertex>;

/// Lexicographically least injective map realising `pattern` as an induced
/// subdigraph of `host` (arc iff arc), or nullopt.
std::optional<VertexMap> find_induced(const Digraph& pattern, const Digraph& host);

/// Calls `visit` on every induced copy, in lexicographic order of the map.
/// Stops early when `visit` returns false. Returns the number of maps visited.
std::size_t for_each_induced(const Digraph& pattern, const Digraph& host,
                             const std::function<bool(std::span<const Vertex>)>& visit);

bool is_free_of(const Digraph& host, const Digraph& pattern);

// ---------------------------------------------------------------------------
// Class membership

/// The unique partition into stable parts with all cross pairs adjacent,
/// ordered by smallest member; nullopt iff g contains an induced K_1 + TT_2.
std::optional<MultipartiteStructure> is_complete_multipartite(const Digraph& g);

/// True iff `parts` covers V(g) disjointly, every part is stable and every
/// cross-part pair is adjacent.
bool is_multipartite_structure(const Digraph& g, const MultipartiteStructure& parts);

/// No induced directed path on three vertices.
bool is_quasi_transitive(const Digraph& g);

// ---------------------------------------------------------------------------
// Feedback arc sets made of disjoint paths

/// True iff the arcs form vertex-disjoint directed paths: every vertex has
/// in- and out-degree at most 1 in `arcs` and they contain no cycle.
bool is_disjoint_paths(int n, std::span<const Arc> arcs);

/// A feedback arc set of g whose arcs form vertex-disjoint directed paths,
/// smallest first, or nullopt if none exists. Exhaustive over arc subsets;
/// throws ResourceError above Limits::fas_arcs.
std::optional<std::vector<Arc>> fas_disjoint_paths(const Digraph& g);

/// `t` must induce a tournament in D_s (ContractViolation otherwise). True iff
/// the forward arcs inside t form disjoint directed paths and removing them
/// leaves an acyclic digraph.
bool check_subtournament_fas(const Digraph& ds, const DsLayout& layout, std::span<const Vertex> t);

// ---------------------------------------------------------------------------
// Ordered patterns

/// Lexicographically least i1<i2<i3<i4<i5 with edges x_i1x_i3, x_i3x_i5 and
/// x_i2x_i4 all present, or nullopt if the order is non-interlaced.
std::optional<std::array<Vertex, 5>> non_interlaced_check(const OrderedGraph& g);

/// Flatness of the part order: for every vertex, the tails of its backward
/// in-arcs lie in one part and the heads of its backward out-arcs lie in one
/// part. Throws ContractViolation if `parts` is not a complete multipartite
/// structure of g.
bool flat_check(const Digraph& g, const MultipartiteStructure& parts);

/// Pattern vertices of delta(tt(2), tt(2)) in the order v1..v5 of the
/// canonical drawing: v1 has in-degree 1, v5 out-degree 1, backward arcs are
/// v3v1, v5v3, v4v2.
inline constexpr std::array<int, 5> kDelta122Roles{1, 3, 0, 2, 4};

/// `witness` maps delta(tt(2), tt(2)) into g. True iff its images satisfy
/// v1 < v2 < v3 < v4 < v5 in the part order. Throws PreconditionError if the
/// order is not flat and ContractViolation if the witness is not an induced
/// copy.
bool lemma41_order_check(const Digraph& g, const MultipartiteStructure& parts, std::span<const Vertex> witness);

// ---------------------------------------------------------------------------
// Jewels and clusters

/// H-jewel-chain of the given length: disjoint vertex sets J_1..J_n, each
/// inducing H => H, with J_i => J_{i+1} and no arc from J_j back to J_i for
/// i < j. Throws ResourceError above Limits::jewel_host_vertices.
std::optional<std::vector<std::vector<Vertex>>> find_jewel_chain(const Digraph& g, const Digraph& h, int length);

struct ClusterWitness {
    int t = 0;
    std::vector<Vertex> vertices;
};

/// f(t) of the cluster definition as a machine integer; nullopt on overflow.
std::optional<std::uint64_t> cluster_size_bound(int t);

/// Smallest (then lexicographically least) vertex set K with dichromatic
/// number >= t and |K| <= f(t). Throws ResourceError if the subset search
/// would exceed Limits::cluster_vertices.
std::optional<ClusterWitness> find_t_cluster(const Digraph& g, int t);

/// C_uv = v+ ∩ u-, the vertices closing a directed triangle with the arc uv.
VertexSet triangle_neighborhood(const Digraph& g, Vertex u, Vertex v);

/// uv is heavy iff C_uv contains a (t-1)-cluster. Requires t >= 2 and uv an arc.
bool is_heavy_arc(const Digraph& g, Vertex u, Vertex v, int t);

}  // namespace dhero
