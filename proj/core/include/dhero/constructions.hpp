#pragma once

#include <compare>
#include <span>
#include <vector>

#include "dhero/digraph.hpp"

namespace dhero {

// ---------------------------------------------------------------------------
// Small families

Digraph k1();
Digraph edgeless(int n);
/// Transitive tournament TT_n: arcs (i, j) for all i < j.
Digraph tt(int n);
/// Directed triangle 0->1->2->0.
Digraph c3();
/// Directed path 0->1->...->n-1.
Digraph directed_path(int n);
/// Circulant tournament on Z_n: i -> i+d (mod n) for every d in offsets.
/// n = 5, offsets {1,2} gives the rotational tournament R_5.
Digraph circulant(int n, std::span<const int> offsets);

// ---------------------------------------------------------------------------
// Compositions. Vertex layouts are fixed: the first operand keeps its indices,
// the second operand is shifted by |V(first)|.

/// g1 => g2: disjoint union plus every arc from g1 to g2.
Digraph compose_arrow(const Digraph& g1, const Digraph& g2);

/// Delta(1, h1, h2). Vertex 0 is the apex x, then h1 at 1..|h1|, then h2.
/// Arcs x => h1 => h2 => x.
Digraph delta(const Digraph& h1, const Digraph& h2);

/// g1 + g2: no arcs between the copies.
Digraph disjoint_union(const Digraph& g1, const Digraph& g2);

// ---------------------------------------------------------------------------
// Line graphs. Vertex i of the result is arcs()[i] of the input.

/// Directed line graph: arc ab -> bc.
Digraph line_digraph(const Digraph& g);
/// Undirected line graph L(G): ab ~ cd iff b = c or d = a.
UndirectedGraph line_graph(const Digraph& g);

// ---------------------------------------------------------------------------
// D_s

/// A vertex (v_i, v_j, v_k) of D_s, 1 <= i < j < k <= s.
struct Triple {
    int i = 0;
    int j = 0;
    int k = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Index layout of D_s: vertices ordered lexicographically by (j, i, k), so
/// part V_j (all triples with middle element j) is a contiguous block.
/// Part index p holds V_{p+2}.
struct DsLayout {
    int s = 0;
    std::vector<Triple> triples;

    int vertex_count() const noexcept { return static_cast<int>(triples.size()); }
    /// -1 if t is not a valid triple for this s.
    Vertex index_of(const Triple& t) const;
    int middle(Vertex v) const { return triples.at(static_cast<std::size_t>(v)).j; }

    static DsLayout make(int s);
};

struct DsDigraph {
    Digraph graph;
    DsLayout layout;
    MultipartiteStructure parts;  ///< (V_2, ..., V_{s-1})
};

/// D_s: same-part pairs non-adjacent; for parts V_j, V_k with j < k the pair
/// is oriented j -> k iff it is an edge (v_i,v_j,v_k)(v_j,v_k,v_l) of
/// L(L(TT_s)), and k -> j otherwise. Throws RangeError for s < 3.
DsDigraph build_ds(int s);

/// Arcs of D_s going from a lower part to a higher part. These are exactly the
/// L(L(TT_s)) edges. Throws ContractViolation if d does not match the layout.
std::vector<Arc> forward_arcs(const Digraph& d, const DsLayout& layout);

// ---------------------------------------------------------------------------
// Substitution

struct SubstitutionRecipe {
    Digraph outer;
    Vertex target = 0;
    Digraph inner;
};

/// outer(target <- inner). Layout: outer's vertices other than target keep
/// their relative order at 0..|outer|-2, the inner copy follows.
Digraph substitute(const SubstitutionRecipe& r);

// ---------------------------------------------------------------------------
// D'(G) and D(G)

/// Part i of D'(G) is an n x n matrix stored row-major:
/// vertex(i, row, col) = i*n*n + row*n + col (all 0-based).
struct DPrimeLayout {
    int n = 0;

    Vertex vertex(int part, int row, int col) const { return (part * n + row) * n + col; }
    int part(Vertex v) const { return v / (n * n); }
    int row(Vertex v) const { return (v / n) % n; }
    int col(Vertex v) const { return v % n; }
};

struct DPrimeDigraph {
    Digraph graph;
    MultipartiteStructure parts;
    DPrimeLayout layout;
};

/// For each edge x_a x_b (a < b): backward arcs from every vertex of row a of
/// V_b to every vertex of column b of V_a. All other cross pairs go forward.
/// Throws RangeError for an empty graph.
DPrimeDigraph build_d_prime(const OrderedGraph& g);

/// Layout of D(G): the n^3 green vertices of D'(G) first (same indices), then
/// copies R_0..R_{n-2} of R, copy j occupying n^3 + j*|R| .. n^3 + (j+1)*|R| - 1.
/// Copy j sits between green parts j and j+1 in the part order.
struct DgLayout {
    DPrimeLayout green;
    int copy_size = 0;

    int copies() const { return green.n - 1; }
    int green_count() const { return green.n * green.n * green.n; }
    Vertex copy_vertex(int copy, Vertex r) const { return green_count() + copy * copy_size + r; }
    bool is_green(Vertex v) const { return v < green_count(); }
    /// -1 for green vertices.
    int copy_of(Vertex v) const { return is_green(v) ? -1 : (v - green_count()) / copy_size; }
};

struct DgDigraph {
    Digraph graph;
    MultipartiteStructure parts;  ///< V_1, parts of R_1, V_2, ..., V_n (flat order)
    DgLayout layout;
};

/// D(G) from D'(G) and a flat-ordered oriented complete multipartite R:
/// green parts i <= j  =>  R_j,  R_j  =>  green parts k >= j+1,
/// R_j  =>  R_i for i > j. Throws ContractViolation if r_parts is not a flat
/// complete multipartite structure of r.
DgDigraph build_dg(const OrderedGraph& g, const Digraph& r, const MultipartiteStructure& r_parts);

}  // namespace dhero
