#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dhero/constructions.hpp"
#include "dhero/digraph.hpp"

namespace dhero {

// ---------------------------------------------------------------------------
// Exact solvers
//
// Branch-and-bound over a fixed vertex order (high degree first, then most
// connections to already placed vertices). Colours are opened in first-use
// order. A vertex may join a dicolouring class only if no path inside the
// class leads from one of its out-neighbours back to one of its in-neighbours.
// Both solvers refuse hosts above Limits::solver_vertices and searches above
// Limits::solver_nodes with a ResourceError carrying the greedy upper bound.

struct DichromaticResult {
    int k = 0;
    Dicoloring coloring;
};

/// A k-dicolouring of g, or nullopt if none exists.
std::optional<Dicoloring> find_dicoloring(const Digraph& g, int k);
DichromaticResult dichromatic_number(const Digraph& g);
/// First-fit dicolouring in index order.
Dicoloring greedy_dicoloring(const Digraph& g);

struct ChromaticResult {
    int k = 0;
    GraphColoring coloring;
};

std::optional<GraphColoring> find_coloring(const UndirectedGraph& g, int k);
ChromaticResult chromatic_number(const UndirectedGraph& g);

// ---------------------------------------------------------------------------
// Set-valued colourings. Each distinct colour value is a sorted list; the
// palette lists them in lexicographic order and `coloring` indexes into it.

struct SetColoring {
    GraphColoring coloring;
    std::vector<std::vector<int>> palette;
};

/// Colour each vertex with the set of colours on its entering arcs. `lc` must
/// be a proper colouring of line_graph(g) (ContractViolation otherwise); the
/// result is proper on underlying(g) and uses at most 2^lc.k colours.
SetColoring lemma21_transform(const Digraph& g, const GraphColoring& lc);

struct NestedSetColoring {
    GraphColoring coloring;
    std::vector<std::vector<std::vector<int>>> palette;
};

/// Colour x_i with the set of per-row colour sets of part V_i of D(G).
/// `dc` must be a valid dicolouring of dg.graph with dc.k == r in which every
/// copy of R sees all r colours (PreconditionError otherwise).
NestedSetColoring extract_graph_coloring(const OrderedGraph& g, const DgDigraph& dg, const Dicoloring& dc, int r);

// ---------------------------------------------------------------------------
// Layered colouring

struct LayeredInstance {
    Digraph host;
    std::vector<std::vector<Vertex>> layers;
    int d = 0;
};

/// End indices s_1 < ... < s_t = n of the greedy blocks: s_k is the largest
/// j with the union of layers s_{k-1}+1..j still d-dicolourable.
std::vector<int> lemma37_blocks(const LayeredInstance& inst);

/// A dicolouring with k = 2d: odd blocks use colours 0..d-1, even blocks
/// d..2d-1, each block dicoloured exactly. Throws PreconditionError naming
/// the violated hypothesis when some layer is not d-dicolourable or a
/// backward arc from X_j to X_i spans a union X_{i+1..j} that is not.
Dicoloring lemma37_color(const LayeredInstance& inst);

struct Lemma38Report {
    bool multipartite = false;        ///< G is an oriented complete multipartite graph
    bool delta11h_free = true;        ///< only checked when H is supplied
    bool layers_bounded = false;      ///< chi(X_i) <= r for every i
    bool out_to_earlier = false;      ///< chi(v+ ∩ (X_1..X_{i-1})) <= r
    bool in_from_later = false;       ///< chi(v- ∩ (X_{i+1}..X_n)) <= r

    bool holds() const {
        return multipartite && delta11h_free && layers_bounded && out_to_earlier && in_from_later;
    }
};

/// Checks the computable hypotheses of the 8r+4 layered bound. The premise
/// that every H-free oriented complete multipartite graph has dichromatic
/// number <= r is a statement about a class and is taken as given.
Lemma38Report lemma38_hypotheses(const Digraph& g, const std::vector<std::vector<Vertex>>& layers, int r,
                                 const Digraph* h = nullptr);

// ---------------------------------------------------------------------------
// Quasi-transitive digraphs

using TournamentOracle = std::function<Dicoloring(const Digraph&)>;

/// Exact dicolouring via dichromatic_number.
Dicoloring exact_tournament_oracle(const Digraph& t);

/// Dicolour a quasi-transitive H-free digraph by recursive substitution
/// decomposition: tournaments go to the oracle, acyclic module partitions are
/// coloured piecewise and merged into the largest palette. Colours in the
/// result are dense (k = number used). PreconditionError if g is not
/// quasi-transitive or contains H; InternalError if no decomposition exists.
Dicoloring qt_color(const Digraph& g, const Digraph& h, const TournamentOracle& oracle = exact_tournament_oracle);

/// One step of the decomposition used by qt_color: a module X of g and a
/// partition of X into modules with acyclic quotient (at least two parts).
struct AcyclicModulePartition {
    std::vector<Vertex> module;
    std::vector<std::vector<Vertex>> parts;
};

/// Tries X = V(g) first, then proper modules by increasing size. The parts
/// are the connected components of the underlying graph of g[X] when there
/// are at least two, otherwise its strong components when those are modules.
/// nullopt for tournaments and when no module splits this way.
std::optional<AcyclicModulePartition> find_acyclic_module_partition(const Digraph& g);

/// Every vertex outside x sees all of x the same way (out, in or neither).
bool is_module(const Digraph& g, const VertexSet& x);

/// Membership in the closure of acyclic digraphs and tournaments under
/// substitution, by brute force over modules. ResourceError above
/// Limits::qt_vertices.
bool in_substitution_closure(const Digraph& g);

}  // namespace dhero
