#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dhero {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loopless, digon-free digraph on vertices 0..n-1.
///
/// Values are immutable once built; all mutation goes through DigraphBuilder.
/// Out- and in-neighbourhoods are kept as bit rows so arc membership is O(1).
class Digraph {
public:
    Digraph() = default;

    /// Edgeless digraph on n vertices.
    explicit Digraph(int n);

    /// Throws ContractViolation on loops or digons, RangeError on bad endpoints.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);

    int size() const noexcept { return static_cast<int>(out_.size()); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    const VertexSet& out(Vertex v) const { return out_[checked(v)]; }
    const VertexSet& in(Vertex v) const { return in_[checked(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out(v).count()); }
    int in_degree(Vertex v) const { return static_cast<int>(in(v).count()); }

    /// All arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const;

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(size())); }
    VertexSet full_set() const { return ~empty_set(); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.out_ == b.out_;
    }

private:
    friend class DigraphBuilder;

    std::size_t checked(Vertex v) const;

    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::size_t arc_count_ = 0;
};

class DigraphBuilder {
public:
    explicit DigraphBuilder(int n);

    int size() const noexcept { return g_.size(); }

    /// Adding an existing arc is a no-op; a loop or the reverse of an existing
    /// arc throws ContractViolation.
    DigraphBuilder& add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const { return g_.has_arc(u, v); }

    Digraph build() &&;

private:
    Digraph g_;
};

/// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n);

    /// Each pair {a, b} with a != b; duplicates collapse.
    static UndirectedGraph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int size() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool has_edge(Vertex a, Vertex b) const;
    const VertexSet& neighbors(Vertex v) const;

    /// Edges as (a, b) with a < b, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.adj_ == b.adj_;
    }

private:
    void add_edge(Vertex a, Vertex b);

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// An undirected graph whose vertex order is its index order.
struct OrderedGraph {
    UndirectedGraph graph;

    int size() const noexcept { return graph.size(); }
};

/// Vertex -> colour in 0..k-1. Every class must induce an acyclic subdigraph.
struct Dicoloring {
    int k = 0;
    std::vector<int> colors;

    friend bool operator==(const Dicoloring&, const Dicoloring&) = default;
};

/// Vertex -> colour in 0..k-1. Every class must be an independent set.
struct GraphColoring {
    int k = 0;
    std::vector<int> colors;

    friend bool operator==(const GraphColoring&, const GraphColoring&) = default;
};

/// Ordered list of disjoint vertex sets covering the host. Each part is sorted.
struct MultipartiteStructure {
    std::vector<std::vector<Vertex>> parts;

    /// part index of every vertex; -1 for uncovered vertices.
    std::vector<int> part_of(int n) const;

    friend bool operator==(const MultipartiteStructure&, const MultipartiteStructure&) = default;
};

// ---------------------------------------------------------------------------
// Structural queries

VertexSet out_neighbors(const Digraph& g, Vertex v);
VertexSet in_neighbors(const Digraph& g, Vertex v);
/// x° : vertices other than v adjacent to neither direction.
VertexSet non_neighbors(const Digraph& g, Vertex v);

std::vector<Vertex> to_vector(const VertexSet& s);
VertexSet to_set(int n, std::span<const Vertex> vs);

Digraph reverse(const Digraph& g);

struct InducedSubdigraph {
    Digraph graph;
    /// new index -> original index
    std::vector<Vertex> original;
};

/// Vertices of s keep their relative order. Throws RangeError if s is not a
/// subset of V(g).
InducedSubdigraph induced(const Digraph& g, std::span<const Vertex> s);
InducedSubdigraph induced(const Digraph& g, const VertexSet& s);

bool is_acyclic(const Digraph& g);
/// Acyclicity of g[s] without materialising the subgraph.
bool is_acyclic_on(const Digraph& g, const VertexSet& s);

/// Strongly connected components in a topological order of the condensation.
/// Ties are broken by smallest member, so the result is deterministic.
std::vector<std::vector<Vertex>> strong_components(const Digraph& g);

bool is_tournament(const Digraph& g);
bool is_tournament_on(const Digraph& g, const VertexSet& s);

UndirectedGraph underlying(const Digraph& g);

/// Throws ContractViolation on a partial colouring (wrong length or colour
/// outside 0..k-1).
bool validate_dicoloring(const Digraph& g, const Dicoloring& c);
bool validate_coloring(const UndirectedGraph& g, const GraphColoring& c);

/// Number of distinct colours actually used.
int colors_used(std::span<const int> colors);

}  // namespace dhero
