#include "dhero/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "dhero/errors.hpp"

namespace dhero {

namespace {

std::string vertex_msg(Vertex v, int n) {
    return "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n);
}

}  // namespace

Digraph::Digraph(int n) {
    if (n < 0) throw RangeError("negative vertex count");
    const auto sz = static_cast<std::size_t>(n);
    out_.assign(sz, VertexSet(sz));
    in_.assign(sz, VertexSet(sz));
}

std::size_t Digraph::checked(Vertex v) const {
    if (v < 0 || v >= size()) throw RangeError(vertex_msg(v, size()));
    return static_cast<std::size_t>(v);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    return out_[checked(u)].test(checked(v));
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    DigraphBuilder b(n);
    for (const Arc& a : arcs) b.add_arc(a.tail, a.head);
    return std::move(b).build();
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int u = 0; u < size(); ++u) {
        const auto& row = out_[static_cast<std::size_t>(u)];
        for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v))
            result.push_back({u, static_cast<Vertex>(v)});
    }
    return result;
}

DigraphBuilder::DigraphBuilder(int n) : g_(n) {}

DigraphBuilder& DigraphBuilder::add_arc(Vertex u, Vertex v) {
    const auto su = g_.checked(u);
    const auto sv = g_.checked(v);
    if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
    if (g_.out_[sv].test(su))
        throw ContractViolation("digon between " + std::to_string(u) + " and " + std::to_string(v));
    if (!g_.out_[su].test(sv)) {
        g_.out_[su].set(sv);
        g_.in_[sv].set(su);
        ++g_.arc_count_;
    }
    return *this;
}

Digraph DigraphBuilder::build() && { return std::move(g_); }

UndirectedGraph::UndirectedGraph(int n) {
    if (n < 0) throw RangeError("negative vertex count");
    const auto sz = static_cast<std::size_t>(n);
    adj_.assign(sz, VertexSet(sz));
}

UndirectedGraph UndirectedGraph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    UndirectedGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void UndirectedGraph::add_edge(Vertex a, Vertex b) {
    if (a < 0 || a >= size()) throw RangeError(vertex_msg(a, size()));
    if (b < 0 || b >= size()) throw RangeError(vertex_msg(b, size()));
    if (a == b) throw ContractViolation("loop at vertex " + std::to_string(a));
    const auto sa = static_cast<std::size_t>(a);
    const auto sb = static_cast<std::size_t>(b);
    if (!adj_[sa].test(sb)) {
        adj_[sa].set(sb);
        adj_[sb].set(sa);
        ++edge_count_;
    }
}

bool UndirectedGraph::has_edge(Vertex a, Vertex b) const {
    return neighbors(a).test(static_cast<std::size_t>(b));
}

const VertexSet& UndirectedGraph::neighbors(Vertex v) const {
    if (v < 0 || v >= size()) throw RangeError(vertex_msg(v, size()));
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    result.reserve(edge_count_);
    for (int a = 0; a < size(); ++a) {
        const auto& row = adj_[static_cast<std::size_t>(a)];
        for (auto b = row.find_next(static_cast<std::size_t>(a)); b != VertexSet::npos; b = row.find_next(b))
            result.emplace_back(a, static_cast<Vertex>(b));
    }
    return result;
}

std::vector<int> MultipartiteStructure::part_of(int n) const {
    std::vector<int> result(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (Vertex v : parts[p]) {
            if (v < 0 || v >= n) throw RangeError(vertex_msg(v, n));
            result[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    return result;
}

VertexSet out_neighbors(const Digraph& g, Vertex v) { return g.out(v); }
VertexSet in_neighbors(const Digraph& g, Vertex v) { return g.in(v); }

VertexSet non_neighbors(const Digraph& g, Vertex v) {
    VertexSet s = g.out(v) | g.in(v);
    s.set(static_cast<std::size_t>(v));
    s.flip();
    return s;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
    std::vector<Vertex> result;
    result.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        result.push_back(static_cast<Vertex>(v));
    return result;
}

VertexSet to_set(int n, std::span<const Vertex> vs) {
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : vs) {
        if (v < 0 || v >= n) throw RangeError(vertex_msg(v, n));
        s.set(static_cast<std::size_t>(v));
    }
    return s;
}

Digraph reverse(const Digraph& g) {
    DigraphBuilder b(g.size());
    for (const Arc& a : g.arcs()) b.add_arc(a.head, a.tail);
    return std::move(b).build();
}

InducedSubdigraph induced(const Digraph& g, std::span<const Vertex> s) {
    std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vertex v = s[i];
        if (v < 0 || v >= g.size()) throw RangeError(vertex_msg(v, g.size()));
        if (index[static_cast<std::size_t>(v)] != -1)
            throw RangeError("vertex " + std::to_string(v) + " listed twice");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    DigraphBuilder b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& row = g.out(s[i]);
        for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
            if (index[w] >= 0) b.add_arc(static_cast<Vertex>(i), index[w]);
    }
    return {std::move(b).build(), std::vector<Vertex>(s.begin(), s.end())};
}

InducedSubdigraph induced(const Digraph& g, const VertexSet& s) {
    if (s.size() != static_cast<std::size_t>(g.size()))
        throw RangeError("vertex set universe does not match digraph");
    const auto vs = to_vector(s);
    return induced(g, std::span<const Vertex>(vs));
}

bool is_acyclic_on(const Digraph& g, const VertexSet& s) {
    // Kahn's algorithm restricted to s.
    const int n = g.size();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    std::size_t remaining = 0;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        indeg[v] = static_cast<int>((g.in(static_cast<Vertex>(v)) & s).count());
        if (indeg[v] == 0) stack.push_back(static_cast<Vertex>(v));
        ++remaining;
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        --remaining;
        const auto& row = g.out(v);
        for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
            if (s.test(w) && --indeg[w] == 0) stack.push_back(static_cast<Vertex>(w));
    }
    return remaining == 0;
}

bool is_acyclic(const Digraph& g) { return is_acyclic_on(g, g.full_set()); }

std::vector<std::vector<Vertex>> strong_components(const Digraph& g) {
    const int n = g.size();
    // Iterative Tarjan.
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> stack;
    int counter = 0, ncomp = 0;
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& row = g.out(f.v);
            auto w = f.next == 0 ? row.find_first() : row.find_next(f.next - 1);
            if (w != VertexSet::npos) {
                f.next = w + 1;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(static_cast<Vertex>(w));
                    on_stack[w] = 1;
                    call.push_back({static_cast<Vertex>(w), 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                Vertex w2;
                do {
                    w2 = stack.back();
                    stack.pop_back();
                    on_stack[w2] = 0;
                    comp[w2] = ncomp;
                } while (w2 != v);
                ++ncomp;
            }
        }
    }

    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(ncomp));
    for (Vertex v = 0; v < n; ++v) members[comp[v]].push_back(v);

    // Kahn on the condensation, smallest-member first among ready components.
    std::vector<std::set<int>> succ(static_cast<std::size_t>(ncomp));
    std::vector<int> indeg(static_cast<std::size_t>(ncomp), 0);
    for (const Arc& a : g.arcs()) {
        const int cu = comp[a.tail], cv = comp[a.head];
        if (cu != cv && succ[cu].insert(cv).second) ++indeg[cv];
    }
    using Item = std::pair<Vertex, int>;  // (smallest member, component)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (int c = 0; c < ncomp; ++c)
        if (indeg[c] == 0) ready.push({members[c].front(), c});
    std::vector<std::vector<Vertex>> result;
    result.reserve(static_cast<std::size_t>(ncomp));
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        result.push_back(members[c]);
        for (int d : succ[c])
            if (--indeg[d] == 0) ready.push({members[d].front(), d});
    }
    return result;
}

bool is_tournament_on(const Digraph& g, const VertexSet& s) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        const auto vv = static_cast<Vertex>(v);
        // every other member of s must be an in- or out-neighbour
        if (((g.out(vv) | g.in(vv)) & s).count() + 1 != s.count()) return false;
    }
    return true;
}

bool is_tournament(const Digraph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    return g.arc_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

UndirectedGraph underlying(const Digraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
    return UndirectedGraph::from_edges(g.size(), edges);
}

namespace {

template <class Coloring>
void check_total(int n, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != n)
        throw ContractViolation("colouring covers " + std::to_string(c.colors.size()) +
                                " vertices, host has " + std::to_string(n));
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.k)
            throw ContractViolation("vertex " + std::to_string(v) + " has colour " +
                                    std::to_string(c.colors[v]) + " outside 0.." +
                                    std::to_string(c.k - 1));
}

}  // namespace

bool validate_dicoloring(const Digraph& g, const Dicoloring& c) {
    check_total(g.size(), c);
    for (int color = 0; color < c.k; ++color) {
        VertexSet cls = g.empty_set();
        for (int v = 0; v < g.size(); ++v)
            if (c.colors[static_cast<std::size_t>(v)] == color) cls.set(static_cast<std::size_t>(v));
        if (!is_acyclic_on(g, cls)) return false;
    }
    return true;
}

bool validate_coloring(const UndirectedGraph& g, const GraphColoring& c) {
    check_total(g.size(), c);
    for (auto [a, b] : g.edges())
        if (c.colors[static_cast<std::size_t>(a)] == c.colors[static_cast<std::size_t>(b)]) return false;
    return true;
}

int colors_used(std::span<const int> colors) {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
}

}  // namespace dhero
