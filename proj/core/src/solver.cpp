// Exact dichromatic and chromatic number by branch-and-bound on 64-bit masks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "dhero/coloring.hpp"
#include "dhero/errors.hpp"
#include "dhero/limits.hpp"

namespace dhero {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Vertices relabelled so that search position i is vertex order[i].
struct Relabelled {
    int n = 0;
    std::vector<Mask> out, in;
    std::vector<Vertex> order;
};

std::vector<Vertex> search_order(int n, const std::vector<VertexSet>& nbrs) {
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best == -1) {
                best = v;
                continue;
            }
            const auto lv = links[static_cast<std::size_t>(v)], lb = links[static_cast<std::size_t>(best)];
            const auto dv = nbrs[static_cast<std::size_t>(v)].count(), db = nbrs[static_cast<std::size_t>(best)].count();
            if (lv > lb || (lv == lb && dv > db)) best = v;
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        const auto& row = nbrs[static_cast<std::size_t>(best)];
        for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) ++links[w];
    }
    return order;
}

void check_solver_size(int n, const char* what, int upper_bound) {
    const int ceiling = std::min(limits().solver_vertices, 64);
    if (n > ceiling)
        throw ResourceError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds ceiling " +
                                std::to_string(ceiling) + " (best known upper bound " +
                                std::to_string(upper_bound) + ")",
                            upper_bound);
}

Relabelled relabel(const Digraph& g) {
    const int n = g.size();
    std::vector<VertexSet> nbrs;
    for (Vertex v = 0; v < n; ++v) nbrs.push_back(g.out(v) | g.in(v));
    Relabelled r;
    r.n = n;
    r.order = search_order(n, nbrs);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(r.order[static_cast<std::size_t>(i)])] = i;
    r.out.assign(static_cast<std::size_t>(n), 0);
    r.in.assign(static_cast<std::size_t>(n), 0);
    for (const Arc& a : g.arcs()) {
        const int u = pos[static_cast<std::size_t>(a.tail)], v = pos[static_cast<std::size_t>(a.head)];
        r.out[static_cast<std::size_t>(u)] |= bit(v);
        r.in[static_cast<std::size_t>(v)] |= bit(u);
    }
    return r;
}

class DicolorSearch {
public:
    DicolorSearch(const Relabelled& r, int k, int upper_bound)
        : r_(r), k_(k), upper_bound_(upper_bound), cls_(static_cast<std::size_t>(k), 0),
          color_(static_cast<std::size_t>(r.n), -1) {}

    bool run() { return dfs(0, 0); }

    const std::vector<int>& colors() const { return color_; }

private:
    bool can_join(int v, Mask cls) const {
        const Mask target = r_.in[static_cast<std::size_t>(v)] & cls;
        Mask frontier = r_.out[static_cast<std::size_t>(v)] & cls;
        if (!frontier || !target) return true;
        Mask seen = frontier;
        while (frontier) {
            if (seen & target) return false;
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= r_.out[static_cast<std::size_t>(std::countr_zero(f))];
            frontier = next & cls & ~seen;
            seen |= frontier;
        }
        return !(seen & target);
    }

    bool dfs(int i, int used) {
        if (++nodes_ > limits().solver_nodes)
            throw ResourceError("dicolouring search exceeded node ceiling (best known upper bound " +
                                    std::to_string(upper_bound_) + ")",
                                upper_bound_);
        if (i == r_.n) return true;
        const int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if (!can_join(i, cls_[static_cast<std::size_t>(c)])) continue;
            cls_[static_cast<std::size_t>(c)] |= bit(i);
            color_[static_cast<std::size_t>(i)] = c;
            if (dfs(i + 1, std::max(used, c + 1))) return true;
            cls_[static_cast<std::size_t>(c)] &= ~bit(i);
        }
        color_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Relabelled& r_;
    int k_;
    int upper_bound_;
    std::vector<Mask> cls_;
    std::vector<int> color_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

Dicoloring greedy_dicoloring(const Digraph& g) {
    const int n = g.size();
    std::vector<VertexSet> classes;
    Dicoloring result{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (Vertex v = 0; v < n; ++v) {
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            classes[c].set(static_cast<std::size_t>(v));
            if (is_acyclic_on(g, classes[c])) break;
            classes[c].reset(static_cast<std::size_t>(v));
        }
        if (c == classes.size()) {
            classes.push_back(g.empty_set());
            classes.back().set(static_cast<std::size_t>(v));
        }
        result.colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    result.k = static_cast<int>(classes.size());
    return result;
}

std::optional<Dicoloring> find_dicoloring(const Digraph& g, int k) {
    const int n = g.size();
    if (k < 0) throw RangeError("negative colour count");
    if (n == 0) return Dicoloring{k, {}};
    if (k == 0) return std::nullopt;
    if (is_acyclic(g)) return Dicoloring{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
    if (k == 1) return std::nullopt;
    const Dicoloring greedy = greedy_dicoloring(g);
    if (greedy.k <= k) return Dicoloring{k, greedy.colors};
    check_solver_size(n, "find_dicoloring", greedy.k);

    const Relabelled r = relabel(g);
    DicolorSearch search(r, k, greedy.k);
    if (!search.run()) return std::nullopt;
    Dicoloring result{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i)
        result.colors[static_cast<std::size_t>(r.order[static_cast<std::size_t>(i)])] =
            search.colors()[static_cast<std::size_t>(i)];
    return result;
}

DichromaticResult dichromatic_number(const Digraph& g) {
    const int n = g.size();
    if (n == 0) return {0, Dicoloring{0, {}}};
    if (is_acyclic(g)) return {1, Dicoloring{1, std::vector<int>(static_cast<std::size_t>(n), 0)}};
    const Dicoloring greedy = greedy_dicoloring(g);
    for (int k = 2; k < greedy.k; ++k)
        if (auto c = find_dicoloring(g, k)) return {k, std::move(*c)};
    return {greedy.k, greedy};
}

// ---------------------------------------------------------------------------

namespace {

class ColorSearch {
public:
    ColorSearch(const std::vector<Mask>& adj, int k, int upper_bound)
        : adj_(adj), n_(static_cast<int>(adj.size())), k_(k), upper_bound_(upper_bound),
          cls_(static_cast<std::size_t>(k), 0), color_(adj.size(), -1) {}

    bool run() { return dfs(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool dfs(int i, int used) {
        if (++nodes_ > limits().solver_nodes)
            throw ResourceError("colouring search exceeded node ceiling (best known upper bound " +
                                    std::to_string(upper_bound_) + ")",
                                upper_bound_);
        if (i == n_) return true;
        const int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if (adj_[static_cast<std::size_t>(i)] & cls_[static_cast<std::size_t>(c)]) continue;
            cls_[static_cast<std::size_t>(c)] |= bit(i);
            color_[static_cast<std::size_t>(i)] = c;
            if (dfs(i + 1, std::max(used, c + 1))) return true;
            cls_[static_cast<std::size_t>(c)] &= ~bit(i);
        }
        color_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    int k_;
    int upper_bound_;
    std::vector<Mask> cls_;
    std::vector<int> color_;
    std::uint64_t nodes_ = 0;
};

GraphColoring greedy_coloring(const UndirectedGraph& g) {
    const int n = g.size();
    GraphColoring result{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
        const auto& row = g.neighbors(v);
        for (auto w = row.find_first(); w != VertexSet::npos && static_cast<Vertex>(w) < v; w = row.find_next(w))
            taken[static_cast<std::size_t>(result.colors[w])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        result.colors[static_cast<std::size_t>(v)] = c;
        result.k = std::max(result.k, c + 1);
    }
    return result;
}

}  // namespace

std::optional<GraphColoring> find_coloring(const UndirectedGraph& g, int k) {
    const int n = g.size();
    if (k < 0) throw RangeError("negative colour count");
    if (n == 0) return GraphColoring{k, {}};
    if (k == 0) return std::nullopt;
    const GraphColoring greedy = greedy_coloring(g);
    if (greedy.k <= k) return GraphColoring{k, greedy.colors};
    check_solver_size(n, "find_coloring", greedy.k);

    std::vector<VertexSet> nbrs;
    for (Vertex v = 0; v < n; ++v) nbrs.push_back(g.neighbors(v));
    const auto order = search_order(n, nbrs);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : g.edges()) {
        adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])] |= bit(pos[static_cast<std::size_t>(b)]);
        adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(b)])] |= bit(pos[static_cast<std::size_t>(a)]);
    }
    ColorSearch search(adj, k, greedy.k);
    if (!search.run()) return std::nullopt;
    GraphColoring result{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i)
        result.colors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            search.colors()[static_cast<std::size_t>(i)];
    return result;
}

ChromaticResult chromatic_number(const UndirectedGraph& g) {
    const int n = g.size();
    if (n == 0) return {0, GraphColoring{0, {}}};
    const GraphColoring greedy = greedy_coloring(g);
    for (int k = 1; k < greedy.k; ++k)
        if (auto c = find_coloring(g, k)) return {k, std::move(*c)};
    return {greedy.k, greedy};
}

}  // namespace dhero
