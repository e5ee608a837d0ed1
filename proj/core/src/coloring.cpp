#include "dhero/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dhero/detection.hpp"
#include "dhero/errors.hpp"
#include "dhero/limits.hpp"

namespace dhero {

namespace {

// Maps arbitrary keys to dense integers in sorted key order.
template <typename Key>
std::pair<std::vector<int>, std::vector<Key>> densify(const std::vector<Key>& keys) {
    std::vector<Key> palette(keys.begin(), keys.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<int> ids;
    ids.reserve(keys.size());
    for (const Key& k : keys)
        ids.push_back(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), k) - palette.begin()));
    return {std::move(ids), std::move(palette)};
}

Dicoloring dense_dicoloring(const std::vector<int>& colors) {
    auto [ids, palette] = densify(colors);
    return {static_cast<int>(palette.size()), std::move(ids)};
}

bool dicolourable(const Digraph& g, const VertexSet& s, int d) {
    if (s.none()) return true;
    if (is_acyclic_on(g, s)) return d >= 1;
    return find_dicoloring(induced(g, s).graph, d).has_value();
}

std::vector<int> layer_index(const Digraph& g, const std::vector<std::vector<Vertex>>& layers) {
    std::vector<int> layer(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (Vertex v : layers[i]) {
            if (v < 0 || v >= g.size()) throw RangeError("layer vertex " + std::to_string(v) + " out of range");
            if (layer[static_cast<std::size_t>(v)] != -1)
                throw ContractViolation("vertex " + std::to_string(v) + " lies in two layers");
            layer[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (Vertex v = 0; v < g.size(); ++v)
        if (layer[static_cast<std::size_t>(v)] == -1)
            throw ContractViolation("vertex " + std::to_string(v) + " is in no layer");
    return layer;
}

VertexSet layer_union(const Digraph& g, const std::vector<std::vector<Vertex>>& layers, std::size_t from,
                      std::size_t to) {
    VertexSet s = g.empty_set();
    for (std::size_t i = from; i < to; ++i)
        for (Vertex v : layers[i]) s.set(static_cast<std::size_t>(v));
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

SetColoring lemma21_transform(const Digraph& g, const GraphColoring& lc) {
    const auto lg = line_graph(g);
    if (!validate_coloring(lg, lc)) throw ContractViolation("arc colouring is not proper on the line graph");
    const auto arcs = g.arcs();
    std::vector<std::set<int>> entering(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < arcs.size(); ++i)
        entering[static_cast<std::size_t>(arcs[i].head)].insert(lc.colors[i]);
    std::vector<std::vector<int>> keys;
    for (const auto& s : entering) keys.emplace_back(s.begin(), s.end());
    auto [ids, palette] = densify(keys);
    SetColoring result;
    result.coloring = {static_cast<int>(palette.size()), std::move(ids)};
    result.palette = std::move(palette);
    return result;
}

NestedSetColoring extract_graph_coloring(const OrderedGraph& g, const DgDigraph& dg, const Dicoloring& dc, int r) {
    const int n = g.size();
    const DgLayout& layout = dg.layout;
    if (layout.green.n != n)
        throw ContractViolation("D(G) was built for " + std::to_string(layout.green.n) + " vertices, G has " +
                                std::to_string(n));
    if (!validate_dicoloring(dg.graph, dc)) throw PreconditionError("dicolouring of D(G) is not valid");
    if (dc.k != r)
        throw PreconditionError("dicolouring has " + std::to_string(dc.k) + " colours, expected r = " +
                                std::to_string(r));
    for (int j = 0; j < layout.copies(); ++j) {
        std::set<int> seen;
        for (Vertex x = 0; x < layout.copy_size; ++x)
            seen.insert(dc.colors[static_cast<std::size_t>(layout.copy_vertex(j, x))]);
        if (static_cast<int>(seen.size()) != r)
            throw PreconditionError("copy " + std::to_string(j) + " of R sees " + std::to_string(seen.size()) +
                                    " of the r = " + std::to_string(r) + " colours");
    }

    std::vector<std::vector<std::vector<int>>> keys;
    for (int part = 0; part < n; ++part) {
        std::set<std::vector<int>> rows;
        for (int row = 0; row < n; ++row) {
            std::set<int> used;
            for (int col = 0; col < n; ++col)
                used.insert(dc.colors[static_cast<std::size_t>(layout.green.vertex(part, row, col))]);
            rows.emplace(used.begin(), used.end());
        }
        keys.emplace_back(rows.begin(), rows.end());
    }
    auto [ids, palette] = densify(keys);
    NestedSetColoring result;
    result.coloring = {static_cast<int>(palette.size()), std::move(ids)};
    result.palette = std::move(palette);
    return result;
}

// ---------------------------------------------------------------------------

std::vector<int> lemma37_blocks(const LayeredInstance& inst) {
    layer_index(inst.host, inst.layers);
    if (inst.d < 1) throw RangeError("d must be positive");
    const std::size_t n = inst.layers.size();
    std::vector<int> ends;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end < n && dicolourable(inst.host, layer_union(inst.host, inst.layers, start, end + 1), inst.d)) ++end;
        if (end == start)
            throw PreconditionError("layer " + std::to_string(start + 1) + " is not " + std::to_string(inst.d) +
                                    "-dicolourable");
        ends.push_back(static_cast<int>(end));
        start = end;
    }
    return ends;
}

Dicoloring lemma37_color(const LayeredInstance& inst) {
    const Digraph& g = inst.host;
    const auto layer = layer_index(g, inst.layers);
    if (inst.d < 1) throw RangeError("d must be positive");
    for (std::size_t i = 0; i < inst.layers.size(); ++i)
        if (!dicolourable(g, layer_union(g, inst.layers, i, i + 1), inst.d))
            throw PreconditionError("first hypothesis fails: layer " + std::to_string(i + 1) +
                                    " has dichromatic number above " + std::to_string(inst.d));
    std::set<std::pair<int, int>> checked;
    for (const Arc& a : g.arcs()) {
        const int j = layer[static_cast<std::size_t>(a.tail)], i = layer[static_cast<std::size_t>(a.head)];
        if (i >= j || !checked.insert({i, j}).second) continue;
        if (!dicolourable(g, layer_union(g, inst.layers, static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1),
                          inst.d))
            throw PreconditionError("second hypothesis fails: backward arc " + std::to_string(a.tail) + "->" +
                                    std::to_string(a.head) + " from layer " + std::to_string(j + 1) +
                                    " to layer " + std::to_string(i + 1) + " spans layers " +
                                    std::to_string(i + 2) + ".." + std::to_string(j + 1) +
                                    " of dichromatic number above " + std::to_string(inst.d));
    }

    const auto ends = lemma37_blocks(inst);
    Dicoloring result{2 * inst.d, std::vector<int>(static_cast<std::size_t>(g.size()), 0)};
    std::size_t start = 0;
    for (std::size_t b = 0; b < ends.size(); ++b) {
        const auto end = static_cast<std::size_t>(ends[b]);
        const auto sub = induced(g, layer_union(g, inst.layers, start, end));
        const auto c = find_dicoloring(sub.graph, inst.d);
        if (!c) throw InternalError("greedy block lost its dicolouring");
        const int offset = b % 2 == 0 ? 0 : inst.d;
        for (std::size_t x = 0; x < sub.original.size(); ++x)
            result.colors[static_cast<std::size_t>(sub.original[x])] = offset + c->colors[x];
        start = end;
    }
    return result;
}

Lemma38Report lemma38_hypotheses(const Digraph& g, const std::vector<std::vector<Vertex>>& layers, int r,
                                 const Digraph* h) {
    const auto layer = layer_index(g, layers);
    if (r < 0) throw RangeError("r must be nonnegative");
    Lemma38Report rep;
    rep.multipartite = is_complete_multipartite(g).has_value();
    if (h) rep.delta11h_free = is_free_of(g, delta(k1(), *h));

    rep.layers_bounded = true;
    for (std::size_t i = 0; i < layers.size() && rep.layers_bounded; ++i)
        rep.layers_bounded = dicolourable(g, layer_union(g, layers, i, i + 1), r);

    rep.out_to_earlier = rep.in_from_later = true;
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto i = static_cast<std::size_t>(layer[static_cast<std::size_t>(v)]);
        if (rep.out_to_earlier)
            rep.out_to_earlier = dicolourable(g, g.out(v) & layer_union(g, layers, 0, i), r);
        if (rep.in_from_later)
            rep.in_from_later = dicolourable(g, g.in(v) & layer_union(g, layers, i + 1, layers.size()), r);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quasi-transitive decomposition

bool is_module(const Digraph& g, const VertexSet& x) {
    if (x.size() != static_cast<std::size_t>(g.size())) throw RangeError("vertex set size does not match host");
    const auto members = x.count();
    if (members <= 1) return true;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (x.test(static_cast<std::size_t>(v))) continue;
        const auto o = (g.out(v) & x).count(), i = (g.in(v) & x).count();
        if ((o != 0 && o != members) || (i != 0 && i != members)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<Vertex>> underlying_components(const Digraph& g) {
    const int n = g.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> result;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(result.size());
        result.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            result.back().push_back(v);
            const VertexSet nb = g.out(v) | g.in(v);
            for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(static_cast<Vertex>(w));
                }
        }
        std::sort(result.back().begin(), result.back().end());
    }
    return result;
}

// Parts of g[x] with acyclic quotient, in original indices, or empty.
std::vector<std::vector<Vertex>> split_module(const Digraph& g, const VertexSet& x) {
    const auto sub = induced(g, x);
    auto lift = [&](std::vector<std::vector<Vertex>> parts) {
        for (auto& p : parts)
            for (Vertex& v : p) v = sub.original[static_cast<std::size_t>(v)];
        return parts;
    };
    auto cc = underlying_components(sub.graph);
    if (cc.size() >= 2) return lift(std::move(cc));
    auto sc = strong_components(sub.graph);
    if (sc.size() < 2) return {};
    for (const auto& p : sc)
        if (!is_module(sub.graph, to_set(sub.graph.size(), p))) return {};
    return lift(std::move(sc));
}

void check_qt_size(int n) {
    if (n > limits().qt_vertices || n > 62)
        throw ResourceError("module search on " + std::to_string(n) + " vertices exceeds ceiling " +
                            std::to_string(limits().qt_vertices));
}

VertexSet mask_to_set(int n, std::uint64_t mask) {
    VertexSet s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) s.set(static_cast<std::size_t>(v));
    return s;
}

// Proper modules with 2 <= |X| < n, by increasing size then increasing mask.
template <typename Visit>
bool for_each_proper_module(const Digraph& g, Visit&& visit) {
    const int n = g.size();
    for (int size = 2; size < n; ++size) {
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            const VertexSet x = mask_to_set(n, mask);
            if (is_module(g, x) && visit(x)) return true;
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    return false;
}

}  // namespace

std::optional<AcyclicModulePartition> find_acyclic_module_partition(const Digraph& g) {
    const int n = g.size();
    if (n < 2 || is_tournament(g)) return std::nullopt;
    check_qt_size(n);
    AcyclicModulePartition result;
    auto attempt = [&](const VertexSet& x) {
        auto parts = split_module(g, x);
        if (parts.empty()) return false;
        result.module = to_vector(x);
        result.parts = std::move(parts);
        return true;
    };
    if (attempt(g.full_set()) || for_each_proper_module(g, attempt)) return result;
    return std::nullopt;
}

bool in_substitution_closure(const Digraph& g) {
    const int n = g.size();
    if (n <= 2 || is_acyclic(g) || is_tournament(g)) return true;
    check_qt_size(n);
    // The class is hereditary, so any proper module decides membership.
    bool member = false;
    const bool found = for_each_proper_module(g, [&](const VertexSet& x) {
        auto rest = g.full_set() - x;
        rest.set(x.find_first());
        member = in_substitution_closure(induced(g, x).graph) && in_substitution_closure(induced(g, rest).graph);
        return true;
    });
    return found && member;
}

Dicoloring exact_tournament_oracle(const Digraph& t) { return dichromatic_number(t).coloring; }

namespace {

Dicoloring qt_recurse(const Digraph& g, const TournamentOracle& oracle) {
    const int n = g.size();
    if (n == 0) return {0, {}};
    if (is_acyclic(g)) return {1, std::vector<int>(static_cast<std::size_t>(n), 0)};
    if (is_tournament(g)) {
        const Dicoloring c = oracle(g);
        if (!validate_dicoloring(g, c)) throw InternalError("tournament oracle returned an invalid dicolouring");
        return dense_dicoloring(c.colors);
    }
    const auto split = find_acyclic_module_partition(g);
    if (!split) throw InternalError("quasi-transitive digraph without an acyclic module partition");

    const VertexSet module = to_set(n, split->module);
    const VertexSet outside = g.full_set() - module;
    struct Piece {
        InducedSubdigraph sub;
        Dicoloring coloring;
        std::vector<int> palette;  // colours used on the part, sorted
    };
    std::vector<Piece> pieces;
    for (const auto& part : split->parts) {
        Piece p{induced(g, outside | to_set(n, part)), {}, {}};
        p.coloring = qt_recurse(p.sub.graph, oracle);
        std::set<int> used;
        for (std::size_t x = 0; x < p.sub.original.size(); ++x)
            if (module.test(static_cast<std::size_t>(p.sub.original[x]))) used.insert(p.coloring.colors[x]);
        p.palette.assign(used.begin(), used.end());
        pieces.push_back(std::move(p));
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < pieces.size(); ++j)
        if (pieces[j].palette.size() > pieces[best].palette.size()) best = j;

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    const Piece& main = pieces[best];
    for (std::size_t x = 0; x < main.sub.original.size(); ++x)
        colors[static_cast<std::size_t>(main.sub.original[x])] = main.coloring.colors[x];
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j == best) continue;
        const Piece& p = pieces[j];
        for (std::size_t x = 0; x < p.sub.original.size(); ++x) {
            const Vertex v = p.sub.original[x];
            if (!module.test(static_cast<std::size_t>(v))) continue;
            const auto rank = std::lower_bound(p.palette.begin(), p.palette.end(), p.coloring.colors[x]) - p.palette.begin();
            colors[static_cast<std::size_t>(v)] = main.palette[static_cast<std::size_t>(rank)];
        }
    }
    return dense_dicoloring(colors);
}

}  // namespace

Dicoloring qt_color(const Digraph& g, const Digraph& h, const TournamentOracle& oracle) {
    if (!is_quasi_transitive(g)) throw PreconditionError("input is not quasi-transitive");
    check_qt_size(g.size());
    if (auto w = find_induced(h, g)) {
        std::string at;
        for (Vertex v : *w) at += (at.empty() ? "" : ",") + std::to_string(v);
        throw PreconditionError("input contains the forbidden digraph at vertices " + at);
    }
    return qt_recurse(g, oracle);
}

}  // namespace dhero
