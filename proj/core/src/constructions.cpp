#include "dhero/constructions.hpp"

#include <string>

#include "dhero/detection.hpp"
#include "dhero/errors.hpp"

namespace dhero {

Digraph k1() { return Digraph(1); }

Digraph edgeless(int n) { return Digraph(n); }

Digraph tt(int n) {
    DigraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_arc(i, j);
    return std::move(b).build();
}

Digraph c3() { return delta(k1(), k1()); }

Digraph directed_path(int n) {
    DigraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_arc(i, i + 1);
    return std::move(b).build();
}

Digraph circulant(int n, std::span<const int> offsets) {
    DigraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int d : offsets) b.add_arc(i, ((i + d) % n + n) % n);
    return std::move(b).build();
}

namespace {

void copy_into(DigraphBuilder& b, const Digraph& g, int offset) {
    for (const Arc& a : g.arcs()) b.add_arc(a.tail + offset, a.head + offset);
}

}  // namespace

Digraph compose_arrow(const Digraph& g1, const Digraph& g2) {
    const int n1 = g1.size(), n2 = g2.size();
    DigraphBuilder b(n1 + n2);
    copy_into(b, g1, 0);
    copy_into(b, g2, n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) b.add_arc(u, n1 + v);
    return std::move(b).build();
}

Digraph delta(const Digraph& h1, const Digraph& h2) {
    const int n1 = h1.size(), n2 = h2.size();
    DigraphBuilder b(1 + n1 + n2);
    copy_into(b, h1, 1);
    copy_into(b, h2, 1 + n1);
    for (int u = 0; u < n1; ++u) {
        b.add_arc(0, 1 + u);
        for (int v = 0; v < n2; ++v) b.add_arc(1 + u, 1 + n1 + v);
    }
    for (int v = 0; v < n2; ++v) b.add_arc(1 + n1 + v, 0);
    return std::move(b).build();
}

Digraph disjoint_union(const Digraph& g1, const Digraph& g2) {
    DigraphBuilder b(g1.size() + g2.size());
    copy_into(b, g1, 0);
    copy_into(b, g2, g1.size());
    return std::move(b).build();
}

Digraph line_digraph(const Digraph& g) {
    const auto arcs = g.arcs();
    // arcs are sorted by tail, so arcs leaving w form a contiguous block
    std::vector<int> first(static_cast<std::size_t>(g.size()) + 1, 0);
    for (const Arc& a : arcs) ++first[static_cast<std::size_t>(a.tail) + 1];
    for (std::size_t v = 0; v < static_cast<std::size_t>(g.size()); ++v) first[v + 1] += first[v];

    DigraphBuilder b(static_cast<int>(arcs.size()));
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto h = static_cast<std::size_t>(arcs[i].head);
        for (int j = first[h]; j < first[h + 1]; ++j) b.add_arc(static_cast<int>(i), j);
    }
    return std::move(b).build();
}

UndirectedGraph line_graph(const Digraph& g) { return underlying(line_digraph(g)); }

// ---------------------------------------------------------------------------

DsLayout DsLayout::make(int s) {
    if (s < 3) throw RangeError("D_s needs s >= 3, got " + std::to_string(s));
    DsLayout layout;
    layout.s = s;
    for (int j = 2; j <= s - 1; ++j)
        for (int i = 1; i < j; ++i)
            for (int k = j + 1; k <= s; ++k) layout.triples.push_back({i, j, k});
    return layout;
}

Vertex DsLayout::index_of(const Triple& t) const {
    if (!(1 <= t.i && t.i < t.j && t.j < t.k && t.k <= s)) return -1;
    // Blocks V_2..V_{j-1} precede V_j; |V_m| = (m-1)(s-m).
    int offset = 0;
    for (int m = 2; m < t.j; ++m) offset += (m - 1) * (s - m);
    return offset + (t.i - 1) * (s - t.j) + (t.k - t.j - 1);
}

DsDigraph build_ds(int s) {
    DsLayout layout = DsLayout::make(s);
    const int n = layout.vertex_count();
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        const Triple& a = layout.triples[static_cast<std::size_t>(u)];
        for (int v = 0; v < n; ++v) {
            const Triple& c = layout.triples[static_cast<std::size_t>(v)];
            if (a.j >= c.j) continue;
            // (i,j,k)(j,k,l) is an L(L(TT_s)) edge
            if (c.i == a.j && c.j == a.k)
                b.add_arc(u, v);
            else
                b.add_arc(v, u);
        }
    }
    MultipartiteStructure parts;
    for (int j = 2; j <= s - 1; ++j) {
        std::vector<Vertex> part;
        for (int v = 0; v < n; ++v)
            if (layout.triples[static_cast<std::size_t>(v)].j == j) part.push_back(v);
        parts.parts.push_back(std::move(part));
    }
    return {std::move(b).build(), std::move(layout), std::move(parts)};
}

std::vector<Arc> forward_arcs(const Digraph& d, const DsLayout& layout) {
    if (d.size() != layout.vertex_count())
        throw ContractViolation("digraph has " + std::to_string(d.size()) + " vertices, layout for s=" +
                                std::to_string(layout.s) + " has " + std::to_string(layout.vertex_count()));
    std::vector<Arc> result;
    for (const Arc& a : d.arcs()) {
        const Triple& t = layout.triples[static_cast<std::size_t>(a.tail)];
        const Triple& h = layout.triples[static_cast<std::size_t>(a.head)];
        if (t.j == h.j) throw ContractViolation("arc inside part V_" + std::to_string(t.j));
        if (t.j < h.j) {
            if (!(h.i == t.j && h.j == t.k)) throw ContractViolation("forward arc is not an L(L(TT_s)) edge");
            result.push_back(a);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

Digraph substitute(const SubstitutionRecipe& r) {
    const int n = r.outer.size();
    if (r.target < 0 || r.target >= n)
        throw RangeError("substitution target " + std::to_string(r.target) + " out of range");
    if (r.inner.size() == 0) throw ContractViolation("substituted digraph must be nonempty");
    const int m = r.inner.size();
    auto pos = [&](Vertex v) { return v < r.target ? v : v - 1; };
    const int base = n - 1;

    DigraphBuilder b(n - 1 + m);
    for (const Arc& a : r.outer.arcs()) {
        if (a.tail == r.target) {
            for (int x = 0; x < m; ++x) b.add_arc(base + x, pos(a.head));
        } else if (a.head == r.target) {
            for (int x = 0; x < m; ++x) b.add_arc(pos(a.tail), base + x);
        } else {
            b.add_arc(pos(a.tail), pos(a.head));
        }
    }
    copy_into(b, r.inner, base);
    return std::move(b).build();
}

// ---------------------------------------------------------------------------

DPrimeDigraph build_d_prime(const OrderedGraph& g) {
    const int n = g.size();
    if (n < 1) throw RangeError("D'(G) needs at least one vertex");
    DPrimeLayout layout{n};
    const int total = n * n * n;
    // backward[u] holds the heads of backward arcs leaving u
    std::vector<VertexSet> backward(static_cast<std::size_t>(total), VertexSet(static_cast<std::size_t>(total)));
    for (auto [a, b] : g.graph.edges())
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                backward[static_cast<std::size_t>(layout.vertex(b, a, x))].set(
                    static_cast<std::size_t>(layout.vertex(a, y, b)));

    DigraphBuilder builder(total);
    for (int u = 0; u < total; ++u)
        for (int v = 0; v < total; ++v) {
            if (layout.part(u) >= layout.part(v)) continue;
            if (backward[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(u)))
                builder.add_arc(v, u);
            else
                builder.add_arc(u, v);
        }

    MultipartiteStructure parts;
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> part;
        for (int x = 0; x < n * n; ++x) part.push_back(i * n * n + x);
        parts.parts.push_back(std::move(part));
    }
    return {std::move(builder).build(), std::move(parts), layout};
}

DgDigraph build_dg(const OrderedGraph& g, const Digraph& r, const MultipartiteStructure& r_parts) {
    if (!flat_check(r, r_parts)) throw ContractViolation("R's part order is not flat");
    auto dp = build_d_prime(g);
    const int n = g.size();
    DgLayout layout{dp.layout, r.size()};
    const int total = layout.green_count() + layout.copies() * r.size();

    DigraphBuilder b(total);
    copy_into(b, dp.graph, 0);
    for (int j = 0; j < layout.copies(); ++j) {
        const Vertex base = layout.copy_vertex(j, 0);
        copy_into(b, r, base);
        for (int x = 0; x < r.size(); ++x) {
            const Vertex cx = base + x;
            for (int i = 0; i < n; ++i)
                for (int y = 0; y < n * n; ++y) {
                    const Vertex gv = i * n * n + y;
                    if (i <= j)
                        b.add_arc(gv, cx);
                    else
                        b.add_arc(cx, gv);
                }
            for (int later = j + 1; later < layout.copies(); ++later)
                for (int z = 0; z < r.size(); ++z) b.add_arc(cx, layout.copy_vertex(later, z));
        }
    }

    MultipartiteStructure parts;
    for (int i = 0; i < n; ++i) {
        parts.parts.push_back(dp.parts.parts[static_cast<std::size_t>(i)]);
        if (i + 1 < n)
            for (const auto& rp : r_parts.parts) {
                std::vector<Vertex> part;
                for (Vertex x : rp) part.push_back(layout.copy_vertex(i, x));
                parts.parts.push_back(std::move(part));
            }
    }
    return {std::move(b).build(), std::move(parts), layout};
}

}  // namespace dhero
