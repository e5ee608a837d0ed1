#include "dhero/detection.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "dhero/coloring.hpp"
#include "dhero/errors.hpp"
#include "dhero/limits.hpp"

namespace dhero {

// ---------------------------------------------------------------------------
// Induced subgraph search

namespace {

class InducedSearch {
public:
    InducedSearch(const Digraph& pattern, const Digraph& host,
                  const std::function<bool(std::span<const Vertex>)>& visit)
        : pattern_(pattern), host_(host), visit_(visit) {
        const int n = host.size();
        nonadj_.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) nonadj_.push_back(non_neighbors(host, v));
        for (Vertex i = 0; i < pattern.size(); ++i) {
            VertexSet base = host.empty_set();
            const int pout = pattern.out_degree(i), pin = pattern.in_degree(i);
            const int pnon = pattern.size() - 1 - pout - pin;
            for (Vertex v = 0; v < n; ++v)
                if (host.out_degree(v) >= pout && host.in_degree(v) >= pin &&
                    static_cast<int>(nonadj_[static_cast<std::size_t>(v)].count()) >= pnon)
                    base.set(static_cast<std::size_t>(v));
            base_.push_back(std::move(base));
        }
        map_.assign(static_cast<std::size_t>(pattern.size()), -1);
        scratch_.assign(static_cast<std::size_t>(pattern.size()), host.empty_set());
        used_ = host.empty_set();
    }

    std::size_t run() {
        if (pattern_.size() > host_.size()) return 0;
        if (pattern_.size() == 0) {
            ++found_;
            visit_(std::span<const Vertex>());
            return found_;
        }
        extend(0);
        return found_;
    }

private:
    // returns false once the visitor asked to stop
    bool extend(int depth) {
        const auto d = static_cast<std::size_t>(depth);
        VertexSet& cand = scratch_[d];
        cand = base_[d];
        cand -= used_;
        for (int j = 0; j < depth && cand.any(); ++j) {
            const Vertex h = map_[static_cast<std::size_t>(j)];
            if (pattern_.has_arc(j, depth))
                cand &= host_.out(h);
            else if (pattern_.has_arc(depth, j))
                cand &= host_.in(h);
            else
                cand &= nonadj_[static_cast<std::size_t>(h)];
        }
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            map_[d] = static_cast<Vertex>(v);
            if (depth + 1 == pattern_.size()) {
                ++found_;
                if (!visit_(map_)) return false;
                continue;
            }
            used_.set(v);
            const bool go_on = extend(depth + 1);
            used_.reset(v);
            if (!go_on) return false;
        }
        return true;
    }

    const Digraph& pattern_;
    const Digraph& host_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    std::vector<VertexSet> nonadj_;
    std::vector<VertexSet> base_;
    std::vector<VertexSet> scratch_;
    VertexSet used_;
    VertexMap map_;
    std::size_t found_ = 0;
};

}  // namespace

std::size_t for_each_induced(const Digraph& pattern, const Digraph& host,
                             const std::function<bool(std::span<const Vertex>)>& visit) {
    InducedSearch search(pattern, host, visit);
    return search.run();
}

std::optional<VertexMap> find_induced(const Digraph& pattern, const Digraph& host) {
    std::optional<VertexMap> result;
    for_each_induced(pattern, host, [&](std::span<const Vertex> m) {
        result.emplace(m.begin(), m.end());
        return false;
    });
    return result;
}

bool is_free_of(const Digraph& host, const Digraph& pattern) { return !find_induced(pattern, host).has_value(); }

// ---------------------------------------------------------------------------

std::optional<MultipartiteStructure> is_complete_multipartite(const Digraph& g) {
    const int n = g.size();
    std::vector<char> assigned(static_cast<std::size_t>(n), 0);
    MultipartiteStructure result;
    for (Vertex v = 0; v < n; ++v) {
        if (assigned[static_cast<std::size_t>(v)]) continue;
        VertexSet cls = non_neighbors(g, v);
        cls.set(static_cast<std::size_t>(v));
        for (auto w = cls.find_first(); w != VertexSet::npos; w = cls.find_next(w)) {
            VertexSet other = non_neighbors(g, static_cast<Vertex>(w));
            other.set(w);
            if (other != cls || assigned[w]) return std::nullopt;
        }
        for (auto w = cls.find_first(); w != VertexSet::npos; w = cls.find_next(w)) assigned[w] = 1;
        result.parts.push_back(to_vector(cls));
    }
    return result;
}

bool is_multipartite_structure(const Digraph& g, const MultipartiteStructure& parts) {
    const int n = g.size();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.parts.size(); ++p) {
        if (parts.parts[p].empty()) return false;
        for (Vertex v : parts.parts[p]) {
            if (v < 0 || v >= n || part[static_cast<std::size_t>(v)] != -1) return false;
            part[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    if (std::find(part.begin(), part.end(), -1) != part.end()) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) == g.adjacent(u, v))
                return false;
    return true;
}

bool is_quasi_transitive(const Digraph& g) {
    for (Vertex y = 0; y < g.size(); ++y) {
        const auto& in = g.in(y);
        for (auto x = in.find_first(); x != VertexSet::npos; x = in.find_next(x)) {
            // every out-neighbour z of y must be adjacent to x
            VertexSet bad = g.out(y);
            bad -= g.out(static_cast<Vertex>(x));
            bad -= g.in(static_cast<Vertex>(x));
            if (bad.any()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

bool is_disjoint_paths(int n, std::span<const Arc> arcs) {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0), outdeg(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) throw RangeError("arc endpoint out of range");
        if (++outdeg[static_cast<std::size_t>(a.tail)] > 1 || ++indeg[static_cast<std::size_t>(a.head)] > 1)
            return false;
        next[static_cast<std::size_t>(a.tail)] = a.head;
    }
    // with degrees <= 1 the only obstruction left is a cycle; walk from sources
    std::size_t covered = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] != 0 || outdeg[static_cast<std::size_t>(v)] == 0) continue;
        for (Vertex w = v; next[static_cast<std::size_t>(w)] != -1; w = next[static_cast<std::size_t>(w)]) ++covered;
    }
    return covered == arcs.size();
}

namespace {

// Digraph restricted to vertices touched by arcs, as 64-bit masks.
struct SmallArcs {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

SmallArcs compress(const Digraph& g) {
    std::vector<int> id(static_cast<std::size_t>(g.size()), -1);
    SmallArcs s;
    for (const Arc& a : g.arcs()) {
        for (Vertex v : {a.tail, a.head})
            if (id[static_cast<std::size_t>(v)] == -1) id[static_cast<std::size_t>(v)] = s.n++;
        s.arcs.emplace_back(id[static_cast<std::size_t>(a.tail)], id[static_cast<std::size_t>(a.head)]);
    }
    return s;
}

bool acyclic_without(const SmallArcs& s, std::uint64_t removed) {
    std::uint64_t out[64] = {};
    for (std::size_t i = 0; i < s.arcs.size(); ++i)
        if (!(removed >> i & 1)) out[s.arcs[i].first] |= std::uint64_t{1} << s.arcs[i].second;
    std::uint64_t alive = s.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n) - 1;
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (int v = 0; v < s.n; ++v)
            if ((alive >> v & 1) && (out[v] & alive) == 0) {
                alive &= ~(std::uint64_t{1} << v);
                progress = true;
            }
    }
    return alive == 0;
}

bool paths_shape(const SmallArcs& s, std::uint64_t chosen) {
    std::uint64_t tails = 0, heads = 0;
    int next[64];
    std::fill(next, next + 64, -1);
    for (std::size_t i = 0; i < s.arcs.size(); ++i) {
        if (!(chosen >> i & 1)) continue;
        const auto [u, v] = s.arcs[i];
        if ((tails >> u & 1) || (heads >> v & 1)) return false;
        tails |= std::uint64_t{1} << u;
        heads |= std::uint64_t{1} << v;
        next[u] = v;
    }
    // a cycle would make every vertex on it both a tail and a head
    std::uint64_t start = tails & ~heads;
    int covered = 0;
    for (int v = 0; v < s.n; ++v)
        if (start >> v & 1)
            for (int w = v; next[w] != -1; w = next[w]) ++covered;
    return covered == std::popcount(chosen);
}

}  // namespace

std::optional<std::vector<Arc>> fas_disjoint_paths(const Digraph& g) {
    const auto m = g.arc_count();
    const auto ceiling = std::min<std::size_t>(static_cast<std::size_t>(limits().fas_arcs), 62);
    if (m > ceiling)
        throw ResourceError("fas_disjoint_paths: " + std::to_string(m) + " arcs exceeds ceiling " +
                            std::to_string(ceiling));
    const SmallArcs s = compress(g);
    const auto arcs = g.arcs();
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::size_t size = 0; size <= m; ++size) {
        // Gosper's hack: all masks with `size` bits, increasing
        std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        while (mask < limit) {
            if (paths_shape(s, mask) && acyclic_without(s, mask)) {
                std::vector<Arc> result;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask >> i & 1) result.push_back(arcs[i]);
                return result;
            }
            if (mask == 0) break;
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

bool check_subtournament_fas(const Digraph& ds, const DsLayout& layout, std::span<const Vertex> t) {
    if (ds.size() != layout.vertex_count()) throw ContractViolation("digraph does not match D_s layout");
    const VertexSet members = to_set(ds.size(), t);
    if (members.count() != t.size()) throw ContractViolation("vertex listed twice");
    if (!is_tournament_on(ds, members)) throw ContractViolation("vertex set does not induce a tournament");

    const auto sub = induced(ds, t);
    std::vector<Arc> forward, rest;
    for (const Arc& a : sub.graph.arcs()) {
        const int from = layout.middle(sub.original[static_cast<std::size_t>(a.tail)]);
        const int to = layout.middle(sub.original[static_cast<std::size_t>(a.head)]);
        (from < to ? forward : rest).push_back(a);
    }
    if (!is_disjoint_paths(sub.graph.size(), forward)) return false;
    return is_acyclic(Digraph::from_arcs(sub.graph.size(), rest));
}

// ---------------------------------------------------------------------------

std::optional<std::array<Vertex, 5>> non_interlaced_check(const OrderedGraph& g) {
    const auto& ug = g.graph;
    const int n = ug.size();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = i1 + 1; i2 < n; ++i2)
            for (int i3 = i2 + 1; i3 < n; ++i3) {
                if (!ug.has_edge(i1, i3)) continue;
                for (int i4 = i3 + 1; i4 < n; ++i4) {
                    if (!ug.has_edge(i2, i4)) continue;
                    for (int i5 = i4 + 1; i5 < n; ++i5)
                        if (ug.has_edge(i3, i5)) return std::array<Vertex, 5>{i1, i2, i3, i4, i5};
                }
            }
    return std::nullopt;
}

bool flat_check(const Digraph& g, const MultipartiteStructure& parts) {
    if (!is_multipartite_structure(g, parts))
        throw ContractViolation("part list is not a complete multipartite structure of the digraph");
    const auto part = parts.part_of(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        const int pv = part[static_cast<std::size_t>(v)];
        int back_in = -1, back_out = -1;
        const auto& in = g.in(v);
        for (auto x = in.find_first(); x != VertexSet::npos; x = in.find_next(x)) {
            const int px = part[x];
            if (px <= pv) continue;
            if (back_in != -1 && back_in != px) return false;
            back_in = px;
        }
        const auto& out = g.out(v);
        for (auto x = out.find_first(); x != VertexSet::npos; x = out.find_next(x)) {
            const int px = part[x];
            if (px >= pv) continue;
            if (back_out != -1 && back_out != px) return false;
            back_out = px;
        }
    }
    return true;
}

bool lemma41_order_check(const Digraph& g, const MultipartiteStructure& parts, std::span<const Vertex> witness) {
    if (!flat_check(g, parts)) throw PreconditionError("part order is not flat");
    static const Digraph pattern = delta(tt(2), tt(2));
    if (witness.size() != 5) throw ContractViolation("witness must map the 5 vertices of Delta(1,2,2)");
    const VertexSet image = to_set(g.size(), witness);
    if (image.count() != 5) throw ContractViolation("witness is not injective");
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (a != b && pattern.has_arc(a, b) != g.has_arc(witness[static_cast<std::size_t>(a)],
                                                             witness[static_cast<std::size_t>(b)]))
                throw ContractViolation("witness is not an induced copy of Delta(1,2,2)");
    const auto part = parts.part_of(g.size());
    for (std::size_t r = 0; r + 1 < kDelta122Roles.size(); ++r) {
        const Vertex lo = witness[static_cast<std::size_t>(kDelta122Roles[r])];
        const Vertex hi = witness[static_cast<std::size_t>(kDelta122Roles[r + 1])];
        if (part[static_cast<std::size_t>(lo)] >= part[static_cast<std::size_t>(hi)]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::vector<Vertex>>> find_jewel_chain(const Digraph& g, const Digraph& h, int length) {
    if (length < 1) throw RangeError("jewel chain length must be positive");
    if (g.size() > limits().jewel_host_vertices)
        throw ResourceError("find_jewel_chain: host with " + std::to_string(g.size()) +
                            " vertices exceeds ceiling " + std::to_string(limits().jewel_host_vertices));
    const Digraph jewel_shape = compose_arrow(h, h);
    std::set<std::vector<Vertex>> found;
    for_each_induced(jewel_shape, g, [&](std::span<const Vertex> m) {
        std::vector<Vertex> s(m.begin(), m.end());
        std::sort(s.begin(), s.end());
        found.insert(std::move(s));
        return true;
    });
    std::vector<VertexSet> jewels;
    std::vector<std::vector<Vertex>> members(found.begin(), found.end());
    for (const auto& s : members) jewels.push_back(to_set(g.size(), s));

    std::vector<std::size_t> chain;
    VertexSet used = g.empty_set();

    auto all_arcs = [&](const VertexSet& from, const VertexSet& to) {
        for (auto u = from.find_first(); u != VertexSet::npos; u = from.find_next(u))
            if (!to.is_subset_of(g.out(static_cast<Vertex>(u)))) return false;
        return true;
    };
    auto no_arc = [&](const VertexSet& from, const VertexSet& to) {
        for (auto u = from.find_first(); u != VertexSet::npos; u = from.find_next(u))
            if (g.out(static_cast<Vertex>(u)).intersects(to)) return false;
        return true;
    };

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(chain.size()) == length) return true;
        for (std::size_t c = 0; c < jewels.size(); ++c) {
            const VertexSet& j = jewels[c];
            if (j.intersects(used)) continue;
            if (!chain.empty() && !all_arcs(jewels[chain.back()], j)) continue;
            bool ok = true;
            for (std::size_t prev : chain)
                if (!no_arc(j, jewels[prev])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chain.push_back(c);
            used |= j;
            if (extend()) return true;
            used -= j;
            chain.pop_back();
        }
        return false;
    };
    if (!extend()) return std::nullopt;
    std::vector<std::vector<Vertex>> result;
    for (std::size_t c : chain) result.push_back(members[c]);
    return result;
}

std::optional<std::uint64_t> cluster_size_bound(int t) {
    if (t < 1) throw RangeError("cluster order t must be >= 1");
    std::uint64_t f = 1;
    for (int i = 2; i <= t; ++i) {
        // f <- 1 + f (1 + f), watching for overflow
        if (f > 0xFFFFFFFFull - 1) return std::nullopt;
        f = 1 + f * (1 + f);
    }
    return f;
}

std::optional<ClusterWitness> find_t_cluster(const Digraph& g, int t) {
    if (t < 1) throw RangeError("cluster order t must be >= 1");
    const int n = g.size();
    if (n == 0) return std::nullopt;
    if (t == 1) return ClusterWitness{1, {0}};
    // nothing to find if the whole host is (t-1)-dicolourable
    if (n <= limits().solver_vertices && find_dicoloring(g, t - 1).has_value()) return std::nullopt;
    if (n > limits().cluster_vertices)
        throw ResourceError("find_t_cluster: host with " + std::to_string(n) + " vertices exceeds ceiling " +
                            std::to_string(limits().cluster_vertices));

    const auto bound = cluster_size_bound(t);
    const int max_size = bound ? static_cast<int>(std::min<std::uint64_t>(*bound, static_cast<std::uint64_t>(n))) : n;
    std::vector<Vertex> subset;
    for (int size = t; size <= max_size; ++size) {
        subset.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            const auto sub = induced(g, subset);
            if (!find_dicoloring(sub.graph, t - 1).has_value()) return ClusterWitness{t, subset};
            // next combination in lexicographic order
            int i = size - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

VertexSet triangle_neighborhood(const Digraph& g, Vertex u, Vertex v) { return g.out(v) & g.in(u); }

bool is_heavy_arc(const Digraph& g, Vertex u, Vertex v, int t) {
    if (t < 2) throw RangeError("heavy/light classification needs t >= 2");
    if (!g.has_arc(u, v)) throw ContractViolation("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
    const auto c = induced(g, triangle_neighborhood(g, u, v));
    return find_t_cluster(c.graph, t - 1).has_value();
}

}  // namespace dhero
