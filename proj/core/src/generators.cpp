#include "dhero/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "dhero/canonical.hpp"
#include "dhero/errors.hpp"

namespace dhero {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw RangeError("Rng::below(0)");
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x;
    do x = engine_();
    while (x < threshold);
    return x % n;
}

Digraph random_digraph(int n, Rng& rng) {
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) switch (rng.below(3)) {
                case 1:
                    b.add_arc(u, v);
                    break;
                case 2:
                    b.add_arc(v, u);
                    break;
                default:
                    break;
            }
    return std::move(b).build();
}

Digraph random_tournament(int n, Rng& rng) {
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin())
                b.add_arc(u, v);
            else
                b.add_arc(v, u);
        }
    return std::move(b).build();
}

std::vector<Vertex> random_subtournament(const DsDigraph& ds, Rng& rng) {
    std::vector<Vertex> t;
    if (ds.parts.parts.empty()) return t;
    while (t.empty())
        for (const auto& part : ds.parts.parts)
            if (rng.coin()) t.push_back(part[static_cast<std::size_t>(rng.below(part.size()))]);
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<Vertex> random_maximal_acyclic(const Digraph& g, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) order[static_cast<std::size_t>(v)] = v;
    rng.shuffle(order);
    VertexSet chosen = g.empty_set();
    for (Vertex v : order) {
        chosen.set(static_cast<std::size_t>(v));
        if (!is_acyclic_on(g, chosen)) chosen.reset(static_cast<std::size_t>(v));
    }
    return to_vector(chosen);
}

// ---------------------------------------------------------------------------
// Flat orders

namespace {

// Tracks, per vertex, the part holding its backward in-tails and the part
// holding its backward out-heads (-1 while none), with counts for undo.
class FlatState {
public:
    explicit FlatState(const std::vector<int>& part)
        : part_(part), in_part_(part.size(), -1), out_part_(part.size(), -1), in_count_(part.size(), 0),
          out_count_(part.size(), 0) {}

    // backward arc v -> u with part(u) < part(v)
    bool allows(Vertex v, Vertex u) const {
        const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
        return (in_part_[ui] == -1 || in_part_[ui] == part_[vi]) && (out_part_[vi] == -1 || out_part_[vi] == part_[ui]);
    }

    void add(Vertex v, Vertex u) {
        const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
        in_part_[ui] = part_[vi];
        ++in_count_[ui];
        out_part_[vi] = part_[ui];
        ++out_count_[vi];
    }

    void remove(Vertex v, Vertex u) {
        const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
        if (--in_count_[ui] == 0) in_part_[ui] = -1;
        if (--out_count_[vi] == 0) out_part_[vi] = -1;
    }

private:
    const std::vector<int>& part_;
    std::vector<int> in_part_, out_part_, in_count_, out_count_;
};

MultipartiteStructure blocks(const std::vector<int>& sizes) {
    MultipartiteStructure parts;
    int next = 0;
    for (int s : sizes) {
        std::vector<Vertex> p;
        for (int i = 0; i < s; ++i) p.push_back(next++);
        parts.parts.push_back(std::move(p));
    }
    return parts;
}

}  // namespace

FlatHost random_flat_host(int n, Rng& rng) {
    if (n < 1) throw RangeError("flat host needs at least one vertex");
    std::vector<int> sizes;
    for (int left = n; left > 0;) {
        const int s = rng.range(1, std::min(left, 3));
        sizes.push_back(s);
        left -= s;
    }
    FlatHost host{Digraph(n), blocks(sizes)};
    const auto part = host.parts.part_of(n);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    FlatState state(part);
    DigraphBuilder b(n);
    for (auto [u, v] : pairs) {
        if (rng.coin() && state.allows(v, u)) {
            state.add(v, u);
            b.add_arc(v, u);
        } else {
            b.add_arc(u, v);
        }
    }
    host.graph = std::move(b).build();
    return host;
}

void for_each_flat_ordered_ocm(int n, const std::function<bool(const Digraph&, const MultipartiteStructure&)>& visit) {
    if (n < 1 || n > 12) throw RangeError("flat enumeration supports 1..12 vertices");
    for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
        std::vector<int> sizes{1};
        for (int i = 0; i < n - 1; ++i) {
            if (cuts >> i & 1U)
                sizes.push_back(1);
            else
                ++sizes.back();
        }
        const MultipartiteStructure parts = blocks(sizes);
        const auto part = parts.part_of(n);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) pairs.emplace_back(u, v);
        FlatState state(part);
        std::vector<char> backward(pairs.size(), 0);
        bool stop = false;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (stop) return;
            if (i == pairs.size()) {
                DigraphBuilder b(n);
                for (std::size_t j = 0; j < pairs.size(); ++j) {
                    if (backward[j])
                        b.add_arc(pairs[j].second, pairs[j].first);
                    else
                        b.add_arc(pairs[j].first, pairs[j].second);
                }
                if (!visit(std::move(b).build(), parts)) stop = true;
                return;
            }
            const auto [u, v] = pairs[i];
            backward[i] = 0;
            rec(i + 1);
            if (stop || !state.allows(v, u)) return;
            state.add(v, u);
            backward[i] = 1;
            rec(i + 1);
            backward[i] = 0;
            state.remove(v, u);
        };
        rec(0);
        if (stop) return;
    }
}

// ---------------------------------------------------------------------------
// Isomorphism classes

namespace {

std::vector<Digraph> classes(int n, bool tournaments_only, const std::function<bool(const Digraph&)>& keep) {
    if (n < 0) throw RangeError("negative vertex count");
    std::vector<Digraph> level{Digraph(0)};
    for (int m = 1; m <= n; ++m) {
        const int choices = tournaments_only ? 2 : 3;
        std::uint64_t combos = 1;
        for (int i = 0; i < m - 1; ++i) combos *= static_cast<std::uint64_t>(choices);
        std::unordered_set<CanonicalForm, CanonicalHash> seen;
        std::vector<std::pair<std::vector<std::uint64_t>, Digraph>> found;
        for (const Digraph& g : level)
            for (std::uint64_t code = 0; code < combos; ++code) {
                DigraphBuilder b(m);
                for (const Arc& a : g.arcs()) b.add_arc(a.tail, a.head);
                std::uint64_t c = code;
                for (Vertex v = 0; v < m - 1; ++v) {
                    const auto digit = c % static_cast<std::uint64_t>(choices);
                    c /= static_cast<std::uint64_t>(choices);
                    const auto rel = tournaments_only ? digit + 1 : digit;
                    if (rel == 1) b.add_arc(m - 1, v);
                    if (rel == 2) b.add_arc(v, m - 1);
                }
                Digraph h = std::move(b).build();
                if (keep && !keep(h)) continue;
                CanonicalForm f = canonical_form(h);
                if (!seen.insert(f).second) continue;
                found.emplace_back(f.code, relabel(h, f.labeling));
            }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [code, g] : found) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace

std::vector<Digraph> oriented_graph_classes(int n, const std::function<bool(const Digraph&)>& keep) {
    return classes(n, false, keep);
}

std::vector<Digraph> tournament_classes(int n) { return classes(n, true, {}); }

// ---------------------------------------------------------------------------

Digraph random_transitive_dag(int n, Rng& rng) {
    std::vector<VertexSet> reach(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) reach[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    for (int u = n - 1; u >= 0; --u) {
        VertexSet closure = reach[static_cast<std::size_t>(u)];
        for (auto w = reach[static_cast<std::size_t>(u)].find_first(); w != VertexSet::npos;
             w = reach[static_cast<std::size_t>(u)].find_next(w))
            closure |= reach[w];
        reach[static_cast<std::size_t>(u)] = closure;
    }
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (auto w = reach[static_cast<std::size_t>(u)].find_first(); w != VertexSet::npos;
             w = reach[static_cast<std::size_t>(u)].find_next(w))
            b.add_arc(u, static_cast<Vertex>(w));
    return std::move(b).build();
}

namespace {

Digraph random_block(int n, Rng& rng) {
    switch (rng.below(3)) {
        case 0:
            return random_tournament(n, rng);
        case 1:
            return edgeless(n);
        default:
            return random_transitive_dag(n, rng);
    }
}

}  // namespace

Digraph random_qt_instance(int max_n, Rng& rng) {
    if (max_n < 1) throw RangeError("max_n must be positive");
    const int target = rng.range(1, max_n);
    Digraph g = random_block(std::min(target, rng.range(2, 4)), rng);
    while (g.size() < target) {
        const int room = target - g.size() + 1;
        const int b = rng.range(2, std::min(4, room));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.size())));
        g = substitute({g, v, random_block(b, rng)});
    }
    return g;
}

LayeredInstance random_layered_instance(int max_n, int d, Rng& rng) {
    if (d < 2) throw RangeError("layered instances need d >= 2");
    if (max_n < 1) throw RangeError("max_n must be positive");
    const int n = rng.range(1, max_n);
    const Digraph g = random_digraph(n, rng);
    LayeredInstance inst;
    std::vector<int> layer(static_cast<std::size_t>(n));
    for (int v = 0; v < n;) {
        const int size = std::min(rng.range(1, 3), n - v);
        inst.layers.emplace_back();
        for (int i = 0; i < size; ++i, ++v) {
            inst.layers.back().push_back(v);
            layer[static_cast<std::size_t>(v)] = static_cast<int>(inst.layers.size()) - 1;
        }
    }
    // Only removals follow, and removing arcs never raises a dichromatic
    // number, so a span accepted earlier stays acceptable.
    std::vector<Arc> kept = g.arcs();
    for (const Arc& a : g.arcs()) {
        const int j = layer[static_cast<std::size_t>(a.tail)], i = layer[static_cast<std::size_t>(a.head)];
        if (i >= j) continue;
        std::vector<Vertex> span;
        for (int l = i + 1; l <= j; ++l)
            span.insert(span.end(), inst.layers[static_cast<std::size_t>(l)].begin(),
                        inst.layers[static_cast<std::size_t>(l)].end());
        if (!find_dicoloring(induced(Digraph::from_arcs(n, kept), span).graph, d))
            kept.erase(std::find(kept.begin(), kept.end(), a));
    }
    inst.host = Digraph::from_arcs(n, kept);
    inst.d = d;
    return inst;
}

}  // namespace dhero
