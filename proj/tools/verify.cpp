#include "verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "args.hpp"
#include "dhero/bounds.hpp"
#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/detection.hpp"
#include "dhero/errors.hpp"
#include "dhero/generators.hpp"
#include "dhero/io.hpp"

namespace dhero::cli {

using nlohmann::ordered_json;

namespace {

int ceil_log2(int x) {
    int e = 0;
    while ((1 << e) < x) ++e;
    return e;
}

void fail(VerificationReport& rep, ordered_json cex) {
    rep.pass = false;
    rep.counterexample = std::move(cex);
}

std::vector<int> s_values(const VerifyParams& p, int lo, int hi) {
    if (p.s) return {*p.s};
    std::vector<int> v;
    for (int s = lo; s <= hi; ++s) v.push_back(s);
    return v;
}

void check_21(const VerifyParams& p, VerificationReport& rep) {
    const int count = p.count.value_or(500), maxn = p.maxn.value_or(6);
    rep.params = {{"count", count}, {"maxn", maxn}, {"seed", p.seed}};
    Rng rng(p.seed);
    for (int i = 0; i < count && rep.pass; ++i) {
        const Digraph g = random_digraph(rng.range(1, maxn), rng);
        const auto ug = underlying(g);
        const int chi = chromatic_number(ug).k;
        const auto lc = chromatic_number(line_graph(g));
        const auto sc = lemma21_transform(g, lc.coloring);
        ++rep.checked;
        const bool log_ok = lc.k >= ceil_log2(chi);
        const bool proper = validate_coloring(ug, sc.coloring);
        const bool within = sc.coloring.k <= (1 << lc.k);
        if (!log_ok || !proper || !within)
            fail(rep, {{"sample", i},
                       {"digraph", to_dg_string(g)},
                       {"chi", chi},
                       {"chi_line", lc.k},
                       {"transform_colors", sc.coloring.colors},
                       {"log_bound_holds", log_ok},
                       {"transform_proper", proper},
                       {"transform_within_2k", within}});
    }
}

void check_23(const VerifyParams& p, VerificationReport& rep) {
    const auto svals = s_values(p, 4, 6);
    const int samples = p.samples.value_or(500);
    rep.params = {{"s", svals}, {"samples", samples}, {"seed", p.seed}};
    Rng rng(p.seed);
    for (int s : svals) {
        const auto ds = build_ds(s);
        const auto fwd = forward_arcs(ds.graph, ds.layout);
        for (int i = 0; i < samples && rep.pass; ++i) {
            const auto r = random_maximal_acyclic(ds.graph, rng);
            const VertexSet in_r = to_set(ds.graph.size(), r);
            std::vector<std::pair<Vertex, Vertex>> edges;
            std::vector<int> indeg(static_cast<std::size_t>(ds.graph.size()), 0), outdeg = indeg;
            for (const Arc& a : fwd)
                if (in_r.test(static_cast<std::size_t>(a.tail)) && in_r.test(static_cast<std::size_t>(a.head))) {
                    edges.emplace_back(a.tail, a.head);
                    ++outdeg[static_cast<std::size_t>(a.tail)];
                    ++indeg[static_cast<std::size_t>(a.head)];
                }
            bool has_p3 = false;
            for (Vertex v : r)
                if (indeg[static_cast<std::size_t>(v)] > 0 && outdeg[static_cast<std::size_t>(v)] > 0) has_p3 = true;
            const auto forward_part = UndirectedGraph::from_edges(ds.graph.size(), edges);
            const bool bipartite = find_coloring(forward_part, 2).has_value();
            ++rep.checked;
            if (has_p3 || !bipartite || !is_acyclic_on(ds.graph, in_r))
                fail(rep, {{"s", s}, {"sample", i}, {"acyclic_set", r}, {"forward_p3", has_p3}, {"bipartite", bipartite}});
        }
    }
}

void check_24(const VerifyParams& p, VerificationReport& rep) {
    const auto svals = s_values(p, 4, 7);
    const int samples = p.samples.value_or(1000);
    rep.params = {{"s", svals}, {"samples", samples}, {"seed", p.seed}};
    Rng rng(p.seed);
    for (int s : svals) {
        const auto ds = build_ds(s);
        for (int i = 0; i < samples && rep.pass; ++i) {
            const auto t = random_subtournament(ds, rng);
            ++rep.checked;
            if (!check_subtournament_fas(ds.graph, ds.layout, t))
                fail(rep, {{"s", s}, {"sample", i}, {"subtournament", t}});
        }
    }
}

void check_25(const VerifyParams& p, VerificationReport& rep) {
    const auto svals = s_values(p, 4, 8);
    rep.params = {{"s", svals}};
    const std::vector<std::pair<std::string, Digraph>> patterns{{"delta(1,2,C3)", delta(tt(2), c3())},
                                                                {"delta(1,2,3)", delta(tt(2), tt(3))}};
    for (const auto& [name, pattern] : patterns) {
        ++rep.checked;
        if (auto fas = fas_disjoint_paths(pattern)) {
            ordered_json arcs = ordered_json::array();
            for (const Arc& a : *fas) arcs.push_back({a.tail, a.head});
            fail(rep, {{"pattern", name}, {"disjoint_path_fas", arcs}});
            return;
        }
    }
    for (int s : svals) {
        const auto ds = build_ds(s);
        for (const auto& [name, pattern] : patterns) {
            ++rep.checked;
            if (auto w = find_induced(pattern, ds.graph)) {
                fail(rep, {{"s", s}, {"pattern", name}, {"witness", *w}});
                return;
            }
        }
    }
}

void check_37(const VerifyParams& p, VerificationReport& rep) {
    const int samples = p.samples.value_or(500), maxn = p.maxn.value_or(8);
    constexpr int d = 2;
    rep.params = {{"samples", samples}, {"maxn", maxn}, {"d", d}, {"seed", p.seed}};
    Rng rng(p.seed);
    for (int i = 0; i < samples && rep.pass; ++i) {
        const auto inst = random_layered_instance(maxn, d, rng);
        const auto c = lemma37_color(inst);
        ++rep.checked;
        if (!validate_dicoloring(inst.host, c) || c.k > 2 * d)
            fail(rep, {{"sample", i}, {"digraph", to_dg_string(inst.host)}, {"layers", inst.layers}, {"colors", c.colors}});
    }
}

void check_41(const VerifyParams& p, VerificationReport& rep) {
    const int maxn = p.maxn.value_or(6), samples = p.samples.value_or(1000);
    rep.params = {{"maxn", maxn}, {"samples", samples}, {"seed", p.seed}};
    const Digraph pattern = delta(tt(2), tt(2));
    std::uint64_t witnesses = 0;
    auto check_host = [&](const Digraph& g, const MultipartiteStructure& parts) {
        ++rep.checked;
        for_each_induced(pattern, g, [&](std::span<const Vertex> w) {
            ++witnesses;
            if (lemma41_order_check(g, parts, w)) return true;
            fail(rep, {{"digraph", to_dg_string(g, &parts)}, {"witness", std::vector<Vertex>(w.begin(), w.end())}});
            return false;
        });
        return rep.pass;
    };
    for (int n = 1; n <= maxn && rep.pass; ++n) for_each_flat_ordered_ocm(n, check_host);
    Rng rng(p.seed);
    for (int i = 0; i < samples && rep.pass; ++i) {
        const auto host = random_flat_host(rng.range(5, 8), rng);
        check_host(host.graph, host.parts);
    }
    rep.params["witnesses"] = witnesses;
}

void check_42(const VerifyParams& p, VerificationReport& rep) {
    const int maxn = p.maxn.value_or(3);
    const DigraphFile rf = digraph_arg(p.r);
    const Digraph& r = rf.graph;
    MultipartiteStructure r_parts;
    if (rf.parts) {
        r_parts = *rf.parts;
    } else if (auto s = is_complete_multipartite(r)) {
        r_parts = *s;
    } else {
        throw PreconditionError("R is not an oriented complete multipartite digraph");
    }
    const Digraph pattern = delta(tt(2), tt(2));
    if (!flat_check(r, r_parts)) throw PreconditionError("R's part order is not flat");
    if (!is_free_of(r, pattern)) throw PreconditionError("R contains Delta(1,2,2)");
    const int rk = dichromatic_number(r).k;
    rep.params = {{"maxn", maxn}, {"R", p.r}, {"r", rk}};

    for (int n = 1; n <= maxn && rep.pass; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()) && rep.pass; ++mask) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1U) edges.push_back(pairs[e]);
            const OrderedGraph g{UndirectedGraph::from_edges(n, edges)};
            if (non_interlaced_check(g)) continue;
            ++rep.checked;
            const auto dg = build_dg(g, r, r_parts);
            ordered_json cex{{"graph", to_ug_string(g.graph)}};
            if (!flat_check(dg.graph, dg.parts)) {
                cex["stage"] = "flat_check";
                fail(rep, cex);
                break;
            }
            if (auto w = find_induced(pattern, dg.graph)) {
                cex["stage"] = "delta122_free";
                cex["witness"] = *w;
                fail(rep, cex);
                break;
            }
            const auto dc = find_dicoloring(dg.graph, rk);
            if (!dc) {
                cex["stage"] = "r_dicolouring";
                fail(rep, cex);
                break;
            }
            const auto ex = extract_graph_coloring(g, dg, *dc, rk);
            const std::uint64_t cap = std::uint64_t{1} << (std::uint64_t{1} << rk);
            if (!validate_coloring(g.graph, ex.coloring) || static_cast<std::uint64_t>(ex.coloring.k) > cap) {
                cex["stage"] = "extraction";
                cex["dicolouring"] = dc->colors;
                cex["colors"] = ex.coloring.colors;
                fail(rep, cex);
            }
        }
    }
}

void check_52(const VerifyParams& p, VerificationReport& rep) {
    const int maxn = p.maxn.value_or(6), samples = p.samples.value_or(200);
    constexpr int sample_vertices = 12;
    rep.params = {{"maxn", maxn}, {"samples", samples}, {"sample_vertices", sample_vertices}, {"seed", p.seed}};
    const std::vector<std::pair<std::string, Digraph>> forbidden{{"C3", c3()}, {"TT3", tt(3)}};
    auto check = [&](const Digraph& g, const std::string& origin) {
        for (const auto& [name, h] : forbidden) {
            if (!is_free_of(g, h)) continue;
            ++rep.checked;
            const auto c = qt_color(g, h);
            const int cap = name == "C3" ? 1 : 2;
            const bool valid = validate_dicoloring(g, c);
            const int exact = dichromatic_number(g).k;
            const bool acyclic_ok = name != "C3" || is_acyclic(g);
            if (!valid || c.k > cap || c.k < exact || !acyclic_ok) {
                fail(rep, {{"origin", origin},
                           {"digraph", to_dg_string(g)},
                           {"forbidden", name},
                           {"colors", c.colors},
                           {"exact", exact}});
                return false;
            }
        }
        return true;
    };
    for (int n = 1; n <= maxn && rep.pass; ++n)
        for (const Digraph& g : oriented_graph_classes(n, is_quasi_transitive))
            if (!check(g, "exhaustive")) break;
    Rng rng(p.seed);
    for (int i = 0; i < samples && rep.pass; ++i) check(random_qt_instance(sample_vertices, rng), "sample " + std::to_string(i));
}

void check_bounds(const VerifyParams& p, VerificationReport& rep) {
    const int kmax = p.maxn.value_or(4);
    rep.params = {{"range", 6}, {"K_c_max", kmax}};
    using boost::multiprecision::pow;
    auto check = [&](bool ok, ordered_json what) {
        ++rep.checked;
        if (!ok && rep.pass) fail(rep, std::move(what));
    };
    check(bound_f(1) == 1 && bound_f(2) == 3 && bound_f(3) == 13, {{"claim", "f(1..3) = 1, 3, 13"}});
    for (int t = 1; t <= 6; ++t) check(bound_f(t) <= f_envelope(t), {{"claim", "f(t) <= 2^(2*3^t)"}, {"t", t}});
    for (int c = 1; c <= 6; ++c)
        for (int h = 1; h <= 6; ++h)
            for (int t = 1; t <= 6; ++t)
                check(bound_phi(c, h, t) <= phi_envelope(c, h, t),
                      {{"claim", "phi(c,h,t) <= (2h(h+1))^(2c+t)"}, {"c", c}, {"h", h}, {"t", t}});
    for (int c = 1; c <= kmax; ++c)
        for (int h = 1; h <= 6; ++h) {
            const BigInt base = 2 * h * (h + 1);
            const BigInt first = pow(base, static_cast<unsigned>(5 * c + 1));
            unsigned e = 1;
            for (int i = 0; i < 3 * c + 1; ++i) e *= 3;
            const BigInt second = pow(BigInt(2), 2 * e + 1) * c;
            check(bound_K(c, h) == (first > second ? first : second), {{"claim", "K(c,h) formula"}, {"c", c}, {"h", h}});
        }
}

using Check = std::function<void(const VerifyParams&, VerificationReport&)>;

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> r{
        {"2.1", check_21},          {"2.3-mechanism", check_23}, {"2.4", check_24},
        {"2.5", check_25},          {"3.7", check_37},           {"4.1", check_41},
        {"4.2-pipeline", check_42}, {"5.2", check_52},           {"bounds-3.5", check_bounds},
    };
    return r;
}

}  // namespace

ordered_json VerificationReport::to_json(bool with_timing) const {
    ordered_json j{{"id", id}, {"params", params}, {"pass", pass}, {"checked", checked}, {"counterexample", counterexample}};
    if (with_timing) j["wall_ms"] = wall_ms;
    return j;
}

const std::vector<std::string>& verify_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

VerificationReport verify_lemma(const std::string& raw_id, const VerifyParams& params) {
    std::string id = raw_id;
    if (id.rfind("lemma", 0) == 0) id = id.substr(5);
    for (const auto& [name, fn] : registry()) {
        if (name != id) continue;
        VerificationReport rep;
        rep.id = name;
        const auto start = std::chrono::steady_clock::now();
        fn(params, rep);
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    std::string known;
    for (const auto& v : verify_ids()) known += (known.empty() ? "" : ", ") + v;
    throw RangeError("unknown verification id '" + raw_id + "' (known: " + known + ")");
}

}  // namespace dhero::cli
