#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "args.hpp"
#include "dhero/canonical.hpp"
#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/detection.hpp"
#include "dhero/errors.hpp"
#include "dhero/hero.hpp"
#include "dhero/io.hpp"
#include "verify.hpp"

namespace dhero::cli {

using nlohmann::ordered_json;

namespace {

ordered_json coloring_json(int k, const std::vector<int>& colors) { return {{"k", k}, {"colors", colors}}; }

ordered_json arcs_json(const std::vector<Arc>& arcs) {
    ordered_json a = ordered_json::array();
    for (const Arc& x : arcs) a.push_back({x.tail, x.head});
    return a;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw RangeError(std::string("expected an integer for ") + what + ", got '" + s + "'");
    return v;
}

void need(const std::vector<std::string>& p, std::size_t n, const char* usage) {
    if (p.size() != n) throw CLI::ValidationError(std::string("usage: ") + usage);
}

MultipartiteStructure parts_or_detect(const DigraphFile& f, const char* who) {
    if (f.parts) return *f.parts;
    if (auto s = is_complete_multipartite(f.graph)) return *s;
    throw PreconditionError(std::string(who) + " is not an oriented complete multipartite digraph");
}

int gen(const std::string& family, const std::vector<std::string>& p, std::ostream& out) {
    if (family == "tt") {
        need(p, 1, "gen tt N");
        const int n = parse_int(p[0], "N");
        if (n < 0) throw RangeError("N must be nonnegative");
        write_dg(out, tt(n));
    } else if (family == "c3") {
        need(p, 0, "gen c3");
        write_dg(out, c3());
    } else if (family == "delta" || family == "arrow" || family == "union") {
        need(p, 2, "gen delta|arrow|union A B");
        const Digraph a = digraph_arg(p[0]).graph, b = digraph_arg(p[1]).graph;
        write_dg(out, family == "delta" ? delta(a, b) : family == "arrow" ? compose_arrow(a, b) : disjoint_union(a, b));
    } else if (family == "ds") {
        need(p, 1, "gen ds S");
        const auto ds = build_ds(parse_int(p[0], "S"));
        write_dg(out, ds.graph, &ds.parts);
    } else if (family == "dprime") {
        need(p, 1, "gen dprime G.ug");
        const auto d = build_d_prime(OrderedGraph{read_ug_file(p[0])});
        write_dg(out, d.graph, &d.parts);
    } else if (family == "dg") {
        need(p, 2, "gen dg G.ug R");
        const auto r = digraph_arg(p[1]);
        const auto d = build_dg(OrderedGraph{read_ug_file(p[0])}, r.graph, parts_or_detect(r, "R"));
        write_dg(out, d.graph, &d.parts);
    } else if (family == "substitute") {
        need(p, 3, "gen substitute OUTER U INNER");
        write_dg(out, substitute({digraph_arg(p[0]).graph, parse_int(p[1], "U"), digraph_arg(p[2]).graph}));
    } else {
        throw CLI::ValidationError("unknown family '" + family + "'");
    }
    return kOk;
}

int check(const std::string& kind, const std::string& file, std::ostream& out) {
    ordered_json j;
    bool ok = false;
    if (kind == "non-interlaced") {
        const auto w = non_interlaced_check(OrderedGraph{read_ug_file(file)});
        ok = !w.has_value();
        j = {{"non_interlaced", ok}, {"witness", w ? ordered_json(*w) : ordered_json()}};
    } else {
        const auto f = digraph_arg(file);
        if (kind == "multipartite") {
            const auto s = is_complete_multipartite(f.graph);
            ok = s.has_value();
            j = {{"multipartite", ok}, {"parts", s ? ordered_json(s->parts) : ordered_json()}};
        } else if (kind == "qt") {
            ok = is_quasi_transitive(f.graph);
            j = {{"quasi_transitive", ok}};
        } else if (kind == "flat") {
            if (!f.parts) throw PreconditionError("flat check needs a parts block");
            ok = flat_check(f.graph, *f.parts);
            j = {{"flat", ok}};
        } else if (kind == "fas-paths") {
            const auto fas = fas_disjoint_paths(f.graph);
            ok = fas.has_value();
            j = {{"exists", ok}, {"fas", fas ? arcs_json(*fas) : ordered_json()}};
        } else {
            throw CLI::ValidationError("unknown check '" + kind + "'");
        }
    }
    out << j.dump() << '\n';
    return ok ? kOk : kFail;
}

int hero(const std::string& kind, const std::string& file, bool assume_not, bool json, std::ostream& out) {
    const Digraph h = digraph_arg(file).graph;
    if (kind == "tournament") {
        const auto d = hero_in_tournaments(h);
        if (json)
            out << ordered_json{{"hero", d != nullptr}, {"derivation", d ? ordered_json(to_sexpr(*d)) : ordered_json()}}.dump()
                << '\n';
        else
            out << (d ? to_sexpr(*d) : "none") << '\n';
        return d ? kOk : kFail;
    }
    if (kind == "multipartite") {
        const auto v = hero_in_multipartite(h, assume_not ? Delta122Mode::AssumeNotHero : Delta122Mode::TriState);
        const std::string verdict = to_string(v.status);
        if (json)
            out << ordered_json{{"verdict", verdict},
                                {"derivation", v.derivation ? ordered_json(to_sexpr(*v.derivation)) : ordered_json()}}
                       .dump()
                << '\n';
        else
            out << verdict << (v.derivation ? " " + to_sexpr(*v.derivation) : "") << '\n';
        return v.status == MultipartiteVerdict::Status::No ? kFail : kOk;
    }
    throw CLI::ValidationError("unknown hero class '" + kind + "'");
}

int color(const std::string& method, const std::string& file, int d, const std::string& forbid, const std::string& r_spec,
          std::ostream& out) {
    if (method == "extract") {
        const OrderedGraph g{read_ug_file(file)};
        const auto rf = digraph_arg(r_spec);
        const auto dg = build_dg(g, rf.graph, parts_or_detect(rf, "R"));
        const int r = dichromatic_number(rf.graph).k;
        const auto dc = find_dicoloring(dg.graph, r);
        if (!dc) throw PreconditionError("D(G) has no " + std::to_string(r) + "-dicolouring");
        const auto ex = extract_graph_coloring(g, dg, *dc, r);
        auto j = coloring_json(ex.coloring.k, ex.coloring.colors);
        j["palette"] = ex.palette;
        j["r"] = r;
        out << j.dump() << '\n';
        return kOk;
    }
    const auto f = digraph_arg(file);
    ordered_json j;
    if (method == "exact") {
        const auto res = dichromatic_number(f.graph);
        j = coloring_json(res.k, res.coloring.colors);
    } else if (method == "lemma21") {
        const auto lc = chromatic_number(line_graph(f.graph));
        const auto sc = lemma21_transform(f.graph, lc.coloring);
        j = coloring_json(sc.coloring.k, sc.coloring.colors);
        j["palette"] = sc.palette;
        j["line_k"] = lc.k;
    } else if (method == "lemma37") {
        if (!f.parts) throw PreconditionError("lemma37 needs the layers as a parts block");
        if (d < 1) throw CLI::ValidationError("lemma37 needs --d");
        const auto c = lemma37_color({f.graph, f.parts->parts, d});
        j = coloring_json(c.k, c.colors);
    } else if (method == "qt") {
        if (forbid.empty()) throw CLI::ValidationError("qt needs --forbid H");
        const auto c = qt_color(f.graph, digraph_arg(forbid).graph);
        j = coloring_json(c.k, c.colors);
    } else {
        throw CLI::ValidationError("unknown colouring method '" + method + "'");
    }
    out << j.dump() << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Digraph colouring and hero toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output where text is the default");

    std::string family;
    std::vector<std::string> gen_params;
    std::string output;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a construction as .dg (or tt, c3, delta, arrow, union, ds, dprime, dg, substitute)");
    gen_cmd->add_option("family", family)->required();
    gen_cmd->add_option("params", gen_params);
    gen_cmd->add_option("-o,--output", output, "Write to a file instead of stdout");

    std::string file, file2;
    auto* chi_cmd = app.add_subcommand("chi", "Dichromatic number with a witness");
    chi_cmd->add_option("digraph", file)->required();
    auto* chrom_cmd = app.add_subcommand("chrom", "Chromatic number of a .ug graph");
    chrom_cmd->add_option("graph", file)->required();

    auto* find_cmd = app.add_subcommand("find", "Least induced copy of a pattern");
    find_cmd->add_option("pattern", file)->required();
    find_cmd->add_option("host", file2)->required();

    std::string kind;
    auto* check_cmd = app.add_subcommand("check", "multipartite | qt | flat | non-interlaced | fas-paths");
    check_cmd->add_option("kind", kind)->required();
    check_cmd->add_option("file", file)->required();

    bool assume_not = false;
    auto* hero_cmd = app.add_subcommand("hero", "tournament | multipartite");
    hero_cmd->add_option("class", kind)->required();
    hero_cmd->add_option("digraph", file)->required();
    hero_cmd->add_flag("--assume-delta122-not-hero", assume_not);

    int d = 0;
    std::string forbid, r_spec = "c3";
    auto* color_cmd = app.add_subcommand("color", "exact | lemma21 | lemma37 | qt | extract");
    color_cmd->add_option("method", kind)->required();
    color_cmd->add_option("file", file)->required();
    color_cmd->add_option("--d", d, "Per-layer bound for lemma37");
    color_cmd->add_option("--forbid", forbid, "Forbidden tournament for qt");
    color_cmd->add_option("--R", r_spec, "Flat digraph R for extract");

    std::string id;
    VerifyParams vp;
    int s = 0, samples = 0, count = 0, maxn = 0;
    bool timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification check by id");
    verify_cmd->add_option("id", id)->required();
    auto* s_opt = verify_cmd->add_option("--s", s);
    auto* samples_opt = verify_cmd->add_option("--samples", samples);
    auto* count_opt = verify_cmd->add_option("--count", count);
    auto* maxn_opt = verify_cmd->add_option("--maxn", maxn);
    verify_cmd->add_option("--seed", vp.seed);
    verify_cmd->add_option("--R", vp.r);
    verify_cmd->add_flag("--timing", timing, "Include wall time in the JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*gen_cmd) {
            if (output.empty()) return gen(family, gen_params, out);
            std::ofstream f(output);
            if (!f) throw RangeError("cannot write " + output);
            return gen(family, gen_params, f);
        }
        if (*chi_cmd) {
            const auto res = dichromatic_number(digraph_arg(file).graph);
            out << coloring_json(res.k, res.coloring.colors).dump() << '\n';
            return kOk;
        }
        if (*chrom_cmd) {
            const auto res = chromatic_number(read_ug_file(file));
            out << coloring_json(res.k, res.coloring.colors).dump() << '\n';
            return kOk;
        }
        if (*find_cmd) {
            const auto w = find_induced(digraph_arg(file).graph, digraph_arg(file2).graph);
            out << (w ? ordered_json(*w) : ordered_json()).dump() << '\n';
            return w ? kOk : kFail;
        }
        if (*check_cmd) return check(kind, file, out);
        if (*hero_cmd) return hero(kind, file, assume_not, json, out);
        if (*color_cmd) return color(kind, file, d, forbid, r_spec, out);
        if (*verify_cmd) {
            if (*s_opt) vp.s = s;
            if (*samples_opt) vp.samples = samples;
            if (*count_opt) vp.count = count;
            if (*maxn_opt) vp.maxn = maxn;
            const auto rep = verify_lemma(id, vp);
            out << rep.to_json(timing).dump() << '\n';
            err << rep.id << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked << " checks, " << rep.wall_ms
                << " ms)\n";
            return rep.pass ? kOk : kFail;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace dhero::cli
