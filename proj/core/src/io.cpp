#include "dhero/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "dhero/errors.hpp"

namespace dhero {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        const auto first = text.find_first_not_of(" \t");
        if (first == std::string::npos || text[first] == '#') continue;
        std::istringstream ss(text);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) throw ParseError("expected integer, got '" + tok + "'", line);
    if (value < 0 || value > 1'000'000) throw ParseError("integer out of range: " + tok, line);
    return static_cast<int>(value);
}

void expect(const Line& l, const char* keyword, std::size_t arity) {
    if (l.tokens.front() != keyword)
        throw ParseError(std::string("expected '") + keyword + "', got '" + l.tokens.front() + "'", l.number);
    if (arity != 0 && l.tokens.size() != arity)
        throw ParseError(std::string("'") + keyword + "' takes " + std::to_string(arity - 1) + " arguments",
                         l.number);
}

template <class Fn>
auto with_line(int line, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), line);
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return in;
}

}  // namespace

DigraphFile read_dg(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("missing header 'd <n> <m>'", 1);
    const Line& header = lines.front();
    expect(header, "d", 3);
    const int n = parse_int(header.tokens[1], header.number);
    const int m = parse_int(header.tokens[2], header.number);
    if (static_cast<int>(lines.size()) < 1 + m)
        throw ParseError("expected " + std::to_string(m) + " arc lines", lines.back().number);

    DigraphBuilder builder(n);
    for (int i = 1; i <= m; ++i) {
        const Line& l = lines[static_cast<std::size_t>(i)];
        expect(l, "a", 3);
        const int u = parse_int(l.tokens[1], l.number);
        const int v = parse_int(l.tokens[2], l.number);
        with_line(l.number, [&] {
            if (builder.has_arc(u, v)) throw ParseError("duplicate arc", l.number);
            builder.add_arc(u, v);
            return 0;
        });
    }
    DigraphFile file{std::move(builder).build(), std::nullopt};

    std::size_t pos = static_cast<std::size_t>(m) + 1;
    if (pos < lines.size()) {
        const Line& pl = lines[pos];
        expect(pl, "parts", 2);
        const int k = parse_int(pl.tokens[1], pl.number);
        if (lines.size() - pos - 1 != static_cast<std::size_t>(k))
            throw ParseError("expected exactly " + std::to_string(k) + " part lines", pl.number);
        MultipartiteStructure parts;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int p = 0; p < k; ++p) {
            const Line& l = lines[pos + 1 + static_cast<std::size_t>(p)];
            expect(l, "part", 0);
            if (l.tokens.size() < 2) throw ParseError("empty part", l.number);
            std::vector<Vertex> members;
            for (std::size_t t = 1; t < l.tokens.size(); ++t) {
                const int v = parse_int(l.tokens[t], l.number);
                if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", l.number);
                if (seen[static_cast<std::size_t>(v)]) throw ParseError("vertex " + std::to_string(v) + " in two parts", l.number);
                seen[static_cast<std::size_t>(v)] = 1;
                members.push_back(v);
            }
            std::sort(members.begin(), members.end());
            parts.parts.push_back(std::move(members));
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ParseError("parts do not cover every vertex", pl.number);
        file.parts = std::move(parts);
    }
    return file;
}

DigraphFile read_dg_file(const std::string& path) {
    auto in = open(path);
    return read_dg(in);
}

void write_dg(std::ostream& out, const Digraph& g, const MultipartiteStructure* parts) {
    out << "d " << g.size() << ' ' << g.arc_count() << '\n';
    for (const Arc& a : g.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
    if (parts != nullptr) {
        out << "parts " << parts->parts.size() << '\n';
        for (const auto& part : parts->parts) {
            std::vector<Vertex> sorted(part);
            std::sort(sorted.begin(), sorted.end());
            out << "part";
            for (Vertex v : sorted) out << ' ' << v;
            out << '\n';
        }
    }
}

std::string to_dg_string(const Digraph& g, const MultipartiteStructure* parts) {
    std::ostringstream ss;
    write_dg(ss, g, parts);
    return ss.str();
}

UndirectedGraph read_ug(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("missing header 'u <n> <m>'", 1);
    const Line& header = lines.front();
    expect(header, "u", 3);
    const int n = parse_int(header.tokens[1], header.number);
    const int m = parse_int(header.tokens[2], header.number);
    if (static_cast<int>(lines.size()) != 1 + m)
        throw ParseError("expected exactly " + std::to_string(m) + " edge lines", lines.back().number);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= m; ++i) {
        const Line& l = lines[static_cast<std::size_t>(i)];
        expect(l, "e", 3);
        const int a = parse_int(l.tokens[1], l.number);
        const int b = parse_int(l.tokens[2], l.number);
        if (a >= n || b >= n) throw ParseError("vertex out of range", l.number);
        if (a == b) throw ParseError("loop", l.number);
        edges.emplace_back(a, b);
    }
    auto g = UndirectedGraph::from_edges(n, edges);
    if (g.edge_count() != static_cast<std::size_t>(m))
        throw ParseError("duplicate edge", lines.back().number);
    return g;
}

UndirectedGraph read_ug_file(const std::string& path) {
    auto in = open(path);
    return read_ug(in);
}

void write_ug(std::ostream& out, const UndirectedGraph& g) {
    out << "u " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
}

std::string to_ug_string(const UndirectedGraph& g) {
    std::ostringstream ss;
    write_ug(ss, g);
    return ss.str();
}

}  // namespace dhero
