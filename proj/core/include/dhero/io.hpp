#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dhero/digraph.hpp"

namespace dhero {

/// Contents of a ".dg" file.
///
///     # comment
///     d <n> <m>
///     a <u> <v>            (m lines)
///     parts <k>            (optional)
///     part <v1> <v2> ...   (k lines, in part order)
struct DigraphFile {
    Digraph graph;
    std::optional<MultipartiteStructure> parts;

    friend bool operator==(const DigraphFile&, const DigraphFile&) = default;
};

/// Throws ParseError naming the offending line.
DigraphFile read_dg(std::istream& in);
DigraphFile read_dg_file(const std::string& path);

/// Arcs are written in sorted order and part members ascending, so equal
/// inputs serialise to identical bytes.
void write_dg(std::ostream& out, const Digraph& g, const MultipartiteStructure* parts = nullptr);
std::string to_dg_string(const Digraph& g, const MultipartiteStructure* parts = nullptr);

/// ".ug": `u <n> <m>` then m lines `e <a> <b>`. Vertex order is index order.
UndirectedGraph read_ug(std::istream& in);
UndirectedGraph read_ug_file(const std::string& path);
void write_ug(std::ostream& out, const UndirectedGraph& g);
std::string to_ug_string(const UndirectedGraph& g);

}  // namespace dhero
