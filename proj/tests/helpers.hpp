#pragma once

#include <vector>

#include "dhero/constructions.hpp"
#include "dhero/digraph.hpp"

namespace testing {

inline std::vector<dhero::Vertex> members(const dhero::VertexSet& s) { return dhero::to_vector(s); }

inline dhero::Digraph arcs(int n, std::initializer_list<dhero::Arc> list) {
    std::vector<dhero::Arc> v(list);
    return dhero::Digraph::from_arcs(n, v);
}

inline dhero::OrderedGraph ordered(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> e(edges);
    return dhero::OrderedGraph{dhero::UndirectedGraph::from_edges(n, e)};
}

inline dhero::MultipartiteStructure singletons(int n) {
    dhero::MultipartiteStructure m;
    for (int v = 0; v < n; ++v) m.parts.push_back({v});
    return m;
}

}  // namespace testing
