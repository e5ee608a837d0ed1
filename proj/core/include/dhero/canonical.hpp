#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dhero/digraph.hpp"

namespace dhero {

/// Canonical labelling of a digraph: isomorphic digraphs get equal `n` and
/// `code`. `code[i]` holds the out-row of canonical vertex i as a bit mask;
/// `labeling[v]` is the canonical position of original vertex v.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> code;
    std::vector<Vertex> labeling;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.code == b.code; }
};

struct CanonicalHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Individualisation-refinement over equitable ordered partitions; the least
/// adjacency code over all leaves wins. Interchangeable twins are branched
/// on once. Throws ResourceError above 64 vertices or when the number of
/// leaves exceeds Limits::canonical_permutations.
CanonicalForm canonical_form(const Digraph& g);

/// g relabelled by its canonical labelling.
Digraph canonical_digraph(const Digraph& g);
Digraph relabel(const Digraph& g, const std::vector<Vertex>& labeling);

bool isomorphic(const Digraph& a, const Digraph& b);

}  // namespace dhero
