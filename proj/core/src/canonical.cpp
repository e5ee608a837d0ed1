#include "dhero/canonical.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dhero/errors.hpp"
#include "dhero/limits.hpp"

namespace dhero {

namespace {

using Mask = std::uint64_t;
using Partition = std::vector<std::vector<int>>;

class Canonizer {
public:
    explicit Canonizer(const Digraph& g) : n_(g.size()), out_(static_cast<std::size_t>(n_), 0), in_(out_) {
        for (const Arc& a : g.arcs()) {
            out_[static_cast<std::size_t>(a.tail)] |= Mask{1} << a.head;
            in_[static_cast<std::size_t>(a.head)] |= Mask{1} << a.tail;
        }
    }

    CanonicalForm run() {
        Partition start;
        if (n_ > 0) {
            start.emplace_back();
            for (int v = 0; v < n_; ++v) start.back().push_back(v);
        }
        search(refine(std::move(start)));
        return {n_, best_code_, best_labeling_};
    }

private:
    Partition refine(Partition p) const {
        while (true) {
            std::vector<Mask> masks;
            for (const auto& cell : p) {
                Mask m = 0;
                for (int v : cell) m |= Mask{1} << v;
                masks.push_back(m);
            }
            Partition next;
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                for (int v : cell) {
                    std::vector<int> sig;
                    sig.reserve(masks.size() * 2);
                    for (Mask m : masks) {
                        sig.push_back(std::popcount(out_[static_cast<std::size_t>(v)] & m));
                        sig.push_back(std::popcount(in_[static_cast<std::size_t>(v)] & m));
                    }
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
            }
            if (next.size() == p.size()) return next;
            p = std::move(next);
        }
    }

    bool twins(const std::vector<int>& cell) const {
        const auto first = static_cast<std::size_t>(cell.front());
        return std::all_of(cell.begin(), cell.end(), [&](int v) {
            return out_[static_cast<std::size_t>(v)] == out_[first] && in_[static_cast<std::size_t>(v)] == in_[first];
        });
    }

    void search(const Partition& p) {
        auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
        if (target == p.end()) {
            leaf(p);
            return;
        }
        const auto index = static_cast<std::size_t>(target - p.begin());
        const auto& cell = *target;
        const std::size_t branches = twins(cell) ? 1 : cell.size();
        for (std::size_t b = 0; b < branches; ++b) {
            Partition q;
            q.reserve(p.size() + 1);
            q.insert(q.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(index));
            q.push_back({cell[b]});
            q.emplace_back();
            for (int v : cell)
                if (v != cell[b]) q.back().push_back(v);
            q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(index) + 1, p.end());
            search(refine(std::move(q)));
        }
    }

    void leaf(const Partition& p) {
        if (++leaves_ > limits().canonical_permutations)
            throw ResourceError("canonical form search exceeded " + std::to_string(limits().canonical_permutations) +
                                " leaves");
        std::vector<Vertex> pos(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p[i][0])] = static_cast<Vertex>(i);
        std::vector<Mask> code(static_cast<std::size_t>(n_), 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Mask row = out_[static_cast<std::size_t>(p[i][0])];
            for (Mask r = row; r; r &= r - 1)
                code[i] |= Mask{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
        }
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = std::move(code);
            best_labeling_ = std::move(pos);
        }
    }

    int n_;
    std::vector<Mask> out_, in_;
    std::uint64_t leaves_ = 0;
    bool have_best_ = false;
    std::vector<Mask> best_code_;
    std::vector<Vertex> best_labeling_;
};

}  // namespace

std::size_t CanonicalHash::operator()(const CanonicalForm& f) const noexcept {
    std::size_t h = std::hash<int>{}(f.n);
    for (std::uint64_t w : f.code) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

CanonicalForm canonical_form(const Digraph& g) {
    if (g.size() > 64)
        throw ResourceError("canonical form limited to 64 vertices, got " + std::to_string(g.size()));
    return Canonizer(g).run();
}

Digraph relabel(const Digraph& g, const std::vector<Vertex>& labeling) {
    if (labeling.size() != static_cast<std::size_t>(g.size())) throw ContractViolation("labelling has wrong length");
    DigraphBuilder b(g.size());
    for (const Arc& a : g.arcs())
        b.add_arc(labeling[static_cast<std::size_t>(a.tail)], labeling[static_cast<std::size_t>(a.head)]);
    return std::move(b).build();
}

Digraph canonical_digraph(const Digraph& g) { return relabel(g, canonical_form(g).labeling); }

bool isomorphic(const Digraph& a, const Digraph& b) {
    return a.size() == b.size() && a.arc_count() == b.arc_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace dhero
