#include "dhero/hero.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "dhero/canonical.hpp"
#include "dhero/constructions.hpp"
#include "dhero/errors.hpp"

namespace dhero {

namespace {

enum class Grammar { Tournament, Multipartite, MultipartiteWith122 };

struct MemoKey {
    CanonicalForm form;
    Grammar grammar;

    friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.grammar == b.grammar && a.form == b.form; }
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return CanonicalHash{}(k.form) * 3 + static_cast<std::size_t>(k.grammar);
    }
};

class Memo {
public:
    std::optional<DerivationPtr> find(const MemoKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    DerivationPtr insert(MemoKey key, DerivationPtr value) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(std::move(key), std::move(value)).first->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<MemoKey, DerivationPtr, MemoKeyHash> table_;
};

Memo& memo() {
    static Memo m;
    return m;
}

DerivationPtr leaf(HeroDerivation::Kind kind) {
    auto d = std::make_shared<HeroDerivation>();
    d->kind = kind;
    return d;
}

DerivationPtr arrow(DerivationPtr l, DerivationPtr r) {
    auto d = std::make_shared<HeroDerivation>();
    d->kind = HeroDerivation::Kind::Arrow;
    d->left = std::move(l);
    d->right = std::move(r);
    return d;
}

DerivationPtr delta_node(int k, DerivationPtr child, bool transitive_first) {
    auto d = std::make_shared<HeroDerivation>();
    d->kind = HeroDerivation::Kind::Delta;
    d->k = k;
    d->left = std::move(child);
    d->transitive_first = transitive_first;
    return d;
}

const CanonicalForm& delta122_form() {
    static const CanonicalForm f = canonical_form(delta(tt(2), tt(2)));
    return f;
}

DerivationPtr derive(const Digraph& h, Grammar grammar);

// every vertex of `from` dominates every vertex of `to`
bool dominates(const Digraph& g, const VertexSet& from, const VertexSet& to) {
    for (auto u = from.find_first(); u != VertexSet::npos; u = from.find_next(u))
        if (!to.is_subset_of(g.out(static_cast<Vertex>(u)))) return false;
    return true;
}

DerivationPtr derive_canonical(const Digraph& g, Grammar grammar) {
    const auto components = strong_components(g);
    if (components.size() >= 2) {
        std::vector<DerivationPtr> parts;
        for (const auto& c : components) {
            auto d = derive(induced(g, c).graph, grammar);
            if (!d) return nullptr;
            parts.push_back(std::move(d));
        }
        DerivationPtr chain = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) chain = arrow(parts[i], chain);
        return chain;
    }

    const bool tournament = grammar == Grammar::Tournament;
    for (Vertex x = 0; x < g.size(); ++x) {
        const VertexSet& out = g.out(x);
        const VertexSet& in = g.in(x);
        if (!dominates(g, out, in)) continue;
        const bool out_ok = tournament ? is_acyclic_on(g, out) : out.count() == 1;
        if (out_ok)
            if (auto child = derive(induced(g, in).graph, grammar))
                return delta_node(static_cast<int>(out.count()), std::move(child), true);
        const bool in_ok = tournament ? is_acyclic_on(g, in) : in.count() == 1;
        if (in_ok)
            if (auto child = derive(induced(g, out).graph, grammar))
                return delta_node(static_cast<int>(in.count()), std::move(child), false);
    }
    return nullptr;
}

DerivationPtr derive(const Digraph& h, Grammar grammar) {
    if (h.size() == 1) return leaf(HeroDerivation::Kind::K1);
    MemoKey key{canonical_form(h), grammar};
    if (auto hit = memo().find(key)) return *hit;
    DerivationPtr result;
    if (grammar == Grammar::MultipartiteWith122 && key.form == delta122_form())
        result = leaf(HeroDerivation::Kind::Delta122);
    else
        result = derive_canonical(relabel(h, key.form.labeling), grammar);
    return memo().insert(std::move(key), std::move(result));
}

}  // namespace

Digraph evaluate(const HeroDerivation& d) {
    switch (d.kind) {
        case HeroDerivation::Kind::K1:
            return k1();
        case HeroDerivation::Kind::Delta122:
            return delta(tt(2), tt(2));
        case HeroDerivation::Kind::Arrow:
            return compose_arrow(evaluate(*d.left), evaluate(*d.right));
        case HeroDerivation::Kind::Delta:
            return d.transitive_first ? delta(tt(d.k), evaluate(*d.left)) : delta(evaluate(*d.left), tt(d.k));
    }
    throw InternalError("unknown derivation kind");
}

std::string to_sexpr(const HeroDerivation& d) {
    switch (d.kind) {
        case HeroDerivation::Kind::K1:
            return "(k1)";
        case HeroDerivation::Kind::Delta122:
            return "(delta122)";
        case HeroDerivation::Kind::Arrow:
            return "(arrow " + to_sexpr(*d.left) + " " + to_sexpr(*d.right) + ")";
        case HeroDerivation::Kind::Delta: {
            if (d.k == 1 && d.left->kind == HeroDerivation::Kind::K1) return "(c3)";
            const std::string k = std::to_string(d.k);
            return d.transitive_first ? "(delta 1 " + k + " " + to_sexpr(*d.left) + ")"
                                      : "(delta 1 " + to_sexpr(*d.left) + " " + k + ")";
        }
    }
    throw InternalError("unknown derivation kind");
}

DerivationPtr hero_in_tournaments(const Digraph& h) {
    if (h.size() == 0) throw RangeError("empty digraph");
    if (!is_tournament(h)) throw PreconditionError("input is not a tournament");
    return derive(h, Grammar::Tournament);
}

std::string to_string(MultipartiteVerdict::Status s) {
    switch (s) {
        case MultipartiteVerdict::Status::Yes:
            return "yes";
        case MultipartiteVerdict::Status::No:
            return "no";
        case MultipartiteVerdict::Status::DependsOnDelta122:
            return "depends-on-delta122";
    }
    return "no";
}

MultipartiteVerdict hero_in_multipartite(const Digraph& h, Delta122Mode mode) {
    if (h.size() == 0 || !is_tournament(h)) return {};
    if (auto d = derive(h, Grammar::Multipartite)) return {MultipartiteVerdict::Status::Yes, std::move(d)};
    if (mode == Delta122Mode::AssumeNotHero) return {};
    if (auto d = derive(h, Grammar::MultipartiteWith122))
        return {MultipartiteVerdict::Status::DependsOnDelta122, std::move(d)};
    return {};
}

void clear_hero_memo() { memo().clear(); }

}  // namespace dhero
