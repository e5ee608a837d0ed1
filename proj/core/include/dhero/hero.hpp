#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dhero/digraph.hpp"

namespace dhero {

/// Parse tree of a hero grammar. Kinds:
///   K1        single vertex
///   Delta122  the tournament delta(tt(2), tt(2)), a leaf of the conditional grammar
///   Arrow     left => right
///   Delta     delta(tt(k), child) when transitive_first, else delta(child, tt(k))
struct HeroDerivation {
    enum class Kind { K1, Delta122, Arrow, Delta };

    Kind kind = Kind::K1;
    std::shared_ptr<const HeroDerivation> left;   ///< Arrow left operand, Delta child
    std::shared_ptr<const HeroDerivation> right;  ///< Arrow right operand
    int k = 0;
    bool transitive_first = true;
};

using DerivationPtr = std::shared_ptr<const HeroDerivation>;

/// Digraph built by the constructions module from the tree.
Digraph evaluate(const HeroDerivation& d);

/// (k1), (delta122), (arrow A B), (delta 1 k A), (delta 1 A k). The directed
/// triangle delta(tt(1), K1) prints as (c3).
std::string to_sexpr(const HeroDerivation& d);

/// Derivation in the tournament grammar, or nullptr if H is not a hero in
/// tournaments. Throws PreconditionError if H is not a tournament.
DerivationPtr hero_in_tournaments(const Digraph& h);

enum class Delta122Mode { TriState, AssumeNotHero };

struct MultipartiteVerdict {
    enum class Status { Yes, No, DependsOnDelta122 };

    Status status = Status::No;
    DerivationPtr derivation;  ///< set for Yes and DependsOnDelta122
};

std::string to_string(MultipartiteVerdict::Status s);

/// Yes if H derives from K1 by => and delta(tt(1), .) / delta(., tt(1));
/// DependsOnDelta122 if it needs the Delta(1,2,2) leaf as well (No in
/// AssumeNotHero mode). Non-tournaments are No.
MultipartiteVerdict hero_in_multipartite(const Digraph& h, Delta122Mode mode = Delta122Mode::TriState);

/// Drops every memoised verdict.
void clear_hero_memo();

}  // namespace dhero
