#pragma once

#include <vector>

#include "simpset/congruence.hpp"
#include "simpset/reflectors.hpp"

namespace simpset {

struct Coproduct {
    SsetPtr object;
    std::vector<SimplicialMap> injections;
};

/// Generator names of part k get the prefix "k:".
Coproduct coproduct(const std::vector<SsetPtr>& parts);

/// Injective on generators with nondegenerate images, and every target
/// generator whose vertices all lie in the image is itself in the image.
bool is_full_simplicial_inclusion(const SimplicialMap& j);

/// A pushout of left: A -> B and right: A -> C. left_leg: B -> P,
/// right_leg: C -> P.
struct Pushout {
    SsetPtr object;
    SimplicialMap left_leg;
    SimplicialMap right_leg;
};

/// Requires one leg to be levelwise injective. Generators keep the names
/// they had in B or C; a clash gets the prefix of its side ("0:" for B,
/// "1:" for C).
Pushout pushout_sset(const SimplicialMap& left, const SimplicialMap& right);
Pushout pushout_ns(const SimplicialMap& left, const SimplicialMap& right, const ReflectOptions& opts = {});
Pushout pushout_un(const SimplicialMap& left, const SimplicialMap& right, const ReflectOptions& opts = {});

/// B modulo f(a) ~ g(a) for a parallel pair f, g: A -> B.
Projection coequalizer_sset(const SimplicialMap& f, const SimplicialMap& g);
Projection coequalizer_un(const SimplicialMap& f, const SimplicialMap& g, const ReflectOptions& opts = {});

/// One cell attachment: j: K -> L (levelwise injective) attached along
/// attach: K -> S, where S is the base or any earlier stage (recognized by
/// pointer, else by an identical presentation).
struct Attachment {
    SimplicialMap cell;
    SimplicialMap attach;
};

struct CellChain {
    /// stages[0] is the base.
    std::vector<SsetPtr> stages;
    /// from_base[k]: base -> stages[k].
    std::vector<SimplicialMap> from_base;
    const SimplicialMap& composite() const { return from_base.back(); }
};

/// Iterated pushout_un.
CellChain cell_chain(const SsetPtr& base, const std::vector<Attachment>& attachments, const ReflectOptions& opts = {});

}  // namespace simpset
