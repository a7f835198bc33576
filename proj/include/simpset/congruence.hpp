#pragma once

#include <utility>
#include <vector>

#include "simpset/simplicial_set.hpp"

namespace simpset {

using TermPair = std::pair<DegenerateTerm, DegenerateTerm>;

/// An object together with a map into it (a projection or a structure map).
struct Projection {
    SsetPtr object;
    SimplicialMap map;
};

/// The quotient of x by the smallest simplicial congruence containing the
/// given pairs of equal-dimensional terms. Classes are resolved from
/// dimension 0 upward: a class that contains a degenerate term turns all of
/// its generators into that term, otherwise the generator with the least id
/// survives under its own name.
Projection quotient(const SsetPtr& x, const std::vector<TermPair>& relation);

}  // namespace simpset
