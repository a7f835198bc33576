#pragma once

#include <cstdint>

#include "simpset/congruence.hpp"
#include "simpset/hom.hpp"

namespace simpset {

/// f_0: opposing_pair() -> delta(0); f_n: parallel_pair(n) -> delta(n)
/// identifying the two top simplices.
SimplicialMap family_F(int i);

/// Every map source(f) -> x extends along f.
bool rlp_check(const SsetPtr& x, const SimplicialMap& f, const HomOptions& opts = {});

struct ReflectOptions {
    /// Post-check Properties B and C of the result.
    bool certify = true;
    /// Also certify by rlp_check against family_F(i), i <= dim, when the
    /// result has at most this many generators.
    std::size_t rlp_certify_limit = 400;
    /// Apply one forced identification per round instead of all of them.
    bool one_at_a_time = false;
    /// With one_at_a_time: pick the identification at random.
    bool shuffle = false;
    std::uint64_t seed = 0;
    HomOptions hom;
};

/// The universal quotient of x with Property B, with the projection.
Projection desingularize(const SsetPtr& x, const ReflectOptions& opts = {});
/// The reflection of an object with Property B onto Properties B and C.
/// Throws NotNonsingular otherwise.
Projection localize(const SsetPtr& x, const ReflectOptions& opts = {});
/// localize o desingularize.
Projection normalize_to_un(const SsetPtr& x, const ReflectOptions& opts = {});

/// The map R(f): R(source) -> R(target) with R(f) o p = q o f, where p and
/// q are the given reflection projections of f's endpoints. Throws
/// InternalError when f does not factor.
SimplicialMap reflect_map(const Projection& p, const Projection& q, const SimplicialMap& f);

struct TriangleReport {
    bool unit_side = false;    // eps_{LX} o L(eta_X) = id
    bool counit_side = false;  // eps_Y o eta_Y = id for Y = LX
    bool ok() const { return unit_side && counit_side; }
};

/// Triangle identities of the localization adjunction at x (which must have
/// Property B).
TriangleReport localization_triangles(const SsetPtr& x, const ReflectOptions& opts = {});

}  // namespace simpset
