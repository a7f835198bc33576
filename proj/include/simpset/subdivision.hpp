#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simpset/hom.hpp"
#include "simpset/simplicial_set.hpp"

namespace simpset {

/// A nondegenerate simplex of Sd X in minimal form: a generator of X and a
/// strictly increasing flag of vertex subsets (bitmasks) ending in the
/// full vertex set of the base.
struct FlagGenerator {
    GenId base;
    std::vector<std::uint32_t> flag;
};

struct Subdivision {
    SsetPtr object;
    /// provenance[g] describes generator g of object.
    std::vector<FlagGenerator> provenance;
};

/// All strictly increasing chains of nonempty subsets of [n] ending in [n],
/// ordered by length.
std::vector<std::vector<std::uint32_t>> flags_over(int n);

/// Name of the minimal form (base; flag): "(base|S0<S1<...)".
std::string flag_name(const std::string& base, const std::vector<std::uint32_t>& flag);

Subdivision sd(const SsetPtr& x);
/// sd on maps; source and target subdivisions must be the ones produced by
/// sd for f's source and target.
SimplicialMap sd_map(const SimplicialMap& f, const Subdivision& sd_source, const Subdivision& sd_target);
SsetPtr sd_iter(const SsetPtr& x, int k);
/// The k-fold subdivision of a map with the subdivided endpoints.
SimplicialMap sd_iter_map(const SimplicialMap& f, int k);

/// Maps sd(delta(n)) -> x. Throws BudgetExceeded when sd(delta(n)) has more
/// than generator_budget generators or the enumeration runs out of budget.
std::vector<SimplicialMap> ex_level(const SsetPtr& x, int n, std::size_t generator_budget = 4096,
                                    const HomOptions& opts = {});

/// One row per flag generator: "name base S0<S1<...".
std::string provenance_table(const Subdivision& s, const FiniteSimplicialSet& base);

}  // namespace simpset
