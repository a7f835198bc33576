#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "simpset/simplicial_set.hpp"

namespace simpset {

/// SIMPSET_BUDGET from the environment when set, otherwise 10^6.
std::uint64_t default_budget();

struct HomOptions {
    enum class Route { automatic, general, vertex };

    /// Maximum number of candidate assignments tried before BudgetExceeded.
    std::uint64_t budget = default_budget();
    /// Only maps that are injective on generators with nondegenerate images.
    bool injective = false;
    /// Try candidates in a seeded random order.
    bool shuffle = false;
    std::uint64_t seed = 0;
    /// automatic uses vertex maps when both ends have Properties B and C.
    Route route = Route::automatic;
};

/// Calls visit on every map a -> b until it returns false. Returns the number
/// of maps visited.
std::uint64_t for_each_hom(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts,
                           const std::function<bool(const SimplicialMap&)>& visit);

std::vector<SimplicialMap> hom_enumerate(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts = {});
std::uint64_t hom_count(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts = {});
std::optional<SimplicialMap> find_hom(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts = {});

/// An isomorphism a -> b if one exists.
std::optional<SimplicialMap> find_isomorphism(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts = {});

/// A map that is a bijection on generators with nondegenerate images.
bool is_isomorphism(const SimplicialMap& f);

}  // namespace simpset
