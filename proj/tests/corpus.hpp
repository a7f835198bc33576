#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "simpset/builders.hpp"
#include "simpset/colimits.hpp"
#include "simpset/core.hpp"
#include "simpset/hom.hpp"
#include "simpset/osc.hpp"
#include "simpset/reflectors.hpp"

namespace testkit {

using namespace simpset;

struct Named {
    std::string name;
    SsetPtr x;
};

inline std::vector<Named> fixture_corpus()
{
    std::vector<Named> out;
    for (int n = 0; n <= 3; ++n)
        out.push_back({"delta(" + std::to_string(n) + ")", share(delta(n))});
    for (int n = 1; n <= 3; ++n)
        out.push_back({"boundary(" + std::to_string(n) + ")", share(boundary(n))});
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            out.push_back({"horn(" + std::to_string(n) + "," + std::to_string(k) + ")", share(horn(n, k))});
    out.push_back({"circle", share(circle())});
    out.push_back({"wedge_of_circles", share(wedge_of_circles())});
    out.push_back({"opposing_pair", share(opposing_pair())});
    for (int n = 1; n <= 3; ++n)
        out.push_back({"parallel_pair(" + std::to_string(n) + ")", share(parallel_pair(n))});
    out.push_back({"three_cycle", share(three_cycle())});
    out.push_back({"two_points", share(two_points())});
    return out;
}

inline std::vector<Named> un_corpus()
{
    std::vector<Named> out;
    for (auto& f : fixture_corpus())
        if (in_sset_un(*f.x))
            out.push_back(std::move(f));
    return out;
}

/// A downward closed family of faces of delta(n) generated by a few random
/// simplices.
inline SsetPtr random_subcomplex(std::mt19937_64& rng, int n)
{
    const std::uint32_t full = (1u << (n + 1)) - 1;
    std::uniform_int_distribution<std::uint32_t> pick(1, full);
    std::vector<std::uint32_t> tops;
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < count; ++k)
        tops.push_back(pick(rng));
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m <= full; ++m)
        if (std::any_of(tops.begin(), tops.end(), [m](std::uint32_t t) { return (m & ~t) == 0; }))
            masks.push_back(m);
    return share(delta_subcomplex(n, masks));
}

inline SsetPtr glue_parts(const std::vector<SsetPtr>& parts)
{
    if (parts.size() == 1)
        return parts.front();
    return coproduct(parts).object;
}

inline VertexPartition random_partition(std::mt19937_64& rng, const FiniteSimplicialSet& x, int blocks)
{
    const auto verts = x.generators_of_dim(0);
    std::vector<std::vector<GenId>> b(static_cast<std::size_t>(std::max(blocks, 1)));
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (GenId v : verts)
        b[pick(rng)].push_back(v);
    b.erase(std::remove_if(b.begin(), b.end(), [](const auto& blk) { return blk.empty(); }), b.end());
    return VertexPartition::from_blocks(x, std::move(b));
}

/// Random valid presentations: subcomplexes of simplices, glued, with
/// random vertex identifications and occasional degenerate edges.
inline SsetPtr random_presentation(std::mt19937_64& rng, std::size_t max_gens)
{
    for (;;) {
        std::vector<SsetPtr> parts{random_subcomplex(rng, std::uniform_int_distribution<int>(0, 3)(rng))};
        if (rng() % 2)
            parts.push_back(random_subcomplex(rng, std::uniform_int_distribution<int>(0, 2)(rng)));
        auto x = glue_parts(parts);
        const auto nv = x->generators_of_dim(0).size();
        x = quotient_vertices(x, random_partition(rng, *x, std::uniform_int_distribution<int>(1, static_cast<int>(nv))(rng)))
                .object;
        if (rng() % 3 == 0) {
            for (GenId e : x->generators_of_dim(1)) {
                const auto ends = edge_ends(*x, e);
                if (ends.first == ends.second) {
                    x = quotient(x, {{x->term(e), DegenerateTerm{MonotoneMap(0, {0, 0}), ends.first}}}).object;
                    break;
                }
            }
        }
        if (x->size() <= max_gens)
            return x;
    }
}

/// Random objects with Property B; Property C holds for some and fails for others.
inline SsetPtr random_b_object(std::mt19937_64& rng, std::size_t max_gens)
{
    for (;;) {
        std::vector<SsetPtr> parts;
        const int count = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int k = 0; k < count; ++k)
            parts.push_back(random_subcomplex(rng, std::uniform_int_distribution<int>(0, 2)(rng)));
        auto x = glue_parts(parts);
        const auto nv = x->generators_of_dim(0).size();
        if (rng() % 4 != 0)
            x = quotient_vertices(x, random_partition(rng, *x, std::uniform_int_distribution<int>(1, static_cast<int>(nv))(rng)))
                    .object;
        if (x->size() <= max_gens && property_B(*x))
            return x;
    }
}

/// Random objects with Property B that contain a copy of some family_F source,
/// so Property C usually fails.
inline SsetPtr random_non_c_object(std::mt19937_64& rng, std::size_t max_gens)
{
    const std::vector<SsetPtr> seeds{share(opposing_pair()), share(parallel_pair(1)), share(parallel_pair(2))};
    for (;;) {
        const auto& bad = seeds[rng() % seeds.size()];
        if (bad->size() > max_gens)
            continue;
        if (bad->size() == max_gens)
            return bad;
        auto x = coproduct({random_b_object(rng, max_gens - bad->size()), bad}).object;
        const auto nv = x->generators_of_dim(0).size();
        auto y = quotient_vertices(x, random_partition(rng, *x, std::uniform_int_distribution<int>(1, static_cast<int>(nv))(rng)))
                     .object;
        return property_B(*y) ? y : x;
    }
}

inline SsetPtr random_un_object(std::mt19937_64& rng, std::size_t max_gens)
{
    for (;;) {
        auto x = random_b_object(rng, max_gens);
        if (!in_sset_un(*x))
            x = normalize_to_un(x).object;
        if (!x->empty())
            return x;
    }
}

/// A random ordered simplicial complex: a random partial order (closed
/// from random pairs along a random linear extension) and random chains as
/// simplices.
inline OscPtr random_osc(std::mt19937_64& rng, int max_vertices)
{
    const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<char>> leq(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> pairs;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                pairs.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    for (auto [a, b] : pairs)
        leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    for (int i = 0; i < n; ++i)
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    std::vector<Osc::Simplex> simplices;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        Osc::Simplex s;
        for (int v = 0; v < n; ++v)
            if (m & (1u << v))
                s.push_back(v);
        bool chain = true;
        for (int a : s)
            for (int b : s)
                chain = chain && (leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ||
                                  leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
        if (chain && s.size() > 1 && std::bernoulli_distribution(0.35)(rng))
            simplices.push_back(std::move(s));
    }
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v)
        names.push_back(std::string(1, static_cast<char>('a' + v)));
    return share(Osc::generated(std::move(names), simplices, pairs));
}

inline std::optional<SimplicialMap> random_map(const SsetPtr& a, const SsetPtr& b, std::uint64_t seed)
{
    HomOptions o;
    o.shuffle = true;
    o.seed = seed;
    return find_hom(a, b, o);
}

inline std::optional<OscMap> random_osc_map(const OscPtr& a, const OscPtr& b, std::uint64_t seed)
{
    OscHomOptions o;
    o.shuffle = true;
    o.seed = seed;
    std::optional<OscMap> out;
    for_each_hom_osc(a, b, o, [&](const OscMap& m) {
        out = m;
        return false;
    });
    return out;
}

}  // namespace testkit
