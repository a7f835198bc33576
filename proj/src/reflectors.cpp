#include "simpset/reflectors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "simpset/builders.hpp"
#include "simpset/core.hpp"

namespace simpset {

SimplicialMap family_F(int i)
{
    if (i < 0)
        throw InvalidArgument("family_F: negative index");
    if (i == 0) {
        auto src = share(opposing_pair());
        return to_point(src, share(delta(0)));
    }
    auto src = share(parallel_pair(i));
    auto tgt = share(delta(i));
    const std::string top = subset_name((1u << (i + 1)) - 1);
    std::vector<DegenerateTerm> a;
    for (GenId g = 0; g < src->size(); ++g) {
        std::string name = src->name(g);
        if (name == top + "'")
            name = top;
        a.push_back(tgt->term(tgt->at(name)));
    }
    return SimplicialMap(src, tgt, std::move(a));
}

bool rlp_check(const SsetPtr& x, const SimplicialMap& f, const HomOptions& opts)
{
    // every restriction of a map target(f) -> x along f
    std::set<std::vector<DegenerateTerm>> extendable;
    for_each_hom(f.target(), x, opts, [&](const SimplicialMap& h) {
        extendable.insert(compose(h, f).assignment());
        return true;
    });
    bool ok = true;
    for_each_hom(f.source(), x, opts, [&](const SimplicialMap& g) {
        ok = extendable.count(g.assignment()) > 0;
        return ok;
    });
    return ok;
}

namespace {

// Equal vertices at positions i < j force the whole range i..j together;
// returns the block index of every position.
MonotoneMap forced_collapse(const std::vector<GenId>& tuple)
{
    const int n = static_cast<int>(tuple.size()) - 1;
    std::vector<int> last(tuple.size());
    for (int i = 0; i <= n; ++i) {
        last[static_cast<std::size_t>(i)] = i;
        for (int j = n; j > i; --j)
            if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)]) {
                last[static_cast<std::size_t>(i)] = j;
                break;
            }
    }
    std::vector<int> block;
    int reach = 0, b = 0;
    for (int p = 0; p <= n; ++p) {
        if (p > reach)
            ++b;
        reach = std::max(reach, last[static_cast<std::size_t>(p)]);
        block.push_back(b);
    }
    return MonotoneMap(b, std::move(block));
}

MonotoneMap first_section(const MonotoneMap& s)
{
    std::vector<int> v;
    for (int i = 0; i <= s.domain_dim(); ++i)
        if (i == 0 || s(i) != s(i - 1))
            v.push_back(i);
    return MonotoneMap(s.domain_dim(), std::move(v));
}

// Each group is one forced identification.
using Groups = std::vector<std::vector<TermPair>>;

Groups singular_pairs(const FiniteSimplicialSet& q, const std::vector<std::vector<GenId>>& table)
{
    Groups out;
    for (GenId g = 0; g < q.size(); ++g) {
        const auto s = forced_collapse(table[g]);
        if (s.is_identity())
            continue;
        out.push_back({{q.term(g), apply_operator(q, q.term(g), compose(first_section(s), s))}});
    }
    return out;
}

Groups opposing_pairs(const FiniteSimplicialSet& q, const std::vector<std::vector<GenId>>& table)
{
    std::map<std::pair<GenId, GenId>, GenId> edge_at;
    for (GenId e : q.generators_of_dim(1))
        edge_at.emplace(std::pair{table[e][0], table[e][1]}, e);
    Groups out;
    const MonotoneMap collapse(0, {0, 0});
    for (const auto& [ends, e] : edge_at) {
        if (ends.first >= ends.second)
            continue;
        auto it = edge_at.find({ends.second, ends.first});
        if (it == edge_at.end())
            continue;
        out.push_back({{q.term(e), DegenerateTerm{collapse, ends.first}},
                       {q.term(it->second), DegenerateTerm{collapse, ends.second}}});
    }
    return out;
}

Groups duplicate_pairs(const FiniteSimplicialSet& q, const std::vector<std::vector<GenId>>& table)
{
    std::map<std::vector<GenId>, GenId> first;
    Groups out;
    for (GenId g = 0; g < q.size(); ++g) {
        auto key = table[g];
        std::sort(key.begin(), key.end());
        auto [it, fresh] = first.emplace(std::move(key), g);
        if (!fresh)
            out.push_back({{q.term(it->second), q.term(g)}});
    }
    return out;
}

void certify(const Projection& p, bool need_c, const ReflectOptions& opts)
{
    const auto& y = *p.object;
    if (!property_B(y))
        throw UnsupportedSingularity("result still has a singular simplex");
    if (!need_c)
        return;
    if (!property_C(y))
        throw InternalError("localization result fails Property C");
    if (y.size() > opts.rlp_certify_limit)
        return;
    for (int i = 0; i <= std::max(y.max_dim(), 0); ++i)
        if (!rlp_check(p.object, family_F(i), opts.hom))
            throw InternalError("localization result fails the lifting property against f_" + std::to_string(i));
}

// Repeatedly quotients by forced identifications until none remain.
Projection saturate(const SsetPtr& x, bool localizing, const ReflectOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    Projection cur{x, SimplicialMap::identity(x)};
    for (;;) {
        const auto& q = *cur.object;
        const auto table = vertex_table(q);
        auto groups = singular_pairs(q, table);
        if (groups.empty() && localizing)
            groups = opposing_pairs(q, table);
        if (groups.empty() && localizing)
            groups = duplicate_pairs(q, table);
        if (groups.empty())
            break;
        std::vector<TermPair> pairs;
        if (opts.one_at_a_time) {
            std::size_t k = 0;
            if (opts.shuffle)
                k = std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng);
            pairs = groups[k];
        } else {
            for (auto& g : groups)
                pairs.insert(pairs.end(), g.begin(), g.end());
        }
        auto step = quotient(cur.object, pairs);
        cur = {step.object, compose(step.map, cur.map)};
    }
    return cur;
}

}  // namespace

Projection desingularize(const SsetPtr& x, const ReflectOptions& opts)
{
    auto p = saturate(x, false, opts);
    if (opts.certify)
        certify(p, false, opts);
    return p;
}

Projection localize(const SsetPtr& x, const ReflectOptions& opts)
{
    if (!property_B(*x))
        throw NotNonsingular("localize needs an input with Property B; use normalize");
    auto p = saturate(x, true, opts);
    if (opts.certify)
        certify(p, true, opts);
    return p;
}

Projection normalize_to_un(const SsetPtr& x, const ReflectOptions& opts)
{
    auto p = saturate(x, true, opts);
    if (opts.certify)
        certify(p, true, opts);
    return p;
}

SimplicialMap reflect_map(const Projection& p, const Projection& q, const SimplicialMap& f)
{
    if (p.map.source() != f.source() || q.map.source() != f.target())
        throw InvalidArgument("reflect_map: projections do not match the map");
    const auto& rx = *p.object;
    std::vector<std::optional<GenId>> witness(rx.size());
    for (GenId g = 0; g < p.map.source()->size(); ++g) {
        const auto& t = p.map(g);
        if (t.is_nondegenerate() && !witness[t.generator])
            witness[t.generator] = g;
    }
    std::vector<DegenerateTerm> a;
    for (GenId h = 0; h < rx.size(); ++h) {
        if (!witness[h])
            throw InternalError("reflect_map: projection misses '" + rx.name(h) + "'");
        a.push_back(q.map.image(f(*witness[h])));
    }
    SimplicialMap r(p.object, q.object, std::move(a));
    if (compose(r, p.map).assignment() != compose(q.map, f).assignment())
        throw InternalError("reflect_map: map does not factor through the reflection");
    return r;
}

TriangleReport localization_triangles(const SsetPtr& x, const ReflectOptions& opts)
{
    TriangleReport rep;
    const auto lx = localize(x, opts);                 // eta_X: X -> LX
    const auto llx = localize(lx.object, opts);        // eta_{LX}: LX -> LLX
    const Projection id_lx{lx.object, SimplicialMap::identity(lx.object)};
    const auto eps = reflect_map(llx, id_lx, SimplicialMap::identity(lx.object));  // LLX -> LX
    const auto l_eta = reflect_map(lx, llx, lx.map);                               // LX -> LLX
    rep.unit_side = compose(eps, l_eta).is_identity();
    rep.counit_side = compose(eps, llx.map).is_identity();
    return rep;
}

}  // namespace simpset
