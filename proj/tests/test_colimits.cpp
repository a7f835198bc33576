#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "simpset/builders.hpp"
#include "simpset/colimits.hpp"
#include "simpset/core.hpp"
#include "simpset/hom.hpp"
#include "simpset/subdivision.hpp"

using namespace simpset;

namespace {

using Assignment = std::vector<DegenerateTerm>;
using Cocone = std::pair<Assignment, Assignment>;

// hom(P, Z) against the compatible pairs hom(B, Z) x hom(C, Z), by brute force.
void check_pushout_universal(const SimplicialMap& left, const SimplicialMap& right, const Pushout& p, const SsetPtr& z)
{
    std::set<Cocone> compatible;
    const auto us = hom_enumerate(left.target(), z);
    const auto vs = hom_enumerate(right.target(), z);
    for (const auto& u : us)
        for (const auto& v : vs)
            if (compose(u, left) == compose(v, right))
                compatible.insert({u.assignment(), v.assignment()});
    std::set<Cocone> induced;
    std::size_t count = 0;
    for (const auto& h : hom_enumerate(p.object, z)) {
        induced.insert({compose(h, p.left_leg).assignment(), compose(h, p.right_leg).assignment()});
        ++count;
    }
    CHECK(induced.size() == count);
    CHECK(induced == compatible);
}

void check_coequalizer_universal(const SimplicialMap& f, const SimplicialMap& g, const Projection& q, const SsetPtr& z)
{
    std::set<Assignment> equalizing;
    for (const auto& u : hom_enumerate(f.target(), z))
        if (compose(u, f) == compose(u, g))
            equalizing.insert(u.assignment());
    std::set<Assignment> induced;
    std::size_t count = 0;
    for (const auto& h : hom_enumerate(q.object, z)) {
        induced.insert(compose(h, q.map).assignment());
        ++count;
    }
    CHECK(induced.size() == count);
    CHECK(induced == equalizing);
}

// A random span whose left leg is the inclusion of an induced subobject.
std::optional<std::pair<SimplicialMap, SimplicialMap>> random_span(std::mt19937_64& rng, const SsetPtr& b,
                                                                   const SsetPtr& c)
{
    auto verts = b->generators_of_dim(0);
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(std::uniform_int_distribution<std::size_t>(1, verts.size())(rng));
    const auto j = induced_subobject(b, verts);
    const auto g = testkit::random_map(j.source(), c, rng());
    if (!g)
        return std::nullopt;
    return std::make_pair(j, *g);
}

}  // namespace

TEST_CASE("coproduct")
{
    const auto c = coproduct({share(delta(1)), share(circle())});
    CHECK(c.object->profile() == std::vector<std::size_t>{3, 2});
    CHECK(c.object->find("0:01"));
    CHECK(c.object->find("1:e"));
    REQUIRE(c.injections.size() == 2);
    for (const auto& i : c.injections) {
        CHECK(i.check().ok());
        CHECK(i.is_injective());
    }
    CHECK(coproduct({}).object->empty());
}

TEST_CASE("full inclusion examples")
{
    const auto h = share(horn(2, 1));
    const auto d = share(delta(2));
    CHECK_FALSE(is_full_simplicial_inclusion(delta_inclusion(h, d)));
    CHECK(is_full_simplicial_inclusion(sd_iter_map(delta_inclusion(h, d), 1)));
    for (const auto& n : testkit::fixture_corpus())
        CHECK(is_full_simplicial_inclusion(SimplicialMap::identity(n.x)));
    CHECK_FALSE(is_full_simplicial_inclusion(to_point(share(delta(1)), share(delta(0)))));
}

TEST_CASE("induced subobjects are full")
{
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 80; ++trial) {
        const auto x = testkit::random_presentation(rng, 14);
        auto verts = x->generators_of_dim(0);
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(std::uniform_int_distribution<std::size_t>(0, verts.size())(rng));
        const auto j = induced_subobject(x, verts);
        CHECK(j.check().ok());
        CHECK(is_full_simplicial_inclusion(j));
        CHECK(j.source()->generators_of_dim(0).size() == verts.size());
    }
}

TEST_CASE("pushout_sset examples")
{
    const auto b1 = share(boundary(1));
    const auto d1 = share(delta(1));
    const auto pt = share(delta(0));
    const auto inc = delta_inclusion(b1, d1);
    const auto p = pushout_sset(to_point(b1, pt), inc);
    CHECK(find_isomorphism(p.object, share(circle())));
    CHECK(compose(p.left_leg, to_point(b1, pt)) == compose(p.right_leg, inc));

    const auto q = pushout_sset(inc, inc);
    CHECK(find_isomorphism(q.object, share(parallel_pair(1))));

    const auto c = share(three_cycle());
    const auto f = *testkit::random_map(d1, c, 3);
    const auto r = pushout_sset(SimplicialMap::identity(d1), f);
    CHECK(same_presentation(*r.object, *c));
    CHECK(r.right_leg.is_identity());
}

TEST_CASE("pushout_un example")
{
    const auto b1 = share(boundary(1));
    const auto p = pushout_un(to_point(b1, share(delta(0))), delta_inclusion(b1, share(delta(1))));
    CHECK(p.object->size() == 1);
    CHECK(in_sset_un(*p.object));
}

TEST_CASE("pushouts commute and are universal")
{
    std::mt19937_64 rng(101);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto b = testkit::random_presentation(rng, 7);
        const auto c = testkit::random_presentation(rng, 7);
        const auto span = random_span(rng, b, c);
        if (!span)
            continue;
        ++checked;
        const auto& [j, g] = *span;
        const auto p = pushout_sset(j, g);
        CHECK(validate(*p.object).ok());
        CHECK(compose(p.left_leg, j) == compose(p.right_leg, g));
        // the leg opposite the injective one stays injective
        CHECK(p.right_leg.is_injective());
        const auto z = testkit::random_presentation(rng, 5);
        check_pushout_universal(j, g, p, z);
    }
    CHECK(checked > 20);
}

TEST_CASE("pushouts in the reflective subcategories are universal there")
{
    std::mt19937_64 rng(103);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto b = testkit::random_un_object(rng, 7);
        const auto c = testkit::random_un_object(rng, 7);
        const auto span = random_span(rng, b, c);
        if (!span)
            continue;
        ++checked;
        const auto& [j, g] = *span;
        const auto un = pushout_un(j, g);
        CHECK(in_sset_un(*un.object));
        CHECK(compose(un.left_leg, j) == compose(un.right_leg, g));
        check_pushout_universal(j, g, un, testkit::random_un_object(rng, 5));
        const auto ns = pushout_ns(j, g);
        CHECK(property_B(*ns.object));
        check_pushout_universal(j, g, ns, testkit::random_b_object(rng, 5));
        // full inclusions are preserved by the reflected pushout
        CHECK(is_full_simplicial_inclusion(un.right_leg));
    }
    CHECK(checked > 20);
}

TEST_CASE("coequalizer examples")
{
    const auto d1 = share(delta(1));
    const auto id = SimplicialMap::identity(d1);
    const auto same = coequalizer_sset(id, id);
    CHECK(same_presentation(*same.object, *d1));
    CHECK(same.map.is_identity());

    const auto d0 = share(delta(0));
    const SimplicialMap v0(d0, d1, {d1->term(d1->at("0"))});
    const SimplicialMap v1(d0, d1, {d1->term(d1->at("1"))});
    const auto q = coequalizer_sset(v0, v1);
    CHECK(find_isomorphism(q.object, share(circle())));
    const auto u = coequalizer_un(v0, v1);
    CHECK(u.object->size() == 1);
}

TEST_CASE("coequalizers are universal")
{
    std::mt19937_64 rng(107);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto a = testkit::random_presentation(rng, 4);
        const auto b = testkit::random_presentation(rng, 8);
        const auto f = testkit::random_map(a, b, rng());
        const auto g = testkit::random_map(a, b, rng());
        if (!f || !g)
            continue;
        ++checked;
        const auto q = coequalizer_sset(*f, *g);
        CHECK(compose(q.map, *f) == compose(q.map, *g));
        check_coequalizer_universal(*f, *g, q, testkit::random_presentation(rng, 5));
        const auto qu = coequalizer_un(*f, *g);
        CHECK(in_sset_un(*qu.object));
        check_coequalizer_universal(*f, *g, qu, testkit::random_un_object(rng, 5));
    }
    CHECK(checked > 20);
}

TEST_CASE("cell chains")
{
    const auto base = sd_iter(share(delta(2)), 2);
    const auto empty = cell_chain(base, {});
    CHECK(empty.stages.size() == 1);
    CHECK(empty.composite().is_identity());

    const auto cell = sd_iter_map(delta_inclusion(share(horn(2, 1)), share(delta(2))), 2);
    const auto attach = *testkit::random_map(cell.source(), base, 5);
    const auto one = cell_chain(base, {{cell, attach}});
    REQUIRE(one.stages.size() == 2);
    const auto direct = pushout_un(cell, attach);
    CHECK(oracle::isomorphic_un(*one.stages[1], *direct.object));
    CHECK(in_sset_un(*one.stages[1]));

    const auto attach2 = *testkit::random_map(cell.source(), one.stages[1], 9);
    const auto two = cell_chain(base, {{cell, attach}, {cell, attach2}});
    REQUIRE(two.stages.size() == 3);
    REQUIRE(two.from_base.size() == 3);
    CHECK(two.composite().source() == base);
    CHECK(two.composite().target() == two.stages[2]);
    CHECK(two.composite().check().ok());
}
