#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "simpset/builders.hpp"
#include "simpset/core.hpp"
#include "simpset/hom.hpp"

using namespace simpset;

namespace {

std::vector<std::string> names_of(const FiniteSimplicialSet& x, const std::vector<GenId>& ids)
{
    std::vector<std::string> out;
    for (GenId g : ids)
        out.push_back(x.name(g));
    return out;
}

// Kahn's algorithm on the nondegenerate edge graph, self-loops included.
bool edge_graph_acyclic(const FiniteSimplicialSet& x)
{
    std::map<GenId, std::vector<GenId>> out;
    std::map<GenId, int> indeg;
    for (GenId v : x.generators_of_dim(0))
        indeg[v] = 0;
    for (GenId e : x.generators_of_dim(1)) {
        const auto t = oracle::vertex_tuple(x, e);
        out[t[0]].push_back(t[1]);
        ++indeg[t[1]];
    }
    std::queue<GenId> q;
    for (auto [v, d] : indeg)
        if (d == 0)
            q.push(v);
    std::size_t seen = 0;
    while (!q.empty()) {
        const GenId v = q.front();
        q.pop();
        ++seen;
        for (GenId w : out[v])
            if (--indeg[w] == 0)
                q.push(w);
    }
    return seen == indeg.size();
}

// Mutual reachability by transitive closure.
std::vector<std::vector<char>> reachability(const FiniteSimplicialSet& x, bool undirected)
{
    const std::size_t n = x.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (GenId v : x.generators_of_dim(0))
        r[v][v] = 1;
    for (GenId e : x.generators_of_dim(1)) {
        const auto t = oracle::vertex_tuple(x, e);
        r[t[0]][t[1]] = 1;
        if (undirected)
            r[t[1]][t[0]] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j])
                    r[i][j] = 1;
    return r;
}

DegenerateTerm random_term(std::mt19937_64& rng, const FiniteSimplicialSet& x)
{
    const GenId g = static_cast<GenId>(std::uniform_int_distribution<std::size_t>(0, x.size() - 1)(rng));
    const int n = x.dim(g);
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    std::vector<int> v;
    for (int i = 0; i <= n; ++i)
        v.push_back(i);
    for (int k = 0; k < extra; ++k)
        v.push_back(std::uniform_int_distribution<int>(0, n)(rng));
    std::sort(v.begin(), v.end());
    return {MonotoneMap(n, v), g};
}

MonotoneMap random_monotone(std::mt19937_64& rng, int m, int n)
{
    std::vector<int> v;
    for (int i = 0; i <= m; ++i)
        v.push_back(std::uniform_int_distribution<int>(0, n)(rng));
    std::sort(v.begin(), v.end());
    return MonotoneMap(n, v);
}

}  // namespace

TEST_CASE("validate examples")
{
    CHECK(validate(delta(2)).ok());
    CHECK(validate(circle()).ok());
    auto bad = delta(2);
    const GenId top = bad.at("012");
    bad.set_face(top, 0, bad.term(bad.at("01")));
    const auto report = validate(bad);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        found = found || (v.kind == "simplicial-identity" && v.generator == "012");
    CHECK(found);
    FiniteSimplicialSet missing;
    missing.add_generator("v", 0);
    missing.add_generator("e", 1);
    CHECK_FALSE(validate(missing).ok());
}

TEST_CASE("apply_operator examples")
{
    const auto d2 = delta(2);
    const auto top = d2.term(d2.at("012"));
    CHECK(apply_operator(d2, top, MonotoneMap::identity(2)) == top);
    CHECK(apply_operator(d2, top, MonotoneMap::face(2, 1)) == d2.term(d2.at("02")));
    const auto c = circle();
    CHECK(apply_operator(c, c.term(c.at("e")), MonotoneMap::vertex(1, 1)) == c.term(c.at("v")));
    const auto s = apply_operator(d2, d2.term(d2.at("01")), MonotoneMap(1, {0, 0, 1}));
    CHECK(s.generator == d2.at("01"));
    CHECK(s.surjection == MonotoneMap(1, {0, 0, 1}));
}

TEST_CASE("vertices examples")
{
    const auto d2 = delta(2);
    CHECK(names_of(d2, vertices(d2, d2.at("012"))) == std::vector<std::string>{"0", "1", "2"});
    const auto c = circle();
    CHECK(names_of(c, vertices(c, c.at("e"))) == std::vector<std::string>{"v", "v"});
    const auto d1 = delta(1);
    CHECK(names_of(d1, vertices(d1, d1.at("0"))) == std::vector<std::string>{"0"});
}

TEST_CASE("builders examples")
{
    const auto b2 = boundary(2);
    CHECK(b2.profile() == std::vector<std::size_t>{3, 3});
    const auto h = horn(2, 1);
    CHECK(h.profile() == std::vector<std::size_t>{3, 2});
    CHECK_FALSE(h.find("02"));
    const auto p = parallel_pair(1);
    CHECK(p.profile() == std::vector<std::size_t>{2, 2});
    const auto e = p.generators_of_dim(1);
    CHECK(vertices(p, e[0]) == vertices(p, e[1]));
    for (const auto& n : testkit::fixture_corpus())
        CHECK_MESSAGE(validate(*n.x).ok(), n.name);
}

TEST_CASE("property examples")
{
    CHECK_FALSE(property_B(circle()));
    for (int n = 0; n <= 4; ++n) {
        CHECK(property_B(delta(n)));
        CHECK(property_C(delta(n)));
    }
    CHECK(property_B(opposing_pair()));
    CHECK_FALSE(property_C(opposing_pair()));
    CHECK_THROWS_AS(property_C(circle()), NotNonsingular);
}

TEST_CASE("loop examples")
{
    CHECK(n_loop_detect(delta(3)).empty());
    const auto t = three_cycle();
    const auto loops = n_loop_detect(t);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].edges.size() == 3);
    // head to tail
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(edge_ends(t, loops[0].edges[k]).second == edge_ends(t, loops[0].edges[(k + 1) % 3]).first);
    const auto c = circle();
    REQUIRE(n_loop_detect(c).size() == 1);
    CHECK(n_loop_detect(c)[0].edges == std::vector<GenId>{c.at("e")});
}

TEST_CASE("fundamental category examples")
{
    const auto a = fundamental_category(delta(1));
    CHECK(a.objects.size() == 2);
    CHECK(a.arrows.size() == 1);
    CHECK(a.relations.empty());
    const auto b = fundamental_category(delta(2));
    CHECK(b.objects.size() == 3);
    CHECK(b.arrows.size() == 3);
    CHECK(b.relations.size() == 1);
    const auto c = fundamental_category(three_cycle());
    CHECK(c.objects.size() == 3);
    CHECK(c.arrows.size() == 3);
    CHECK(c.relations.empty());
}

TEST_CASE("scc examples")
{
    CHECK(scc_classes(three_cycle()).blocks.size() == 1);
    CHECK(scc_classes(delta(2)).is_discrete());
    CHECK(scc_classes(delta(2)).blocks.size() == 3);
    CHECK(scc_classes(opposing_pair()).blocks.size() == 1);
}

TEST_CASE("quotient_vertices examples")
{
    const auto d1 = share(delta(1));
    const auto q = quotient_vertices(d1, VertexPartition::from_blocks(*d1, {{d1->at("0"), d1->at("1")}}));
    CHECK(find_isomorphism(q.object, share(circle())));
    CHECK(q.map.check().ok());

    const auto d2 = share(delta(2));
    const auto id = quotient_vertices(d2, scc_classes(*d2));
    CHECK(same_presentation(*id.object, *d2));
    CHECK(id.map.is_identity());

    const auto t = share(three_cycle());
    const auto all = quotient_vertices(t, scc_classes(*t)).object;
    CHECK(all->profile() == std::vector<std::size_t>{1, 3});
    for (GenId e : all->generators_of_dim(1)) {
        const auto ends = edge_ends(*all, e);
        CHECK(ends.first == ends.second);
    }
}

TEST_CASE("hom examples")
{
    const auto tp = share(two_points());
    CHECK(hom_count(tp, tp) == 4);
    for (const auto& n : testkit::fixture_corpus())
        CHECK_MESSAGE(hom_count(share(delta(0)), n.x) == n.x->generators_of_dim(0).size(), n.name);
    const auto d1 = share(delta(1));
    CHECK(hom_count(d1, d1) == 3);
    CHECK(hom_count(share(circle()), share(delta(1))) == 2);
    CHECK(hom_count(share(delta(1)), share(circle())) == 2);
    CHECK(hom_count(share(delta(2)), share(circle())) == 3);
}

TEST_CASE("budget is enforced")
{
    HomOptions o;
    o.budget = 3;
    CHECK_THROWS_AS(hom_count(share(delta(2)), share(delta(3)), o), BudgetExceeded);
}

TEST_CASE("random presentations are valid and vertices match the face table")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const auto x = testkit::random_presentation(rng, 14);
        REQUIRE(validate(*x).ok());
        for (GenId g = 0; g < x->size(); ++g)
            CHECK(vertices(*x, g) == oracle::vertex_tuple(*x, g));
        CHECK(property_B(*x) == oracle::has_property_B(*x));
        if (oracle::has_property_B(*x))
            CHECK(property_C(*x) == oracle::has_property_C(*x));
        CHECK(n_loop_detect(*x).empty() == edge_graph_acyclic(*x));

        const auto reach = reachability(*x, false);
        const auto scc = scc_classes(*x);
        const auto conn = reachability(*x, true);
        const auto comps = path_components(*x);
        for (GenId u : x->generators_of_dim(0))
            for (GenId v : x->generators_of_dim(0)) {
                CHECK((scc.block_of[u] == scc.block_of[v]) == (reach[u][v] && reach[v][u]));
                CHECK((comps.block_of[u] == comps.block_of[v]) == static_cast<bool>(conn[u][v]));
            }
    }
}

TEST_CASE("apply_operator is a right action")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testkit::random_presentation(rng, 14);
        for (int k = 0; k < 10; ++k) {
            const auto t = random_term(rng, *x);
            const auto theta = random_monotone(rng, std::uniform_int_distribution<int>(0, 3)(rng), t.dim());
            const auto phi = random_monotone(rng, std::uniform_int_distribution<int>(0, 3)(rng), theta.domain_dim());
            CHECK(apply_operator(*x, apply_operator(*x, t, theta), phi) == apply_operator(*x, t, compose(theta, phi)));
            const auto r = apply_operator(*x, t, theta);
            CHECK(r.surjection.is_surjective());
            CHECK(r.dim() == theta.domain_dim());
        }
    }
}

TEST_CASE("hom counts agree with the vertex-map oracle on Properties B and C")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = testkit::random_un_object(rng, 7);
        const auto b = testkit::random_un_object(rng, 7);
        HomOptions general;
        general.route = HomOptions::Route::general;
        HomOptions vertex;
        vertex.route = HomOptions::Route::vertex;
        const auto expected = oracle::vertex_map_homs(*a, *b);
        CHECK(hom_count(a, b, general) == expected);
        CHECK(hom_count(a, b, vertex) == expected);
        for (const auto& f : hom_enumerate(a, b))
            CHECK(f.check().ok());
    }
}

TEST_CASE("map composition is associative and unital")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = testkit::random_presentation(rng, 8);
        const auto b = testkit::random_presentation(rng, 10);
        const auto c = testkit::random_presentation(rng, 10);
        const auto f = testkit::random_map(a, b, rng());
        const auto g = testkit::random_map(b, c, rng());
        if (!f || !g)
            continue;
        const auto id = SimplicialMap::identity(c);
        CHECK(compose(id, compose(*g, *f)) == compose(*g, *f));
        CHECK(compose(*g, *f).check().ok());
        const auto h = testkit::random_map(c, a, rng());
        if (h)
            CHECK(compose(*h, compose(*g, *f)) == compose(compose(*h, *g), *f));
    }
}

TEST_CASE("isomorphisms found by search agree with permutation search")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = testkit::random_un_object(rng, 7);
        std::vector<std::string> names;
        for (GenId g = 0; g < a->size(); ++g)
            names.push_back("r" + a->name(g));
        const auto b = share(rename_generators(*a, names));
        CHECK(find_isomorphism(a, b));
        const auto c = testkit::random_un_object(rng, 7);
        CHECK(find_isomorphism(a, c).has_value() == oracle::isomorphic_un(*a, *c));
    }
}
