#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "simpset/delta.hpp"

using namespace simpset;

namespace {

MonotoneMap mm(int n, std::vector<int> v)
{
    return MonotoneMap(n, std::move(v));
}

MonotoneMap random_map(std::mt19937_64& rng, int m, int n)
{
    std::vector<int> v;
    std::uniform_int_distribution<int> d(0, n);
    for (int i = 0; i <= m; ++i)
        v.push_back(d(rng));
    std::sort(v.begin(), v.end());
    return MonotoneMap(n, v);
}

// Reference factorization: the sorted image, then each value's rank in it.
std::pair<std::vector<int>, std::vector<int>> image_then_collapse(const MonotoneMap& f)
{
    std::set<int> image(f.values().begin(), f.values().end());
    std::vector<int> inj(image.begin(), image.end());
    std::vector<int> surj;
    for (int v : f.values())
        surj.push_back(static_cast<int>(std::distance(image.begin(), image.find(v))));
    return {surj, inj};
}

}  // namespace

TEST_CASE("construction rejects malformed maps")
{
    CHECK_THROWS_AS(mm(1, {1, 0}), InvalidArgument);
    CHECK_THROWS_AS(mm(1, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(mm(1, {}), InvalidArgument);
}

TEST_CASE("compose evaluates pointwise")
{
    CHECK(compose(MonotoneMap::identity(2), MonotoneMap::identity(2)) == MonotoneMap::identity(2));
    CHECK(compose(mm(2, {1, 2}), mm(1, {0, 0, 1})) == mm(2, {1, 1, 2}));
    CHECK(compose(mm(0, {0, 0}), mm(1, {1})) == mm(0, {0}));
    CHECK_THROWS_AS(compose(mm(2, {0, 1}), mm(2, {0, 1})), DimensionMismatch);
}

TEST_CASE("faces and degeneracies")
{
    CHECK(MonotoneMap::face(1, 0) == mm(1, {1}));
    CHECK(MonotoneMap::degeneracy(0, 0) == mm(0, {0, 0}));
    CHECK(MonotoneMap::face(2, 1) == mm(2, {0, 2}));
    CHECK(MonotoneMap::degeneracy(2, 1) == mm(2, {0, 1, 1, 2}));
    CHECK(MonotoneMap::vertex(3, 2) == mm(3, {2}));
}

TEST_CASE("ez_factorize examples")
{
    auto id = ez_factorize(MonotoneMap::identity(3));
    CHECK(id.surjection == MonotoneMap::identity(3));
    CHECK(id.injection == MonotoneMap::identity(3));
    auto a = ez_factorize(mm(1, {0, 0, 1}));
    CHECK(a.surjection == mm(1, {0, 0, 1}));
    CHECK(a.injection == MonotoneMap::identity(1));
    auto b = ez_factorize(mm(2, {1, 1, 2}));
    CHECK(b.surjection == mm(1, {0, 0, 1}));
    CHECK(b.injection == mm(2, {1, 2}));
}

TEST_CASE("composition is associative with neutral identities")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> d(0, 6);
        const int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        auto h = random_map(rng, a, b);
        auto g = random_map(rng, b, c);
        auto f = random_map(rng, c, e);
        CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
        CHECK(compose(MonotoneMap::identity(e), f) == f);
        CHECK(compose(f, MonotoneMap::identity(c)) == f);
        for (int i = 0; i <= a; ++i)
            CHECK(compose(g, h)(i) == g(h(i)));
    }
}

TEST_CASE("EZ factors agree with image-then-collapse and recompose")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> d(0, 6);
        auto f = random_map(rng, d(rng), d(rng));
        auto ez = ez_factorize(f);
        const auto [surj, inj] = image_then_collapse(f);
        CHECK(std::vector<int>(ez.surjection.values().begin(), ez.surjection.values().end()) == surj);
        CHECK(std::vector<int>(ez.injection.values().begin(), ez.injection.values().end()) == inj);
        CHECK(compose(ez.injection, ez.surjection) == f);
        CHECK(ez.surjection.is_surjective());
        CHECK(ez.injection.is_injective());
        if (f.is_surjective())
            CHECK(ez.injection.is_identity());
        if (f.is_injective())
            CHECK(ez.surjection.is_identity());
    }
}

TEST_CASE("simplicial identities as operator equations")
{
    for (int n = 2; n <= 7; ++n) {
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(MonotoneMap::face(n, j), MonotoneMap::face(n - 1, i)) ==
                      compose(MonotoneMap::face(n, i), MonotoneMap::face(n - 1, j - 1)));
    }
    for (int n = 1; n <= 6; ++n) {
        // s_j s_i = s_i s_{j+1} for i <= j, as maps [n+2] -> [n]
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(compose(MonotoneMap::degeneracy(n, j), MonotoneMap::degeneracy(n + 1, i)) ==
                      compose(MonotoneMap::degeneracy(n, i), MonotoneMap::degeneracy(n + 1, j + 1)));
        // d_i s_j: face then degeneracy as maps [n] -> [n]
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = compose(MonotoneMap::degeneracy(n, j), MonotoneMap::face(n + 1, i));
                if (i == j || i == j + 1)
                    CHECK(lhs.is_identity());
                else if (i < j)
                    CHECK(lhs == compose(MonotoneMap::face(n, i), MonotoneMap::degeneracy(n - 1, j - 1)));
                else
                    CHECK(lhs == compose(MonotoneMap::face(n, i - 1), MonotoneMap::degeneracy(n - 1, j)));
            }
    }
}

TEST_CASE("elementary degeneracies reproduce the surjection")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> d(0, 5);
        const int n = d(rng);
        const int m = n + d(rng);
        // a random surjection [m] -> [n]
        std::vector<int> v;
        std::vector<int> pos(static_cast<std::size_t>(m));
        std::iota(pos.begin(), pos.end(), 1);
        std::shuffle(pos.begin(), pos.end(), rng);
        std::set<int> steps(pos.begin(), pos.begin() + n);
        int cur = 0;
        for (int i = 0; i <= m; ++i) {
            if (steps.count(i))
                ++cur;
            v.push_back(cur);
        }
        MonotoneMap s(n, v);
        auto js = s.elementary_degeneracies();
        CHECK(std::is_sorted(js.rbegin(), js.rend()));
        MonotoneMap acc = MonotoneMap::identity(m);
        int dim = m;
        for (int j : js) {
            acc = compose(MonotoneMap::degeneracy(dim - 1, j), acc);
            --dim;
        }
        CHECK(acc == s);
    }
}
