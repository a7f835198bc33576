#pragma once

// Independent reference computations used to derive expected values.
// Nothing here calls the algorithms under test beyond reading the stored
// presentation data.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "simpset/homology.hpp"
#include "simpset/osc.hpp"
#include "simpset/simplicial_set.hpp"

namespace oracle {

using namespace simpset;

/// Strict chains in the poset of nonempty subsets of {0..n}, counted by
/// number of elements.
inline std::vector<std::size_t> subset_chain_profile(int n)
{
    const std::uint32_t full = (1u << (n + 1)) - 1;
    std::vector<std::size_t> counts;
    std::function<void(std::uint32_t, std::size_t)> extend = [&](std::uint32_t top, std::size_t len) {
        if (counts.size() < len)
            counts.resize(len, 0);
        ++counts[len - 1];
        for (std::uint32_t m = 1; m <= full; ++m)
            if (m != top && (top & ~m) == 0)
                extend(m, len + 1);
    };
    for (std::uint32_t m = 1; m <= full; ++m)
        extend(m, 1);
    return counts;
}

/// Vertex i of generator g read off the face records directly.
inline GenId vertex_at(const FiniteSimplicialSet& x, GenId g, int i)
{
    const int n = x.dim(g);
    if (n == 0)
        return g;
    // the last face keeps vertices 0..n-1, face 0 keeps 1..n
    const auto& f = i < n ? x.face(g, n) : x.face(g, 0);
    const int j = i < n ? i : n - 1;
    return vertex_at(x, f.generator, f.surjection(j));
}

inline std::vector<GenId> vertex_tuple(const FiniteSimplicialSet& x, GenId g)
{
    std::vector<GenId> t;
    for (int i = 0; i <= x.dim(g); ++i)
        t.push_back(vertex_at(x, g, i));
    return t;
}

inline bool has_property_B(const FiniteSimplicialSet& x)
{
    for (GenId g = 0; g < x.size(); ++g) {
        auto t = vertex_tuple(x, g);
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            return false;
    }
    return true;
}

inline bool has_property_C(const FiniteSimplicialSet& x)
{
    std::set<std::vector<GenId>> sets;
    for (GenId g = 0; g < x.size(); ++g) {
        auto t = vertex_tuple(x, g);
        std::sort(t.begin(), t.end());
        if (!sets.insert(t).second)
            return false;
    }
    return true;
}

/// Number of maps a -> b for b with Properties B and C: vertex maps under
/// which every generator's image tuple, with adjacent repeats removed, is
/// the tuple of a generator of b.
inline std::size_t vertex_map_homs(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b)
{
    std::set<std::vector<GenId>> tuples;
    for (GenId g = 0; g < b.size(); ++g)
        tuples.insert(vertex_tuple(b, g));
    const auto av = a.generators_of_dim(0);
    const auto bv = b.generators_of_dim(0);
    std::vector<std::vector<GenId>> at(a.size());
    for (GenId g = 0; g < a.size(); ++g)
        at[g] = vertex_tuple(a, g);
    std::map<GenId, GenId> img;
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == av.size()) {
            for (const auto& t : at) {
                std::vector<GenId> c;
                for (GenId v : t)
                    if (c.empty() || c.back() != img[v])
                        c.push_back(img[v]);
                if (!tuples.count(c))
                    return;
            }
            ++count;
            return;
        }
        for (GenId w : bv) {
            img[av[k]] = w;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

/// Isomorphism of objects with Properties B and C by trying every vertex
/// bijection against the sets of vertex tuples.
inline bool isomorphic_un(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b)
{
    if (a.size() != b.size())
        return false;
    const auto av = a.generators_of_dim(0);
    auto bv = b.generators_of_dim(0);
    if (av.size() != bv.size())
        return false;
    std::set<std::vector<GenId>> bt;
    for (GenId g = 0; g < b.size(); ++g)
        bt.insert(vertex_tuple(b, g));
    std::vector<std::vector<GenId>> at;
    for (GenId g = 0; g < a.size(); ++g)
        at.push_back(vertex_tuple(a, g));
    std::sort(bv.begin(), bv.end());
    do {
        std::map<GenId, GenId> m;
        for (std::size_t k = 0; k < av.size(); ++k)
            m[av[k]] = bv[k];
        std::set<std::vector<GenId>> image;
        for (const auto& t : at) {
            std::vector<GenId> u;
            for (GenId v : t)
                u.push_back(m[v]);
            image.insert(u);
        }
        if (image == bt)
            return true;
    } while (std::next_permutation(bv.begin(), bv.end()));
    return false;
}

/// Every vertex map a -> b checked against the order and the simplices.
inline std::vector<std::vector<int>> osc_homs(const Osc& a, const Osc& b)
{
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 0);
    if (m == 0)
        return n == 0 ? std::vector<std::vector<int>>{{}} : out;
    for (;;) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = 0; v < n && ok; ++v)
                if (a.leq(static_cast<int>(u), static_cast<int>(v)))
                    ok = b.leq(f[u], f[v]);
        for (auto it = a.simplices().begin(); ok && it != a.simplices().end(); ++it) {
            std::vector<int> s;
            for (int v : *it)
                s.push_back(f[static_cast<std::size_t>(v)]);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            ok = b.simplices().count(s) > 0;
        }
        if (ok)
            out.push_back(f);
        std::size_t k = 0;
        while (k < n && ++f[k] == static_cast<int>(m))
            f[k++] = 0;
        if (k == n)
            break;
    }
    return out;
}

/// Smith invariants as ratios of determinantal divisors (gcd of k x k minors).
inline std::vector<Integer> determinantal_invariants(const IntMatrix& m)
{
    auto det = [](std::vector<std::vector<Integer>> a) {
        const std::size_t n = a.size();
        Integer d = 1;
        // cofactor expansion is enough for the tiny sizes used here
        std::function<Integer(const std::vector<std::vector<Integer>>&)> rec =
            [&](const std::vector<std::vector<Integer>>& b) -> Integer {
            const std::size_t k = b.size();
            if (k == 1)
                return b[0][0];
            Integer s = 0;
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<std::vector<Integer>> minor;
                for (std::size_t i = 1; i < k; ++i) {
                    std::vector<Integer> row;
                    for (std::size_t c = 0; c < k; ++c)
                        if (c != j)
                            row.push_back(b[i][c]);
                    minor.push_back(row);
                }
                s += (j % 2 ? -1 : 1) * b[0][j] * rec(minor);
            }
            return s;
        };
        d = n == 0 ? Integer(1) : rec(a);
        return d;
    };
    std::vector<Integer> divisors{1};
    const std::size_t r = std::min(m.rows, m.cols);
    for (std::size_t k = 1; k <= r; ++k) {
        Integer g = 0;
        std::vector<std::size_t> rows(k), cols(k);
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
            if (at == k) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t i = from; i < m.rows; ++i) {
                rows[at] = i;
                pick_rows(at + 1, i + 1);
            }
        };
        pick_cols = [&](std::size_t at, std::size_t from) {
            if (at == k) {
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m(rows[i], cols[j]);
                g = gcd(g, abs(det(sub)));
                return;
            }
            for (std::size_t j = from; j < m.cols; ++j) {
                cols[at] = j;
                pick_cols(at + 1, j + 1);
            }
        };
        pick_rows(0, 0);
        if (g == 0)
            break;
        divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k)
        out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

/// Rank of an integer matrix over Z/p.
inline std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            a[i][j] = ((m(i, j) % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        std::swap(a[piv], a[rank]);
        const auto iv = inv(a[rank][c]);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != rank && a[i][c] != 0) {
                const auto f = a[i][c] * iv % p;
                for (std::size_t j = c; j < m.cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

/// Betti numbers over Z/p from the boundary matrices: dim ker - dim im.
inline std::vector<std::size_t> betti_mod_p(const IntegerChainComplex& c, int max_dim, std::int64_t p)
{
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_dim) + 2, 0);
    for (std::size_t n = 1; n < ranks.size() && n < c.boundary.size(); ++n)
        ranks[n] = rank_mod_p(c.boundary[n].dense(), p);
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_dim; ++n) {
        const std::size_t cn = static_cast<std::size_t>(n) < c.boundary.size() ? c.boundary[static_cast<std::size_t>(n)].cols : 0;
        out.push_back(cn - ranks[static_cast<std::size_t>(n)] - ranks[static_cast<std::size_t>(n) + 1]);
    }
    return out;
}

}  // namespace oracle
