#include "simpset/builders.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace simpset {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

std::vector<int> bits_of(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u)
            out.push_back(i);
    return out;
}

void check_dim(int n)
{
    if (n < 0 || n > 30)
        throw InvalidArgument("simplex dimension " + std::to_string(n) + " out of range");
}

}  // namespace

std::string subset_name(std::uint32_t mask)
{
    std::string s;
    for (int b : bits_of(mask)) {
        if (b >= 36)
            throw InvalidArgument("subset_name: vertex index too large");
        s += kDigits[b];
    }
    return s;
}

FiniteSimplicialSet delta_subcomplex(int n, const std::vector<std::uint32_t>& masks)
{
    check_dim(n);
    std::vector<std::uint32_t> sorted = masks;
    std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : subset_name(a) < subset_name(b);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::uint32_t full = (1u << (n + 1)) - 1;
    FiniteSimplicialSet x;
    std::map<std::uint32_t, GenId> id;
    for (std::uint32_t m : sorted) {
        if (m == 0 || (m & ~full))
            throw InvalidArgument("delta_subcomplex: subset outside [" + std::to_string(n) + "]");
        const auto elems = bits_of(m);
        const GenId g = x.add_generator(subset_name(m), static_cast<int>(elems.size()) - 1);
        id[m] = g;
        if (elems.size() == 1) {
            std::vector<double> c(static_cast<std::size_t>(n), 0.0);
            if (elems[0] > 0)
                c[static_cast<std::size_t>(elems[0] - 1)] = 1.0;
            x.set_coordinates(g, std::move(c));
            continue;
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            auto it = id.find(m & ~(1u << elems[i]));
            if (it == id.end())
                throw InvalidArgument("delta_subcomplex: subsets not closed under faces");
            x.set_face(g, static_cast<int>(i), x.term(it->second));
        }
    }
    return x;
}

namespace {

std::vector<std::uint32_t> subsets_where(int n, bool (*keep)(std::uint32_t, int, int), int k)
{
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (1u << (n + 1)) - 1;
    for (std::uint32_t m = 1; m <= full; ++m)
        if (keep(m, n, k))
            out.push_back(m);
    return out;
}

}  // namespace

FiniteSimplicialSet delta(int n)
{
    check_dim(n);
    return delta_subcomplex(n, subsets_where(n, [](std::uint32_t, int, int) { return true; }, 0));
}

FiniteSimplicialSet boundary(int n)
{
    check_dim(n);
    return delta_subcomplex(
        n, subsets_where(n, [](std::uint32_t m, int nn, int) { return m != (1u << (nn + 1)) - 1; }, 0));
}

FiniteSimplicialSet horn(int n, int k)
{
    check_dim(n);
    if (k < 0 || k > n)
        throw InvalidArgument("horn(" + std::to_string(n) + "," + std::to_string(k) + "): index out of range");
    return delta_subcomplex(n, subsets_where(
                                   n,
                                   [](std::uint32_t m, int nn, int kk) {
                                       const std::uint32_t full = (1u << (nn + 1)) - 1;
                                       return m != full && m != (full & ~(1u << kk));
                                   },
                                   k));
}

FiniteSimplicialSet circle()
{
    FiniteSimplicialSet x;
    const GenId v = x.add_generator("v", 0);
    const GenId e = x.add_generator("e", 1);
    x.set_face(e, 0, x.term(v));
    x.set_face(e, 1, x.term(v));
    return x;
}

FiniteSimplicialSet opposing_pair()
{
    FiniteSimplicialSet x;
    const GenId v0 = x.add_generator("0", 0);
    const GenId v1 = x.add_generator("1", 0);
    const GenId a = x.add_generator("a", 1);
    const GenId b = x.add_generator("b", 1);
    x.set_face(a, 0, x.term(v1));
    x.set_face(a, 1, x.term(v0));
    x.set_face(b, 0, x.term(v0));
    x.set_face(b, 1, x.term(v1));
    return x;
}

FiniteSimplicialSet parallel_pair(int n)
{
    if (n < 1)
        throw InvalidArgument("parallel_pair(" + std::to_string(n) + "): need n >= 1");
    FiniteSimplicialSet x = boundary(n);
    const std::uint32_t full = (1u << (n + 1)) - 1;
    const std::string name = subset_name(full);
    for (const std::string& top : {name, name + "'"}) {
        const GenId g = x.add_generator(top, n);
        for (int i = 0; i <= n; ++i)
            x.set_face(g, i, x.term(x.at(subset_name(full & ~(1u << i)))));
    }
    return x;
}

FiniteSimplicialSet three_cycle()
{
    FiniteSimplicialSet x;
    const GenId a = x.add_generator("a", 0);
    const GenId b = x.add_generator("b", 0);
    const GenId c = x.add_generator("c", 0);
    const std::pair<GenId, GenId> arcs[] = {{a, b}, {b, c}, {c, a}};
    for (auto [s, t] : arcs) {
        const GenId e = x.add_generator(x.name(s) + x.name(t), 1);
        x.set_face(e, 0, x.term(t));
        x.set_face(e, 1, x.term(s));
    }
    return x;
}

FiniteSimplicialSet two_points()
{
    FiniteSimplicialSet x;
    x.add_generator("a", 0);
    x.add_generator("b", 0);
    return x;
}

FiniteSimplicialSet wedge_of_circles()
{
    FiniteSimplicialSet x;
    const GenId v = x.add_generator("v", 0);
    for (const char* name : {"e1", "e2"}) {
        const GenId e = x.add_generator(name, 1);
        x.set_face(e, 0, x.term(v));
        x.set_face(e, 1, x.term(v));
    }
    return x;
}

FiniteSimplicialSet disjoint_union(const std::vector<const FiniteSimplicialSet*>& parts)
{
    // coordinates survive only when every part agrees on their length
    std::set<std::size_t> lengths;
    for (const auto* p : parts)
        for (GenId g = 0; g < p->size(); ++g)
            if (const auto* c = p->coordinates(g))
                lengths.insert(c->size());
    const bool keep_coords = lengths.size() <= 1;
    FiniteSimplicialSet out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = *parts[k];
        const std::string prefix = std::to_string(k) + ":";
        std::vector<GenId> id(p.size());
        for (GenId g = 0; g < p.size(); ++g)
            id[g] = out.add_generator(prefix + p.name(g), p.dim(g));
        for (GenId g = 0; g < p.size(); ++g) {
            for (int i = 0; p.dim(g) > 0 && i <= p.dim(g); ++i) {
                const auto& f = p.face(g, i);
                out.set_face(id[g], i, {f.surjection, id[f.generator]});
            }
            if (const auto* c = p.coordinates(g); c && keep_coords)
                out.set_coordinates(id[g], *c);
        }
    }
    return out;
}

SimplicialMap delta_inclusion(const SsetPtr& sub, const SsetPtr& full)
{
    std::vector<DegenerateTerm> a;
    for (GenId g = 0; g < sub->size(); ++g)
        a.push_back(full->term(full->at(sub->name(g))));
    return SimplicialMap(sub, full, std::move(a));
}

SimplicialMap induced_subobject(const SsetPtr& x, const std::vector<GenId>& vertex_set)
{
    std::vector<bool> in(x->size(), false);
    for (GenId v : vertex_set) {
        if (v >= x->size() || x->dim(v) != 0)
            throw InvalidArgument("induced_subobject: not a vertex");
        in[v] = true;
    }
    const auto table = vertex_table(*x);
    FiniteSimplicialSet sub;
    std::vector<GenId> id(x->size(), ~GenId{0});
    std::vector<GenId> order(x->size());
    for (GenId g = 0; g < x->size(); ++g)
        order[g] = g;
    std::stable_sort(order.begin(), order.end(), [&](GenId a, GenId b) { return x->dim(a) < x->dim(b); });
    std::vector<DegenerateTerm> assignment;
    for (GenId g : order) {
        if (!std::all_of(table[g].begin(), table[g].end(), [&](GenId v) { return in[v]; }))
            continue;
        id[g] = sub.add_generator(x->name(g), x->dim(g));
        assignment.push_back(x->term(g));
        for (int i = 0; x->dim(g) > 0 && i <= x->dim(g); ++i) {
            const auto& f = x->face(g, i);
            sub.set_face(id[g], i, {f.surjection, id[f.generator]});
        }
        if (const auto* c = x->coordinates(g))
            sub.set_coordinates(id[g], *c);
    }
    return SimplicialMap(share(std::move(sub)), x, std::move(assignment));
}

SimplicialMap to_point(const SsetPtr& x, const SsetPtr& point)
{
    if (point->size() != 1 || point->dim(0) != 0)
        throw InvalidArgument("to_point: target is not a point");
    std::vector<DegenerateTerm> a;
    for (GenId g = 0; g < x->size(); ++g)
        a.push_back({MonotoneMap(0, std::vector<int>(static_cast<std::size_t>(x->dim(g) + 1), 0)), 0});
    return SimplicialMap(x, point, std::move(a));
}

}  // namespace simpset
