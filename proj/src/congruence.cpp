#include "simpset/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace simpset {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t add()
    {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }
    std::size_t find(std::size_t a)
    {
        while (parent_[a] != a)
            a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// A right inverse of a surjection: the first point of every fibre.
MonotoneMap first_section(const MonotoneMap& s)
{
    std::vector<int> v;
    for (int i = 0; i <= s.domain_dim(); ++i)
        if (i == 0 || s(i) != s(i - 1))
            v.push_back(i);
    return MonotoneMap(s.domain_dim(), std::move(v));
}

TermPair ordered(DegenerateTerm a, DegenerateTerm b)
{
    if (b < a)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

// Everything the relation forces under the face maps, bucketed by dimension.
std::vector<std::vector<TermPair>> face_closure(const FiniteSimplicialSet& x, const std::vector<TermPair>& relation)
{
    std::vector<std::vector<TermPair>> by_dim(static_cast<std::size_t>(std::max(x.max_dim(), 0) + 1));
    std::set<TermPair> seen;
    std::vector<TermPair> stack;
    for (const auto& [a, b] : relation) {
        if (a.generator >= x.size() || b.generator >= x.size())
            throw UnknownGenerator("quotient: relation mentions an unknown generator");
        if (a.dim() != b.dim())
            throw DimensionMismatch("quotient: related terms have different dimensions");
        if (a.surjection.codomain_dim() != x.dim(a.generator) || b.surjection.codomain_dim() != x.dim(b.generator))
            throw DimensionMismatch("quotient: malformed term in relation");
        if (a == b)
            continue;
        auto p = ordered(a, b);
        if (seen.insert(p).second)
            stack.push_back(std::move(p));
    }
    while (!stack.empty()) {
        auto [a, b] = std::move(stack.back());
        stack.pop_back();
        const int d = a.dim();
        for (int i = 0; d > 0 && i <= d; ++i) {
            auto fa = apply_face(x, a, i);
            auto fb = apply_face(x, b, i);
            if (fa == fb)
                continue;
            auto p = ordered(std::move(fa), std::move(fb));
            if (seen.insert(p).second)
                stack.push_back(std::move(p));
        }
        if (static_cast<std::size_t>(d) >= by_dim.size())
            by_dim.resize(static_cast<std::size_t>(d) + 1);
        by_dim[static_cast<std::size_t>(d)].push_back({std::move(a), std::move(b)});
    }
    return by_dim;
}

}  // namespace

Projection quotient(const SsetPtr& xp, const std::vector<TermPair>& relation_in)
{
    const FiniteSimplicialSet& x = *xp;
    std::vector<TermPair> relation = relation_in;
    constexpr int kMaxRounds = 256;
    for (int round = 0; round < kMaxRounds; ++round) {
        const auto by_dim = face_closure(x, relation);
        // res[g] is the normal form of g in the quotient, written over
        // surviving generators of x
        std::vector<DegenerateTerm> res;
        res.reserve(x.size());
        for (GenId g = 0; g < x.size(); ++g)
            res.push_back(x.term(g));
        std::vector<TermPair> derived;

        for (int d = 0; d < static_cast<int>(by_dim.size()) && derived.empty(); ++d) {
            const auto& pairs = by_dim[static_cast<std::size_t>(d)];
            if (pairs.empty())
                continue;
            const auto gens = x.generators_of_dim(d);
            std::vector<std::size_t> local(x.size(), 0);
            for (std::size_t k = 0; k < gens.size(); ++k)
                local[gens[k]] = k;
            UnionFind uf(gens.size());
            std::map<DegenerateTerm, std::size_t> deg_node;
            std::vector<DegenerateTerm> deg_terms;
            auto node = [&](const DegenerateTerm& t) -> std::size_t {
                if (t.is_nondegenerate())
                    return local[t.generator];
                const auto& r = res[t.generator];
                DegenerateTerm nt{compose(r.surjection, t.surjection), r.generator};
                auto [it, fresh] = deg_node.emplace(nt, 0);
                if (fresh) {
                    it->second = uf.add();
                    deg_terms.push_back(std::move(nt));
                }
                return it->second;
            };
            for (const auto& [a, b] : pairs)
                uf.unite(node(a), node(b));

            // per class: the degenerate term it contains, or the least generator
            std::map<std::size_t, std::vector<std::size_t>> deg_of_class;
            for (std::size_t k = 0; k < deg_terms.size(); ++k)
                deg_of_class[uf.find(gens.size() + k)].push_back(k);
            for (const auto& [root, members] : deg_of_class) {
                if (members.size() < 2)
                    continue;
                // s1^* h1 = s2^* h2 in the quotient; restricting along a
                // section of each side recovers the lower relations forcing it
                const auto& t1 = deg_terms[members[0]];
                for (std::size_t m = 1; m < members.size(); ++m) {
                    const auto& t2 = deg_terms[members[m]];
                    derived.emplace_back(x.term(t1.generator),
                                         apply_operator(x, t2, first_section(t1.surjection)));
                    derived.emplace_back(x.term(t2.generator),
                                         apply_operator(x, t1, first_section(t2.surjection)));
                }
            }
            if (!derived.empty())
                break;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const std::size_t root = uf.find(k);
                if (auto it = deg_of_class.find(root); it != deg_of_class.end()) {
                    res[gens[k]] = deg_terms[it->second.front()];
                } else if (root != k) {
                    res[gens[k]] = x.term(gens[root]);
                }
            }
        }
        if (!derived.empty()) {
            const std::size_t before = relation.size();
            std::set<TermPair> have;
            for (const auto& [a, b] : relation)
                have.insert(ordered(a, b));
            for (auto& [a, b] : derived)
                if (!(a == b) && have.insert(ordered(a, b)).second)
                    relation.emplace_back(std::move(a), std::move(b));
            if (relation.size() == before)
                throw InternalError("quotient: inconsistent degenerate classes without new relations");
            continue;
        }

        std::vector<GenId> alive;
        for (GenId g = 0; g < x.size(); ++g)
            if (res[g].generator == g)
                alive.push_back(g);
        std::stable_sort(alive.begin(), alive.end(), [&](GenId a, GenId b) { return x.dim(a) < x.dim(b); });
        FiniteSimplicialSet out;
        std::vector<GenId> new_id(x.size(), ~GenId{0});
        for (GenId g : alive)
            new_id[g] = out.add_generator(x.name(g), x.dim(g));
        for (GenId g : alive) {
            for (int i = 0; x.dim(g) > 0 && i <= x.dim(g); ++i) {
                const auto& f = x.face(g, i);
                const auto& r = res[f.generator];
                out.set_face(new_id[g], i, {compose(r.surjection, f.surjection), new_id[r.generator]});
            }
            if (const auto* c = x.coordinates(g))
                out.set_coordinates(new_id[g], *c);
        }
        std::vector<DegenerateTerm> assignment;
        assignment.reserve(x.size());
        for (GenId g = 0; g < x.size(); ++g)
            assignment.push_back({res[g].surjection, new_id[res[g].generator]});
        auto obj = share(std::move(out));
        return {obj, SimplicialMap(xp, obj, std::move(assignment))};
    }
    throw InternalError("quotient: relation did not stabilise");
}

}  // namespace simpset
