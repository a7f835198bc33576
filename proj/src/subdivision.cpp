#include "simpset/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "simpset/builders.hpp"

namespace simpset {

namespace {

using FlagKey = std::pair<GenId, std::vector<std::uint32_t>>;
using FlagIndex = std::map<FlagKey, GenId>;

std::uint32_t full_mask(int n)
{
    return (1u << (n + 1)) - 1;
}

void extend_down(std::vector<std::uint32_t>& chain, std::vector<std::vector<std::vector<std::uint32_t>>>& out)
{
    // chain is stored top first
    std::vector<std::uint32_t> flag(chain.rbegin(), chain.rend());
    out[chain.size() - 1].push_back(std::move(flag));
    const std::uint32_t top = chain.back();
    for (std::uint32_t s = (top - 1) & top; s != 0; s = (s - 1) & top) {
        chain.push_back(s);
        extend_down(chain, out);
        chain.pop_back();
    }
}

// The image of a subset of [m] under a monotone map.
std::uint32_t push_subset(const MonotoneMap& s, std::uint32_t subset)
{
    std::uint32_t out = 0;
    for (int i = 0; i <= s.domain_dim(); ++i)
        if (subset >> i & 1u)
            out |= 1u << s(i);
    return out;
}

// Preimage of a subset of [n] under an injection [m] -> [n].
std::uint32_t pull_subset(const MonotoneMap& iota, std::uint32_t subset)
{
    std::uint32_t out = 0;
    for (int i = 0; i <= iota.domain_dim(); ++i)
        if (subset >> iota(i) & 1u)
            out |= 1u << i;
    return out;
}

// Minimal form of (sigma^* y; flag) where flag lives over the domain of sigma.
DegenerateTerm minimal_form(const DegenerateTerm& term, const std::vector<std::uint32_t>& flag, const FlagIndex& index)
{
    std::vector<std::uint32_t> pushed;
    std::vector<int> rho;
    for (std::uint32_t s : flag) {
        const std::uint32_t p = push_subset(term.surjection, s);
        if (pushed.empty() || pushed.back() != p)
            pushed.push_back(p);
        rho.push_back(static_cast<int>(pushed.size()) - 1);
    }
    const int dim = static_cast<int>(pushed.size()) - 1;
    auto it = index.find({term.generator, pushed});
    if (it == index.end())
        throw InternalError("subdivision: minimal form outside the generator table");
    return {MonotoneMap(dim, std::move(rho)), it->second};
}

FlagIndex index_of(const Subdivision& s)
{
    FlagIndex idx;
    for (GenId g = 0; g < s.provenance.size(); ++g)
        idx.emplace(FlagKey{s.provenance[g].base, s.provenance[g].flag}, g);
    return idx;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> flags_over(int n)
{
    std::vector<std::vector<std::vector<std::uint32_t>>> by_len(static_cast<std::size_t>(n + 1));
    std::vector<std::uint32_t> chain{full_mask(n)};
    extend_down(chain, by_len);
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& group : by_len) {
        std::sort(group.begin(), group.end());
        for (auto& f : group)
            out.push_back(std::move(f));
    }
    return out;
}

std::string flag_name(const std::string& base, const std::vector<std::uint32_t>& flag)
{
    std::string s = "(" + base + "|";
    for (std::size_t i = 0; i < flag.size(); ++i)
        s += (i ? "<" : "") + subset_name(flag[i]);
    return s + ")";
}

Subdivision sd(const SsetPtr& xp)
{
    const FiniteSimplicialSet& x = *xp;
    const auto table = vertex_table(x);
    const bool coords = x.has_coordinates();
    const int top = x.max_dim();

    std::vector<std::vector<std::vector<std::uint32_t>>> flags(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        flags[static_cast<std::size_t>(n)] = flags_over(n);

    FiniteSimplicialSet out;
    Subdivision res;
    FlagIndex index;
    for (int q = 0; q <= top; ++q) {
        for (GenId g = 0; g < x.size(); ++g) {
            const int n = x.dim(g);
            if (n < q)
                continue;
            for (const auto& flag : flags[static_cast<std::size_t>(n)]) {
                if (static_cast<int>(flag.size()) != q + 1)
                    continue;
                const GenId id = out.add_generator(flag_name(x.name(g), flag), q);
                index.emplace(FlagKey{g, flag}, id);
                res.provenance.push_back({g, flag});
                if (q == 0) {
                    if (coords) {
                        std::vector<double> c;
                        for (GenId v : table[g]) {
                            const auto& cv = *x.coordinates(v);
                            if (c.empty())
                                c.assign(cv.size(), 0.0);
                            for (std::size_t k = 0; k < cv.size(); ++k)
                                c[k] += cv[k] / static_cast<double>(n + 1);
                        }
                        out.set_coordinates(id, std::move(c));
                    }
                    continue;
                }
                for (int i = 0; i < q; ++i) {
                    auto rest = flag;
                    rest.erase(rest.begin() + i);
                    out.set_face(id, i, out.term(index.at({g, rest})));
                }
                // last face: restrict the base to the second largest subset
                const std::uint32_t sub = flag[static_cast<std::size_t>(q - 1)];
                std::vector<int> image;
                for (int v = 0; v <= n; ++v)
                    if (sub >> v & 1u)
                        image.push_back(v);
                const auto iota = MonotoneMap::injection(n, image);
                const auto restricted = apply_operator(x, x.term(g), iota);
                std::vector<std::uint32_t> pulled;
                for (int j = 0; j < q; ++j)
                    pulled.push_back(pull_subset(iota, flag[static_cast<std::size_t>(j)]));
                out.set_face(id, q, minimal_form(restricted, pulled, index));
            }
        }
    }
    res.object = share(std::move(out));
    return res;
}

SimplicialMap sd_map(const SimplicialMap& f, const Subdivision& sd_source, const Subdivision& sd_target)
{
    if (sd_source.provenance.size() != sd_source.object->size() ||
        sd_target.provenance.size() != sd_target.object->size())
        throw InvalidArgument("sd_map: subdivision without provenance");
    const auto index = index_of(sd_target);
    std::vector<DegenerateTerm> a;
    a.reserve(sd_source.provenance.size());
    for (const auto& fg : sd_source.provenance) {
        if (fg.base >= f.source()->size())
            throw InvalidArgument("sd_map: subdivision does not match the map's source");
        a.push_back(minimal_form(f(fg.base), fg.flag, index));
    }
    return SimplicialMap(sd_source.object, sd_target.object, std::move(a));
}

SsetPtr sd_iter(const SsetPtr& x, int k)
{
    if (k < 0)
        throw InvalidArgument("sd_iter: negative count");
    SsetPtr cur = x;
    for (int i = 0; i < k; ++i)
        cur = sd(cur).object;
    return cur;
}

SimplicialMap sd_iter_map(const SimplicialMap& f, int k)
{
    if (k < 0)
        throw InvalidArgument("sd_iter_map: negative count");
    SimplicialMap cur = f;
    for (int i = 0; i < k; ++i) {
        const auto s = sd(cur.source());
        const auto t = cur.source() == cur.target() ? s : sd(cur.target());
        cur = sd_map(cur, s, t);
    }
    return cur;
}

std::vector<SimplicialMap> ex_level(const SsetPtr& x, int n, std::size_t generator_budget, const HomOptions& opts)
{
    if (n < 0)
        throw InvalidArgument("ex_level: negative level");
    // sd(delta(n)) has one generator per chain of nonempty subsets of [n]
    const auto s = sd(share(delta(n)));
    if (s.object->size() > generator_budget)
        throw BudgetExceeded("ex_level: sd(delta(" + std::to_string(n) + ")) has " +
                             std::to_string(s.object->size()) + " generators");
    return hom_enumerate(s.object, x, opts);
}

std::string provenance_table(const Subdivision& s, const FiniteSimplicialSet& base)
{
    std::ostringstream os;
    for (GenId g = 0; g < s.provenance.size(); ++g) {
        const auto& fg = s.provenance[g];
        os << s.object->name(g) << ' ' << base.name(fg.base) << ' ';
        for (std::size_t i = 0; i < fg.flag.size(); ++i)
            os << (i ? "<" : "") << subset_name(fg.flag[i]);
        os << '\n';
    }
    return os.str();
}

}  // namespace simpset
