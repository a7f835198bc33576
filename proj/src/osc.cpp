#include "simpset/osc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "simpset/colimits.hpp"
#include "simpset/core.hpp"
#include "simpset/errors.hpp"

namespace simpset {

namespace {

using Matrix = std::vector<std::vector<char>>;
using Simplex = Osc::Simplex;

void close_order(Matrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (m[k][j])
                        m[i][j] = 1;
}

void add_faces(std::set<Simplex>& out, const Simplex& s)
{
    if (!out.insert(s).second || s.size() == 1)
        return;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        add_faces(out, f);
    }
}

std::string class_name(const std::vector<std::string>& names, const std::vector<int>& members)
{
    std::string out;
    for (std::size_t k = 0; k < members.size(); ++k)
        out += (k ? "~" : "") + names[static_cast<std::size_t>(members[k])];
    return out;
}

// Blocks of mutually comparable vertices under a closed preorder, each
// block sorted, ordered by least member.
std::vector<std::vector<int>> preorder_blocks(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (block[static_cast<std::size_t>(i)] >= 0)
            continue;
        out.emplace_back();
        for (int j = i; j < n; ++j)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                block[static_cast<std::size_t>(j)] = static_cast<int>(out.size()) - 1;
                out.back().push_back(j);
            }
    }
    return out;
}

Simplex image_set(const Simplex& s, const std::vector<int>& f)
{
    Simplex out;
    for (int v : s)
        out.push_back(f[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Osc::OrderedSimplicialComplex(std::vector<std::string> names, std::set<Simplex> simplices, Matrix leq)
    : names_(std::move(names)), simplices_(std::move(simplices)), leq_(std::move(leq))
{
}

Osc Osc::generated(std::vector<std::string> names, const std::vector<Simplex>& simplices,
                   const std::vector<std::pair<int, int>>& order)
{
    const int n = static_cast<int>(names.size());
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    std::set<Simplex> closed;
    for (int v = 0; v < n; ++v)
        closed.insert({v});
    for (Simplex s : simplices) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), in_range))
            throw InvalidOsc("simplex with no vertices or an unknown vertex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidOsc("simplex lists a vertex twice");
        add_faces(closed, s);
    }
    Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [a, b] : order) {
        if (!in_range(a) || !in_range(b))
            throw InvalidOsc("order relation mentions an unknown vertex");
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    close_order(m);
    Osc y(std::move(names), std::move(closed), std::move(m));
    const auto report = validate_osc(y);
    if (!report.ok())
        throw InvalidOsc(report.to_string());
    return y;
}

std::optional<int> Osc::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

bool Osc::is_simplex(Simplex s) const
{
    std::sort(s.begin(), s.end());
    return simplices_.count(s) > 0;
}

Simplex Osc::ordered(const Simplex& s) const
{
    Simplex out = s;
    // a total order on the simplex: sort by the number of elements below
    auto below = [&](int v) {
        int c = 0;
        for (int u : s)
            c += leq(u, v);
        return c;
    };
    std::sort(out.begin(), out.end(), [&](int a, int b) { return below(a) < below(b); });
    return out;
}

std::vector<Simplex> Osc::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        bool maximal = true;
        for (int v = 0; v < static_cast<int>(size()) && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v))
                continue;
            Simplex t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), v), v);
            maximal = simplices_.count(t) == 0;
        }
        if (maximal)
            out.push_back(s);
    }
    return out;
}

std::vector<std::pair<int, int>> Osc::covers() const
{
    const int n = static_cast<int>(size());
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq(a, b))
                continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                cover = c == a || c == b || !(leq(a, c) && leq(c, b));
            if (cover)
                out.emplace_back(a, b);
        }
    return out;
}

std::string OscReport::to_string() const
{
    if (ok())
        return "ok\n";
    std::string out;
    for (const auto& v : violations)
        out += v + "\n";
    return out;
}

OscReport validate_osc(const Osc& y)
{
    OscReport r;
    const int n = static_cast<int>(y.size());
    std::set<std::string> seen;
    for (const auto& name : y.names()) {
        if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }))
            r.violations.push_back("bad-name: '" + name + "' is empty or contains whitespace");
        if (!seen.insert(name).second)
            r.violations.push_back("duplicate-name: '" + name + "'");
    }
    const auto& m = y.order();
    if (m.size() != y.size() ||
        std::any_of(m.begin(), m.end(), [&](const auto& row) { return row.size() != y.size(); })) {
        r.violations.push_back("order-shape: the order matrix does not match the vertex count");
        return r;
    }
    for (const auto& s : y.simplices()) {
        if (s.empty() || !std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end() ||
            s.front() < 0 || s.back() >= n) {
            r.violations.push_back("bad-simplex: a simplex is empty, unsorted, repeats or leaves the vertex range");
            continue;
        }
        for (std::size_t i = 0; s.size() > 1 && i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            if (!y.simplices().count(f)) {
                r.violations.push_back("not-closed: a face of a simplex is missing");
                break;
            }
        }
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!y.leq(s[i], s[j]) && !y.leq(s[j], s[i]))
                    r.violations.push_back("not-total: '" + y.name(s[i]) + "' and '" + y.name(s[j]) +
                                           "' span a simplex but are incomparable");
    }
    for (int v = 0; v < n; ++v) {
        if (!y.simplices().count({v}))
            r.violations.push_back("missing-vertex: '" + y.name(v) + "' is not a simplex");
        if (!y.leq(v, v))
            r.violations.push_back("not-reflexive: at '" + y.name(v) + "'");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && y.leq(a, b) && y.leq(b, a) && a < b)
                r.violations.push_back("not-antisymmetric: '" + y.name(a) + "' and '" + y.name(b) + "'");
            if (!y.leq(a, b))
                continue;
            for (int c = 0; c < n; ++c)
                if (y.leq(b, c) && !y.leq(a, c)) {
                    r.violations.push_back("not-transitive: '" + y.name(a) + "' <= '" + y.name(b) + "' <= '" +
                                           y.name(c) + "'");
                    break;
                }
        }
    return r;
}

OscMap::OscMap(OscPtr source, OscPtr target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map))
{
    if (!source_ || !target_)
        throw InvalidArgument("osc map: null object");
    if (map_.size() != source_->size())
        throw InvalidArgument("osc map: vertex map has the wrong length");
    for (int v : map_)
        if (v < 0 || v >= static_cast<int>(target_->size()))
            throw InvalidArgument("osc map: image outside the target");
}

OscReport OscMap::check() const
{
    OscReport r;
    const auto& a = *source_;
    const auto& b = *target_;
    for (int u = 0; u < static_cast<int>(a.size()); ++u)
        for (int v = 0; v < static_cast<int>(a.size()); ++v)
            if (a.leq(u, v) && !b.leq(map_[static_cast<std::size_t>(u)], map_[static_cast<std::size_t>(v)]))
                r.violations.push_back("not-monotone: '" + a.name(u) + "' <= '" + a.name(v) + "'");
    for (const auto& s : a.simplices())
        if (!b.simplices().count(image_set(s, map_))) {
            std::string what;
            for (int v : s)
                what += (what.empty() ? "" : ",") + a.name(v);
            r.violations.push_back("not-simplicial: image of {" + what + "}");
        }
    return r;
}

bool OscMap::is_identity() const
{
    if (source_ != target_)
        return false;
    for (std::size_t v = 0; v < map_.size(); ++v)
        if (map_[v] != static_cast<int>(v))
            return false;
    return true;
}

OscMap compose(const OscMap& g, const OscMap& f)
{
    if (f.target() != g.source())
        throw InvalidArgument("compose: maps are not composable");
    std::vector<int> m;
    for (int v : f.vertex_map())
        m.push_back(g(v));
    return OscMap(f.source(), g.target(), std::move(m));
}

SsetPtr U(const Osc& y)
{
    std::vector<std::vector<Simplex>> by_size;
    for (const auto& s : y.simplices()) {
        if (by_size.size() < s.size())
            by_size.resize(s.size());
        by_size[s.size() - 1].push_back(s);
    }
    FiniteSimplicialSet x;
    std::map<Simplex, GenId> id;
    for (const auto& level : by_size)
        for (const auto& s : level) {
            const auto ord = y.ordered(s);
            std::string name;
            for (int v : ord)
                name += (name.empty() ? "" : ",") + y.name(v);
            const GenId g = x.add_generator(name, static_cast<int>(s.size()) - 1);
            id.emplace(s, g);
            for (std::size_t i = 0; s.size() > 1 && i < ord.size(); ++i) {
                Simplex f = ord;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                std::sort(f.begin(), f.end());
                x.set_face(g, static_cast<int>(i), x.term(id.at(f)));
            }
        }
    return share(std::move(x));
}

SimplicialMap U_map(const OscMap& f, const SsetPtr& u_source, const SsetPtr& u_target)
{
    std::vector<GenId> vi(u_source->size(), 0);
    for (std::size_t v = 0; v < f.vertex_map().size(); ++v)
        vi[v] = static_cast<GenId>(f.vertex_map()[v]);
    auto m = SimplicialMap::from_vertex_map(u_source, u_target, vi);
    if (!m)
        throw InvalidOsc("U_map: the vertex map does not carry simplices to simplices");
    return *m;
}

FImage F(const SsetPtr& xp)
{
    const auto& x = *xp;
    if (!in_sset_un(x))
        throw NotInSSetUn("F needs an input with Properties B and C");
    const auto classes = scc_classes(x);
    std::vector<std::string> names;
    for (const auto& block : classes.blocks) {
        std::string name;
        for (GenId v : block)
            name += (name.empty() ? "" : "~") + x.name(v);
        names.push_back(name);
    }
    const auto table = vertex_table(x);
    std::vector<Simplex> simplices;
    std::vector<std::pair<int, int>> order;
    for (GenId g = 0; g < x.size(); ++g) {
        Simplex t;
        for (GenId v : table[g]) {
            const int c = classes.block_of[v];
            if (t.empty() || t.back() != c)
                t.push_back(c);
        }
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            order.emplace_back(t[i], t[i + 1]);
        Simplex sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InternalError("F: a simplex revisits a vertex class");
        simplices.push_back(std::move(sorted));
    }
    try {
        return {share(Osc::generated(std::move(names), simplices, order)), classes.block_of};
    } catch (const InvalidOsc& e) {
        throw InternalError(std::string("F produced an invalid complex: ") + e.what());
    }
}

OscMap F_map(const SimplicialMap& f, const FImage& fs, const FImage& ft)
{
    std::vector<int> m(fs.object->size(), -1);
    const auto& x = *f.source();
    for (GenId v = 0; v < x.size(); ++v) {
        const int c = fs.class_of[v];
        if (c < 0)
            continue;
        const int img = ft.class_of[f.vertex_image(v)];
        auto& slot = m[static_cast<std::size_t>(c)];
        if (slot >= 0 && slot != img)
            throw InternalError("F_map: a vertex class splits under the map");
        slot = img;
    }
    return OscMap(fs.object, ft.object, std::move(m));
}

Projection quotient_un(const SsetPtr& xp)
{
    const auto& x = *xp;
    if (!in_sset_un(x))
        throw NotInSSetUn("quotient_un needs an input with Properties B and C");
    const auto classes = scc_classes(x);
    if (classes.is_discrete())
        return {xp, SimplicialMap::identity(xp)};
    const auto table = vertex_table(x);
    std::vector<Simplex> compressed(x.size());
    std::vector<MonotoneMap> runs;
    for (GenId g = 0; g < x.size(); ++g) {
        std::vector<int> run;
        for (GenId v : table[g]) {
            const int c = classes.block_of[v];
            if (compressed[g].empty() || compressed[g].back() != c)
                compressed[g].push_back(c);
            run.push_back(static_cast<int>(compressed[g].size()) - 1);
        }
        runs.emplace_back(static_cast<int>(compressed[g].size()) - 1, std::move(run));
    }
    // witnesses: the least generator with a given class tuple, by dimension
    std::map<Simplex, GenId> witness;
    for (GenId g = 0; g < x.size(); ++g)
        witness.emplace(compressed[g], g);
    std::vector<std::pair<Simplex, GenId>> order(witness.begin(), witness.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return std::pair{a.first.size(), a.second} < std::pair{b.first.size(), b.second};
    });

    FiniteSimplicialSet out;
    std::set<std::string> taken;
    std::map<Simplex, GenId> id;
    for (const auto& [tuple, w] : order) {
        std::string name;
        if (tuple.size() == 1) {
            for (GenId v : classes.blocks[static_cast<std::size_t>(tuple[0])])
                name += (name.empty() ? "" : "~") + x.name(v);
        } else {
            name = x.name(w);
        }
        while (taken.count(name))
            name += "'";
        taken.insert(name);
        const GenId g = out.add_generator(name, static_cast<int>(tuple.size()) - 1);
        id.emplace(tuple, g);
        for (std::size_t i = 0; tuple.size() > 1 && i < tuple.size(); ++i) {
            Simplex f = tuple;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = id.find(f);
            if (it == id.end())
                throw InternalError("quotient_un: a face of a class simplex has no witness");
            out.set_face(g, static_cast<int>(i), out.term(it->second));
        }
    }
    std::vector<DegenerateTerm> a;
    for (GenId g = 0; g < x.size(); ++g)
        a.push_back({runs[g], id.at(compressed[g])});
    auto obj = share(std::move(out));
    return {obj, SimplicialMap(xp, obj, std::move(a))};
}

Projection unit(const SsetPtr& x)
{
    const auto fx = F(x);
    auto ufx = U(*fx.object);
    std::vector<GenId> vi(x->size(), 0);
    for (GenId g = 0; g < x->size(); ++g)
        if (fx.class_of[g] >= 0)
            vi[g] = static_cast<GenId>(fx.class_of[g]);
    auto eta = SimplicialMap::from_vertex_map(x, ufx, vi);
    if (!eta)
        throw InternalError("unit: the class map does not lift");
    return {ufx, *eta};
}

OscMap counit(const OscPtr& y)
{
    const auto fuy = F(U(*y));
    std::vector<int> m(fuy.object->size(), -1);
    for (std::size_t v = 0; v < fuy.class_of.size(); ++v)
        if (fuy.class_of[v] >= 0)
            m[static_cast<std::size_t>(fuy.class_of[v])] = static_cast<int>(v);
    return OscMap(fuy.object, y, std::move(m));
}

AdjunctionReport triangle_check(const SsetPtr& x, const OscPtr& y)
{
    AdjunctionReport rep;
    {
        const auto fx = F(x);
        const auto eta = unit(x);
        const auto ffx = F(eta.object);
        const auto f_eta = F_map(eta.map, fx, ffx);
        const auto eps = counit(fx.object);
        // eps is computed on its own copy of F U F X; match it vertex by vertex
        const OscMap eps_here(ffx.object, fx.object, eps.vertex_map());
        rep.f_side = eps.source()->names() == ffx.object->names() && compose(eps_here, f_eta).is_identity();
    }
    {
        const auto uy = U(*y);
        const auto eta = unit(uy);
        const auto eps = counit(y);
        const auto u_eps = U_map(eps, eta.object, uy);
        rep.u_side = compose(u_eps, eta.map).is_identity();
    }
    return rep;
}

OscCone product_osc(const OscPtr& ap, const OscPtr& bp)
{
    const auto& a = *ap;
    const auto& b = *bp;
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    const int n = na * nb;
    std::vector<std::string> names;
    Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        names.push_back("(" + a.name(i / nb) + "," + b.name(i % nb) + ")");
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.leq(i / nb, j / nb) && b.leq(i % nb, j % nb);
    }
    std::set<Simplex> simplices;
    Simplex chain;
    std::function<void()> grow = [&] {
        Simplex s = chain;
        std::sort(s.begin(), s.end());
        simplices.insert(s);
        const int last = chain.back();
        for (int w = 0; w < n; ++w) {
            if (w == last || !m[static_cast<std::size_t>(last)][static_cast<std::size_t>(w)])
                continue;
            Simplex pa, pb;
            for (int v : chain) {
                pa.push_back(v / nb);
                pb.push_back(v % nb);
            }
            pa.push_back(w / nb);
            pb.push_back(w % nb);
            auto uniq = [](Simplex s) {
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                return s;
            };
            if (!a.simplices().count(uniq(pa)) || !b.simplices().count(uniq(pb)))
                continue;
            chain.push_back(w);
            grow();
            chain.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        chain = {v};
        grow();
    }
    auto p = share(Osc(std::move(names), std::move(simplices), std::move(m)));
    std::vector<int> p1, p2;
    for (int i = 0; i < n; ++i) {
        p1.push_back(i / nb);
        p2.push_back(i % nb);
    }
    return {p, {OscMap(p, ap, std::move(p1)), OscMap(p, bp, std::move(p2))}};
}

OscMap equalizer_osc(const OscMap& f, const OscMap& g)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw InvalidArgument("equalizer: maps are not parallel");
    const auto& a = *f.source();
    std::vector<int> keep, new_id(a.size(), -1);
    for (int v = 0; v < static_cast<int>(a.size()); ++v)
        if (f(v) == g(v)) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<std::string> names;
    Matrix m(keep.size(), std::vector<char>(keep.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        names.push_back(a.name(keep[i]));
        for (std::size_t j = 0; j < keep.size(); ++j)
            m[i][j] = a.leq(keep[i], keep[j]);
    }
    std::set<Simplex> simplices;
    for (const auto& s : a.simplices()) {
        Simplex t;
        for (int v : s)
            t.push_back(new_id[static_cast<std::size_t>(v)]);
        if (std::find(t.begin(), t.end(), -1) == t.end())
            simplices.insert(std::move(t));
    }
    auto e = share(Osc(std::move(names), std::move(simplices), std::move(m)));
    return OscMap(e, f.source(), std::move(keep));
}

OscCone coproduct_osc(const std::vector<OscPtr>& parts)
{
    std::vector<std::string> names;
    std::size_t total = 0;
    for (const auto& p : parts)
        total += p->size();
    Matrix m(total, std::vector<char>(total, 0));
    std::set<Simplex> simplices;
    int offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = *parts[k];
        for (int v = 0; v < static_cast<int>(p.size()); ++v) {
            names.push_back(std::to_string(k) + ":" + p.name(v));
            for (int w = 0; w < static_cast<int>(p.size()); ++w)
                m[static_cast<std::size_t>(offset + v)][static_cast<std::size_t>(offset + w)] = p.leq(v, w);
        }
        for (auto s : p.simplices()) {
            for (int& v : s)
                v += offset;
            simplices.insert(std::move(s));
        }
        offset += static_cast<int>(p.size());
    }
    auto c = share(Osc(std::move(names), std::move(simplices), std::move(m)));
    OscCone out{c, {}};
    offset = 0;
    for (const auto& p : parts) {
        std::vector<int> inj(p->size());
        std::iota(inj.begin(), inj.end(), offset);
        out.maps.emplace_back(p, c, std::move(inj));
        offset += static_cast<int>(p->size());
    }
    return out;
}

namespace {

OscMap identity_on(const OscPtr& y)
{
    std::vector<int> id(y->size());
    std::iota(id.begin(), id.end(), 0);
    return OscMap(y, y, std::move(id));
}

// The least order on `vertices` making p: b -> vertices monotone, closed.
Matrix pushed_order(const Osc& b, const std::vector<int>& p, std::size_t vertices)
{
    Matrix m(vertices, std::vector<char>(vertices, 0));
    for (int u = 0; u < static_cast<int>(b.size()); ++u)
        for (int v = 0; v < static_cast<int>(b.size()); ++v)
            if (b.leq(u, v))
                m[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])]
                 [static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = 1;
    close_order(m);
    return m;
}

std::vector<std::pair<int, int>> as_pairs(const Matrix& m)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j])
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

void require_parallel(const OscMap& f, const OscMap& g)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw InvalidArgument("coequalizer: maps are not parallel");
}

}  // namespace

OscMap coequalizer_osc(const OscMap& f, const OscMap& g, const ReflectOptions& opts)
{
    require_parallel(f, g);
    if (f.vertex_map() == g.vertex_map())
        return identity_on(f.target());
    const auto& b = *f.target();
    const auto ua = U(*f.source());
    const auto ub = U(b);
    auto q = coequalizer_un(U_map(f, ua, ub), U_map(g, ua, ub), opts);
    for (;;) {
        const auto fq = F(q.object);
        std::vector<int> p(b.size());
        for (int v = 0; v < static_cast<int>(b.size()); ++v)
            p[static_cast<std::size_t>(v)] = fq.class_of[q.map.vertex_image(static_cast<GenId>(v))];
        const auto m = pushed_order(b, p, fq.object->size());
        const auto blocks = preorder_blocks(m);
        if (blocks.size() == fq.object->size()) {
            std::vector<Simplex> simplices(fq.object->simplices().begin(), fq.object->simplices().end());
            try {
                auto obj = share(Osc::generated(fq.object->names(), simplices, as_pairs(m)));
                return OscMap(f.target(), obj, std::move(p));
            } catch (const InvalidOsc& e) {
                throw InternalError(std::string("coequalizer produced an invalid complex: ") + e.what());
            }
        }
        // the pushed order has cycles: identify them and reflect again
        std::vector<std::vector<GenId>> vblocks(blocks.size());
        std::vector<int> block_of_class(fq.object->size());
        for (std::size_t k = 0; k < blocks.size(); ++k)
            for (int c : blocks[k])
                block_of_class[static_cast<std::size_t>(c)] = static_cast<int>(k);
        for (GenId v = 0; v < q.object->size(); ++v)
            if (fq.class_of[v] >= 0)
                vblocks[static_cast<std::size_t>(block_of_class[static_cast<std::size_t>(fq.class_of[v])])].push_back(v);
        const auto collapsed = quotient_vertices(q.object, VertexPartition::from_blocks(*q.object, vblocks));
        const auto l = normalize_to_un(collapsed.object, opts);
        q = {l.object, compose(l.map, compose(collapsed.map, q.map))};
    }
}

OscMap coequalizer_osc_direct(const OscMap& f, const OscMap& g)
{
    require_parallel(f, g);
    if (f.vertex_map() == g.vertex_map())
        return identity_on(f.target());
    const auto& b = *f.target();
    const int n = static_cast<int>(b.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
    };
    auto unite = [&](int u, int v) {
        u = find(u);
        v = find(v);
        if (u != v)
            parent[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
    };
    for (int a = 0; a < static_cast<int>(f.source()->size()); ++a)
        unite(f(a), g(a));
    for (;;) {
        std::vector<int> cls(static_cast<std::size_t>(n));
        std::map<int, int> index;
        for (int v = 0; v < n; ++v) {
            auto [it, fresh] = index.emplace(find(v), static_cast<int>(index.size()));
            cls[static_cast<std::size_t>(v)] = it->second;
        }
        const auto m = pushed_order(b, cls, index.size());
        const auto blocks = preorder_blocks(m);
        if (blocks.size() < index.size()) {
            std::vector<int> rep(index.size());
            for (int v = n - 1; v >= 0; --v)
                rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])] = v;
            for (const auto& blk : blocks)
                for (int c : blk)
                    unite(rep[static_cast<std::size_t>(blk.front())], rep[static_cast<std::size_t>(c)]);
            continue;
        }
        std::vector<std::vector<int>> members(index.size());
        for (int v = 0; v < n; ++v)
            members[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(v);
        std::vector<std::string> names;
        for (const auto& mem : members)
            names.push_back(class_name(b.names(), mem));
        std::vector<Simplex> simplices;
        for (const auto& s : b.simplices())
            simplices.push_back(image_set(s, cls));
        try {
            auto obj = share(Osc::generated(std::move(names), simplices, as_pairs(m)));
            return OscMap(f.target(), obj, std::move(cls));
        } catch (const InvalidOsc& e) {
            throw InternalError(std::string("coequalizer produced an invalid complex: ") + e.what());
        }
    }
}

OscCone pushout_osc(const OscMap& j, const OscMap& g, const ReflectOptions& opts)
{
    if (j.source() != g.source())
        throw InvalidArgument("pushout: the two legs have different sources");
    const auto cop = coproduct_osc({j.target(), g.target()});
    const auto q = coequalizer_osc(compose(cop.maps[0], j), compose(cop.maps[1], g), opts);
    return {q.target(), {compose(q, cop.maps[0]), compose(q, cop.maps[1])}};
}

std::uint64_t for_each_hom_osc(const OscPtr& ap, const OscPtr& bp, const OscHomOptions& opts,
                               const std::function<bool(const OscMap&)>& visit)
{
    const auto& a = *ap;
    const auto& b = *bp;
    const int n = static_cast<int>(a.size());
    // visit vertices along edges so that constraints bite early
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& s : a.simplices())
        if (s.size() == 2) {
            nbr[static_cast<std::size_t>(s[0])].push_back(s[1]);
            nbr[static_cast<std::size_t>(s[1])].push_back(s[0]);
        }
    std::vector<int> seq, pos(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        if (pos[static_cast<std::size_t>(r)] >= 0)
            continue;
        std::size_t head = seq.size();
        pos[static_cast<std::size_t>(r)] = static_cast<int>(seq.size());
        seq.push_back(r);
        while (head < seq.size()) {
            const int v = seq[head++];
            for (int w : nbr[static_cast<std::size_t>(v)])
                if (pos[static_cast<std::size_t>(w)] < 0) {
                    pos[static_cast<std::size_t>(w)] = static_cast<int>(seq.size());
                    seq.push_back(w);
                }
        }
    }
    // simplices checked once their last vertex is placed
    std::vector<std::vector<const Simplex*>> closes(static_cast<std::size_t>(n));
    for (const auto& s : a.simplices()) {
        if (s.size() < 2)
            continue;
        int last = 0;
        for (int v : s)
            last = std::max(last, pos[static_cast<std::size_t>(v)]);
        closes[static_cast<std::size_t>(last)].push_back(&s);
    }
    std::mt19937_64 rng(opts.seed);
    std::uint64_t ticks = 0, found = 0;
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    bool stop = false;
    std::function<void(int)> step = [&](int k) {
        if (k == n) {
            ++found;
            stop = !visit(OscMap(ap, bp, img));
            return;
        }
        const int v = seq[static_cast<std::size_t>(k)];
        std::vector<int> cands(b.size());
        std::iota(cands.begin(), cands.end(), 0);
        if (opts.shuffle)
            std::shuffle(cands.begin(), cands.end(), rng);
        for (int c : cands) {
            if (++ticks > opts.budget)
                throw BudgetExceeded("osc hom enumeration exceeded the budget of " + std::to_string(opts.budget) +
                                     " candidates");
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                const int u = seq[static_cast<std::size_t>(i)];
                const int iu = img[static_cast<std::size_t>(u)];
                ok = (!a.leq(u, v) || b.leq(iu, c)) && (!a.leq(v, u) || b.leq(c, iu));
            }
            if (!ok)
                continue;
            img[static_cast<std::size_t>(v)] = c;
            for (const Simplex* s : closes[static_cast<std::size_t>(k)])
                if (!b.simplices().count(image_set(*s, img))) {
                    ok = false;
                    break;
                }
            if (ok)
                step(k + 1);
            img[static_cast<std::size_t>(v)] = -1;
            if (stop)
                return;
        }
    };
    step(0);
    return found;
}

std::vector<OscMap> hom_enumerate_osc(const OscPtr& a, const OscPtr& b, const OscHomOptions& opts)
{
    std::vector<OscMap> out;
    for_each_hom_osc(a, b, opts, [&](const OscMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace simpset
