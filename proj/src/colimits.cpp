#include "simpset/colimits.hpp"

#include <set>

#include "simpset/builders.hpp"

namespace simpset {

Coproduct coproduct(const std::vector<SsetPtr>& parts)
{
    std::vector<const FiniteSimplicialSet*> raw;
    for (const auto& p : parts)
        raw.push_back(p.get());
    Coproduct out{share(disjoint_union(raw)), {}};
    GenId offset = 0;
    for (const auto& p : parts) {
        std::vector<DegenerateTerm> a;
        for (GenId g = 0; g < p->size(); ++g)
            a.push_back(out.object->term(offset + g));
        out.injections.emplace_back(p, out.object, std::move(a));
        offset += static_cast<GenId>(p->size());
    }
    return out;
}

bool is_full_simplicial_inclusion(const SimplicialMap& j)
{
    if (!j.is_injective())
        return false;
    const auto& y = *j.target();
    std::vector<bool> in_image(y.size(), false);
    for (const auto& t : j.assignment())
        in_image[t.generator] = true;
    const auto table = vertex_table(y);
    for (GenId h = 0; h < y.size(); ++h) {
        if (in_image[h])
            continue;
        bool spanned = true;
        for (GenId v : table[h])
            spanned = spanned && in_image[v];
        if (spanned)
            return false;
    }
    return true;
}

namespace {

std::vector<DegenerateTerm> compose_into(const SimplicialMap& q, const SimplicialMap& inj)
{
    return compose(q, inj).assignment();
}

}  // namespace

Pushout pushout_sset(const SimplicialMap& left, const SimplicialMap& right)
{
    if (left.source() != right.source())
        throw InvalidArgument("pushout: the two legs have different sources");
    const bool li = left.is_injective();
    if (!li && !right.is_injective())
        throw PreconditionViolated("pushout: neither leg is levelwise injective");
    const auto& b = left.target();
    const auto& c = right.target();
    // the side glued along an injection goes second so the other side keeps its names
    const bool c_first = li;
    const auto cop = coproduct(c_first ? std::vector<SsetPtr>{c, b} : std::vector<SsetPtr>{b, c});
    const auto& in_b = cop.injections[c_first ? 1 : 0];
    const auto& in_c = cop.injections[c_first ? 0 : 1];

    std::vector<TermPair> rel;
    const auto& a = *left.source();
    for (GenId g = 0; g < a.size(); ++g)
        rel.emplace_back(in_b.image(left(g)), in_c.image(right(g)));
    const auto q = quotient(cop.object, rel);

    const auto& p = *q.object;
    const std::size_t first_size = (c_first ? c : b)->size();
    std::vector<std::string> names(p.size());
    std::set<std::string> taken;
    std::vector<GenId> second;
    for (GenId h = 0; h < p.size(); ++h) {
        const std::string& full = p.name(h);
        const auto colon = full.find(':');
        const GenId origin = cop.object->at(full);
        names[h] = full.substr(colon + 1);
        if (origin < first_size)
            taken.insert(names[h]);
        else
            second.push_back(h);
    }
    for (GenId h : second) {
        const std::string label = c_first ? "0:" : "1:";
        while (taken.count(names[h]))
            names[h] = label + names[h];
        taken.insert(names[h]);
    }
    auto obj = share(rename_generators(p, names));
    const auto report = validate(*obj);
    if (!report.ok())
        throw InternalError("pushout produced an invalid presentation: " + report.to_string());
    return {obj, SimplicialMap(b, obj, compose_into(q.map, in_b)), SimplicialMap(c, obj, compose_into(q.map, in_c))};
}

Pushout pushout_ns(const SimplicialMap& left, const SimplicialMap& right, const ReflectOptions& opts)
{
    auto p = pushout_sset(left, right);
    auto d = desingularize(p.object, opts);
    return {d.object, compose(d.map, p.left_leg), compose(d.map, p.right_leg)};
}

Pushout pushout_un(const SimplicialMap& left, const SimplicialMap& right, const ReflectOptions& opts)
{
    auto p = pushout_sset(left, right);
    auto l = normalize_to_un(p.object, opts);
    return {l.object, compose(l.map, p.left_leg), compose(l.map, p.right_leg)};
}

Projection coequalizer_sset(const SimplicialMap& f, const SimplicialMap& g)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw InvalidArgument("coequalizer: maps are not parallel");
    std::vector<TermPair> rel;
    for (GenId a = 0; a < f.source()->size(); ++a)
        rel.emplace_back(f(a), g(a));
    return quotient(f.target(), rel);
}

Projection coequalizer_un(const SimplicialMap& f, const SimplicialMap& g, const ReflectOptions& opts)
{
    auto q = coequalizer_sset(f, g);
    auto l = normalize_to_un(q.object, opts);
    return {l.object, compose(l.map, q.map)};
}

CellChain cell_chain(const SsetPtr& base, const std::vector<Attachment>& attachments, const ReflectOptions& opts)
{
    CellChain chain;
    chain.stages.push_back(base);
    chain.from_base.push_back(SimplicialMap::identity(base));
    // to_current[k]: stages[k] -> current stage
    std::vector<SimplicialMap> to_current{SimplicialMap::identity(base)};
    for (const auto& at : attachments) {
        // a stage is recognized by identity or, failing that, by presentation
        std::size_t k = 0;
        while (k < chain.stages.size() && chain.stages[k] != at.attach.target())
            ++k;
        if (k == chain.stages.size()) {
            k = 0;
            while (k < chain.stages.size() && !same_presentation(*chain.stages[k], *at.attach.target()))
                ++k;
        }
        if (k == chain.stages.size())
            throw InvalidArgument("cell_chain: attaching map does not land in an existing stage");
        const SimplicialMap retargeted(at.attach.source(), chain.stages[k], at.attach.assignment());
        const auto attach = compose(to_current[k], retargeted);
        auto p = pushout_un(at.cell, attach, opts);
        for (auto& m : to_current)
            m = compose(p.right_leg, m);
        chain.stages.push_back(p.object);
        to_current.push_back(SimplicialMap::identity(p.object));
        chain.from_base.push_back(to_current.front());
    }
    return chain;
}

}  // namespace simpset
