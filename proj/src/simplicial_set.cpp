#include "simpset/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace simpset {

GenId FiniteSimplicialSet::add_generator(std::string name, int dim)
{
    if (dim < 0)
        throw InvalidArgument("generator '" + name + "': negative dimension");
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
        throw InvalidArgument("generator name '" + name + "' is empty or contains whitespace");
    if (index_.count(name))
        throw InvalidArgument("duplicate generator name '" + name + "'");
    const auto id = static_cast<GenId>(dims_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    dims_.push_back(dim);
    faces_.emplace_back(static_cast<std::size_t>(dim == 0 ? 0 : dim + 1));
    coords_.emplace_back();
    return id;
}

void FiniteSimplicialSet::set_face(GenId g, int i, DegenerateTerm term)
{
    if (g >= size())
        throw UnknownGenerator("set_face: generator id " + std::to_string(g));
    const int n = dims_[g];
    if (n == 0 || i < 0 || i > n)
        throw InvalidArgument("set_face: index " + std::to_string(i) + " out of range for '" + names_[g] + "'");
    if (term.generator >= size())
        throw UnknownGenerator("set_face: target id " + std::to_string(term.generator));
    if (term.dim() != n - 1)
        throw DimensionMismatch("set_face: face " + std::to_string(i) + " of '" + names_[g] + "' must have dimension " +
                                std::to_string(n - 1));
    if (!term.surjection.is_surjective() || term.surjection.codomain_dim() != dims_[term.generator])
        throw InvalidArgument("set_face: face term of '" + names_[g] + "' is not in EZ form");
    faces_[g][static_cast<std::size_t>(i)] = std::move(term);
}

void FiniteSimplicialSet::set_coordinates(GenId vertex, std::vector<double> coords)
{
    if (vertex >= size() || dims_[vertex] != 0)
        throw InvalidArgument("coordinates attach to vertices only");
    coords_[vertex] = std::move(coords);
}

const DegenerateTerm& FiniteSimplicialSet::face(GenId g, int i) const
{
    const auto& slot = faces_.at(g).at(static_cast<std::size_t>(i));
    if (!slot)
        throw InvalidPresentation("face " + std::to_string(i) + " of '" + names_[g] + "' is unset");
    return *slot;
}

bool FiniteSimplicialSet::has_face(GenId g, int i) const
{
    const auto& f = faces_.at(g);
    return i >= 0 && static_cast<std::size_t>(i) < f.size() && f[static_cast<std::size_t>(i)].has_value();
}

std::optional<GenId> FiniteSimplicialSet::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

GenId FiniteSimplicialSet::at(std::string_view name) const
{
    if (auto g = find(name))
        return *g;
    throw UnknownGenerator("no generator named '" + std::string(name) + "'");
}

int FiniteSimplicialSet::max_dim() const
{
    int m = -1;
    for (int d : dims_)
        m = std::max(m, d);
    return m;
}

std::vector<GenId> FiniteSimplicialSet::generators_of_dim(int d) const
{
    std::vector<GenId> out;
    for (GenId g = 0; g < size(); ++g)
        if (dims_[g] == d)
            out.push_back(g);
    return out;
}

std::vector<std::size_t> FiniteSimplicialSet::profile() const
{
    std::vector<std::size_t> p(static_cast<std::size_t>(max_dim() + 1), 0);
    for (int d : dims_)
        ++p[static_cast<std::size_t>(d)];
    return p;
}

bool FiniteSimplicialSet::has_coordinates() const
{
    bool any = false;
    for (GenId g = 0; g < size(); ++g) {
        if (dims_[g] != 0)
            continue;
        if (!coords_[g])
            return false;
        any = true;
    }
    return any;
}

const std::vector<double>* FiniteSimplicialSet::coordinates(GenId vertex) const
{
    const auto& c = coords_.at(vertex);
    return c ? &*c : nullptr;
}

DegenerateTerm apply_operator(const FiniteSimplicialSet& x, const DegenerateTerm& t, const MonotoneMap& theta)
{
    if (theta.codomain_dim() != t.dim())
        throw DimensionMismatch("apply_operator: operator " + theta.to_string() + " does not act on a " +
                                std::to_string(t.dim()) + "-simplex");
    // theta^* s^* g = (s o theta)^* g = (iota o sigma)^* g = sigma^* iota^* g
    DegenerateTerm cur = t;
    MonotoneMap op = theta;
    for (;;) {
        auto [sigma, iota] = ez_factorize(compose(cur.surjection, op));
        if (iota.is_identity())
            return {std::move(sigma), cur.generator};
        // iota = delta_i o iota' with i the largest missing value
        const int i = iota.missing_values().back();
        std::vector<int> shifted(iota.values().begin(), iota.values().end());
        for (int& v : shifted)
            if (v > i)
                --v;
        MonotoneMap iota_rest(iota.codomain_dim() - 1, std::move(shifted));
        cur = x.face(cur.generator, i);
        op = compose(iota_rest, sigma);
    }
}

std::vector<std::vector<GenId>> vertex_table(const FiniteSimplicialSet& x)
{
    std::vector<std::vector<GenId>> table(x.size());
    const int top = x.max_dim();
    for (int d = 0; d <= top; ++d) {
        for (GenId g : x.generators_of_dim(d)) {
            if (d == 0) {
                table[g] = {g};
                continue;
            }
            // first d vertices from the last face, final vertex from face 0
            const auto& last = x.face(g, d);
            auto head = term_vertices(table, last);
            const auto& first = x.face(g, 0);
            auto tail = term_vertices(table, first);
            head.push_back(tail.back());
            table[g] = std::move(head);
        }
    }
    return table;
}

std::vector<GenId> term_vertices(const std::vector<std::vector<GenId>>& table, const DegenerateTerm& t)
{
    const auto& base = table.at(t.generator);
    std::vector<GenId> out;
    out.reserve(t.surjection.values().size());
    for (int v : t.surjection.values())
        out.push_back(base.at(static_cast<std::size_t>(v)));
    return out;
}

std::vector<GenId> vertices(const FiniteSimplicialSet& x, GenId g)
{
    if (g >= x.size())
        throw UnknownGenerator("vertices: generator id " + std::to_string(g));
    std::vector<GenId> out;
    const auto t = x.term(g);
    for (int i = 0; i <= x.dim(g); ++i)
        out.push_back(apply_operator(x, t, MonotoneMap::vertex(x.dim(g), i)).generator);
    return out;
}

std::string ValidationReport::to_string() const
{
    if (ok())
        return "ok\n";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.kind << " at '" << v.generator << "'";
        if (!v.indices.empty()) {
            os << " (";
            for (std::size_t i = 0; i < v.indices.size(); ++i)
                os << (i ? "," : "") << v.indices[i];
            os << ")";
        }
        if (!v.message.empty())
            os << ": " << v.message;
        os << '\n';
    }
    return os.str();
}

ValidationReport validate(const FiniteSimplicialSet& x)
{
    ValidationReport rep;
    bool faces_complete = true;
    for (GenId g = 0; g < x.size(); ++g) {
        const int n = x.dim(g);
        for (int i = 0; n > 0 && i <= n; ++i) {
            if (!x.has_face(g, i)) {
                rep.violations.push_back({"missing-face", x.name(g), {i}, ""});
                faces_complete = false;
            }
        }
    }
    if (!faces_complete)
        return rep;
    for (GenId g = 0; g < x.size(); ++g) {
        const int n = x.dim(g);
        if (n < 2)
            continue;
        const auto t = x.term(g);
        for (int j = 1; j <= n; ++j) {
            for (int i = 0; i < j; ++i) {
                // d_i d_j = d_{j-1} d_i
                auto lhs = apply_face(x, x.face(g, j), i);
                auto rhs = apply_face(x, x.face(g, i), j - 1);
                if (!(lhs == rhs)) {
                    std::ostringstream msg;
                    msg << "d" << i << "d" << j << " -> '" << x.name(lhs.generator) << "' " << lhs.surjection
                        << " but d" << j - 1 << "d" << i << " -> '" << x.name(rhs.generator) << "' " << rhs.surjection;
                    rep.violations.push_back({"simplicial-identity", x.name(g), {i, j}, msg.str()});
                }
            }
        }
        (void)t;
    }
    std::size_t coord_dim = 0;
    bool coord_seen = false;
    for (GenId g = 0; g < x.size(); ++g) {
        if (const auto* c = x.coordinates(g)) {
            if (coord_seen && c->size() != coord_dim)
                rep.violations.push_back({"coordinate-dimension", x.name(g), {}, "inconsistent coordinate length"});
            coord_dim = c->size();
            coord_seen = true;
        }
    }
    return rep;
}

FiniteSimplicialSet rename_generators(const FiniteSimplicialSet& x, const std::vector<std::string>& names)
{
    if (names.size() != x.size())
        throw InvalidArgument("rename_generators: wrong number of names");
    FiniteSimplicialSet out;
    for (GenId g = 0; g < x.size(); ++g)
        out.add_generator(names[g], x.dim(g));
    for (GenId g = 0; g < x.size(); ++g) {
        for (int i = 0; x.dim(g) > 0 && i <= x.dim(g); ++i)
            if (x.has_face(g, i))
                out.set_face(g, i, x.face(g, i));
        if (const auto* c = x.coordinates(g))
            out.set_coordinates(g, *c);
    }
    return out;
}

bool same_presentation(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b)
{
    if (a.size() != b.size())
        return false;
    for (GenId g = 0; g < a.size(); ++g) {
        auto h = b.find(a.name(g));
        if (!h || b.dim(*h) != a.dim(g))
            return false;
        for (int i = 0; a.dim(g) > 0 && i <= a.dim(g); ++i) {
            const auto& fa = a.face(g, i);
            const auto& fb = b.face(*h, i);
            if (fa.surjection != fb.surjection || a.name(fa.generator) != b.name(fb.generator))
                return false;
        }
        const auto* ca = a.coordinates(g);
        const auto* cb = b.coordinates(*h);
        if ((ca == nullptr) != (cb == nullptr) || (ca && *ca != *cb))
            return false;
    }
    return true;
}

SimplicialMap::SimplicialMap(SsetPtr source, SsetPtr target, std::vector<DegenerateTerm> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (!source_ || !target_)
        throw InvalidArgument("simplicial map: null endpoint");
    if (assignment_.size() != source_->size())
        throw InvalidArgument("simplicial map: assignment size does not match source");
    for (GenId g = 0; g < source_->size(); ++g) {
        const auto& t = assignment_[g];
        if (t.generator >= target_->size())
            throw UnknownGenerator("simplicial map: image of '" + source_->name(g) + "' is not a target generator");
        if (t.dim() != source_->dim(g) || t.surjection.codomain_dim() != target_->dim(t.generator))
            throw DimensionMismatch("simplicial map: image of '" + source_->name(g) + "' has the wrong dimension");
    }
}

SimplicialMap SimplicialMap::identity(const SsetPtr& x)
{
    std::vector<DegenerateTerm> a;
    a.reserve(x->size());
    for (GenId g = 0; g < x->size(); ++g)
        a.push_back(x->term(g));
    return SimplicialMap(x, x, std::move(a));
}

std::optional<SimplicialMap> SimplicialMap::from_vertex_map(const SsetPtr& source, const SsetPtr& target,
                                                            const std::vector<GenId>& vertex_image)
{
    const auto src_table = vertex_table(*source);
    const auto tgt_table = vertex_table(*target);
    std::map<std::vector<GenId>, GenId> by_tuple;
    for (GenId h = 0; h < target->size(); ++h)
        by_tuple.emplace(tgt_table[h], h);
    std::vector<DegenerateTerm> a;
    a.reserve(source->size());
    for (GenId g = 0; g < source->size(); ++g) {
        std::vector<GenId> compressed;
        std::vector<int> surj;
        for (GenId v : src_table[g]) {
            const GenId w = vertex_image.at(v);
            if (compressed.empty() || compressed.back() != w)
                compressed.push_back(w);
            surj.push_back(static_cast<int>(compressed.size()) - 1);
        }
        auto it = by_tuple.find(compressed);
        if (it == by_tuple.end())
            return std::nullopt;
        a.push_back({MonotoneMap(static_cast<int>(compressed.size()) - 1, std::move(surj)), it->second});
    }
    return SimplicialMap(source, target, std::move(a));
}

DegenerateTerm SimplicialMap::image(const DegenerateTerm& t) const
{
    return apply_operator(*target_, assignment_.at(t.generator), t.surjection);
}

ValidationReport SimplicialMap::check() const
{
    ValidationReport rep;
    for (GenId g = 0; g < source_->size(); ++g) {
        const int n = source_->dim(g);
        for (int i = 0; n > 0 && i <= n; ++i) {
            auto lhs = apply_face(*target_, assignment_[g], i);
            auto rhs = image(source_->face(g, i));
            if (!(lhs == rhs))
                rep.violations.push_back({"face-compatibility", source_->name(g), {i}, ""});
        }
    }
    return rep;
}

bool SimplicialMap::is_identity() const
{
    if (source_ != target_ && !same_presentation(*source_, *target_))
        return false;
    for (GenId g = 0; g < source_->size(); ++g) {
        const auto& t = assignment_[g];
        if (!t.is_nondegenerate() || target_->name(t.generator) != source_->name(g))
            return false;
    }
    return true;
}

bool SimplicialMap::is_injective() const
{
    std::vector<bool> hit(target_->size(), false);
    for (const auto& t : assignment_) {
        if (!t.is_nondegenerate() || hit[t.generator])
            return false;
        hit[t.generator] = true;
    }
    return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.target() != g.source())
        throw DimensionMismatch("compose: maps are not composable");
    std::vector<DegenerateTerm> a;
    a.reserve(f.source()->size());
    for (const auto& t : f.assignment())
        a.push_back(g.image(t));
    return SimplicialMap(f.source(), g.target(), std::move(a));
}

}  // namespace simpset
