#include "simpset/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "simpset/errors.hpp"

namespace simpset {

namespace {

struct Record {
    std::size_t line;
    std::vector<std::string> fields;
};

// Non-empty, non-comment lines split on whitespace; the first is the kind.
std::vector<Record> records(std::string_view text, const std::string& kind)
{
    std::vector<Record> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool seen_kind = false;
    while (std::getline(in, line)) {
        ++n;
        std::istringstream ls(line);
        std::vector<std::string> fields{std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>()};
        if (fields.empty() || fields[0][0] == '#')
            continue;
        if (!seen_kind) {
            if (fields.size() != 1 || fields[0] != kind)
                throw ParseError("line " + std::to_string(n) + ": expected kind marker '" + kind + "'");
            seen_kind = true;
            continue;
        }
        out.push_back({n, std::move(fields)});
    }
    if (!seen_kind)
        throw ParseError("empty document, expected kind marker '" + kind + "'");
    return out;
}

[[noreturn]] void fail(const Record& r, const std::string& msg)
{
    throw ParseError("line " + std::to_string(r.line) + ": " + msg);
}

void expect_fields(const Record& r, std::size_t n)
{
    if (r.fields.size() != n)
        fail(r, "'" + r.fields[0] + "' takes " + std::to_string(n - 1) + " fields");
}

long parse_int(const Record& r, const std::string& s)
{
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(r, "'" + s + "' is not an integer");
    return v;
}

double parse_double(const Record& r, const std::string& s)
{
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(r, "'" + s + "' is not a number");
    return v;
}

std::vector<int> parse_values(const Record& r, const std::string& s)
{
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        out.push_back(static_cast<int>(parse_int(r, s.substr(start, comma - start))));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string values_string(const MonotoneMap& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.values().size(); ++i)
        out += (i ? "," : "") + std::to_string(m.values()[i]);
    return out;
}

std::string shortest(double v)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

DegenerateTerm term_from(const Record& r, const FiniteSimplicialSet& x, const std::string& values,
                         const std::string& target)
{
    const auto t = x.find(target);
    if (!t)
        fail(r, "unknown generator '" + target + "'");
    try {
        return {MonotoneMap(x.dim(*t), parse_values(r, values)), *t};
    } catch (const InvalidArgument& e) {
        fail(r, e.what());
    }
}

std::vector<GenId> canonical_order(const FiniteSimplicialSet& x)
{
    std::vector<GenId> ids(x.size());
    for (GenId g = 0; g < x.size(); ++g)
        ids[g] = g;
    std::sort(ids.begin(), ids.end(), [&](GenId a, GenId b) {
        return std::pair{x.dim(a), std::string_view(x.name(a))} < std::pair{x.dim(b), std::string_view(x.name(b))};
    });
    return ids;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string document_kind(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string word;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> word && word[0] != '#')
            return word;
    }
    return "";
}

FiniteSimplicialSet parse_sset(std::string_view text)
{
    const auto recs = records(text, "sset");
    // generators first, in nondecreasing dimension, keeping file order within one
    std::vector<const Record*> gens;
    for (const auto& r : recs) {
        if (r.fields[0] == "gen") {
            expect_fields(r, 3);
            gens.push_back(&r);
        } else if (r.fields[0] != "face" && r.fields[0] != "coord") {
            fail(r, "unknown record '" + r.fields[0] + "'");
        }
    }
    std::stable_sort(gens.begin(), gens.end(), [](const Record* a, const Record* b) {
        return parse_int(*a, a->fields[2]) < parse_int(*b, b->fields[2]);
    });
    FiniteSimplicialSet x;
    for (const Record* r : gens) {
        const long d = parse_int(*r, r->fields[2]);
        if (d < 0)
            fail(*r, "negative dimension");
        try {
            x.add_generator(r->fields[1], static_cast<int>(d));
        } catch (const Error& e) {
            fail(*r, e.what());
        }
    }
    for (const auto& r : recs) {
        if (r.fields[0] == "face") {
            expect_fields(r, 5);
            const auto g = x.find(r.fields[1]);
            if (!g)
                fail(r, "unknown generator '" + r.fields[1] + "'");
            const auto term = term_from(r, x, r.fields[3], r.fields[4]);
            try {
                x.set_face(*g, static_cast<int>(parse_int(r, r.fields[2])), term);
            } catch (const Error& e) {
                fail(r, e.what());
            }
        } else if (r.fields[0] == "coord") {
            if (r.fields.size() < 2)
                fail(r, "'coord' needs a generator name");
            const auto g = x.find(r.fields[1]);
            if (!g)
                fail(r, "unknown generator '" + r.fields[1] + "'");
            std::vector<double> c;
            for (std::size_t k = 2; k < r.fields.size(); ++k)
                c.push_back(parse_double(r, r.fields[k]));
            try {
                x.set_coordinates(*g, std::move(c));
            } catch (const Error& e) {
                fail(r, e.what());
            }
        }
    }
    return x;
}

std::string write_sset(const FiniteSimplicialSet& x)
{
    const auto ids = canonical_order(x);
    std::string out = "sset\n";
    for (GenId g : ids)
        out += "gen " + x.name(g) + " " + std::to_string(x.dim(g)) + "\n";
    for (GenId g : ids)
        for (int i = 0; x.dim(g) > 0 && i <= x.dim(g); ++i)
            if (x.has_face(g, i)) {
                const auto& f = x.face(g, i);
                out += "face " + x.name(g) + " " + std::to_string(i) + " " + values_string(f.surjection) + " " +
                       x.name(f.generator) + "\n";
            }
    for (GenId g : ids)
        if (const auto* c = x.coordinates(g)) {
            out += "coord " + x.name(g);
            for (double v : *c)
                out += " " + shortest(v);
            out += "\n";
        }
    return out;
}

Osc parse_osc(std::string_view text)
{
    const auto recs = records(text, "osc");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const auto& r : recs)
        if (r.fields[0] == "vertex") {
            expect_fields(r, 2);
            if (!index.emplace(r.fields[1], static_cast<int>(names.size())).second)
                fail(r, "duplicate vertex '" + r.fields[1] + "'");
            names.push_back(r.fields[1]);
        }
    auto vertex = [&](const Record& r, const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
            fail(r, "unknown vertex '" + name + "'");
        return it->second;
    };
    std::vector<Osc::Simplex> simplices;
    std::vector<std::pair<int, int>> order;
    for (const auto& r : recs) {
        if (r.fields[0] == "simplex") {
            if (r.fields.size() < 2)
                fail(r, "'simplex' needs at least one vertex");
            Osc::Simplex s;
            for (std::size_t k = 1; k < r.fields.size(); ++k) {
                s.push_back(vertex(r, r.fields[k]));
                if (k > 1)
                    order.emplace_back(s[k - 2], s[k - 1]);
            }
            simplices.push_back(std::move(s));
        } else if (r.fields[0] == "order") {
            expect_fields(r, 3);
            order.emplace_back(vertex(r, r.fields[1]), vertex(r, r.fields[2]));
        } else if (r.fields[0] != "vertex") {
            fail(r, "unknown record '" + r.fields[0] + "'");
        }
    }
    return Osc::generated(std::move(names), simplices, order);
}

std::string write_osc(const Osc& y)
{
    std::vector<std::string> vnames = y.names();
    std::sort(vnames.begin(), vnames.end());
    std::string out = "osc\n";
    for (const auto& n : vnames)
        out += "vertex " + n + "\n";
    std::vector<std::vector<std::string>> lines;
    for (const auto& s : y.maximal_simplices()) {
        if (s.size() < 2)
            continue;
        std::vector<std::string> line;
        for (int v : y.ordered(s))
            line.push_back(y.name(v));
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) {
        out += "simplex";
        for (const auto& n : line)
            out += " " + n;
        out += "\n";
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [a, b] : y.covers())
        covers.emplace_back(y.name(a), y.name(b));
    std::sort(covers.begin(), covers.end());
    for (const auto& [a, b] : covers)
        out += "order " + a + " " + b + "\n";
    return out;
}

std::string write_smap(const SimplicialMap& f, const std::string& source_ref, const std::string& target_ref)
{
    const auto& x = *f.source();
    const auto& y = *f.target();
    std::string out = "smap\nsource " + source_ref + "\ntarget " + target_ref + "\n";
    for (GenId g : canonical_order(x)) {
        const auto& t = f(g);
        out += "assign " + x.name(g) + " " + values_string(t.surjection) + " " + y.name(t.generator) + "\n";
    }
    return out;
}

std::string write_oscmap(const OscMap& f, const std::string& source_ref, const std::string& target_ref)
{
    const auto& a = *f.source();
    std::string out = "oscmap\nsource " + source_ref + "\ntarget " + target_ref + "\n";
    std::vector<std::pair<std::string, std::string>> lines;
    for (int v = 0; v < static_cast<int>(a.size()); ++v)
        lines.emplace_back(a.name(v), f.target()->name(f(v)));
    std::sort(lines.begin(), lines.end());
    for (const auto& [s, t] : lines)
        out += "vertex " + s + " " + t + "\n";
    return out;
}

std::string DocumentStore::key(const std::string& path) const
{
    if (path == "-")
        return path;
    std::error_code ec;
    auto p = std::filesystem::weakly_canonical(path, ec);
    return ec ? path : p.string();
}

std::string DocumentStore::resolve(const std::string& ref, const std::string& from) const
{
    std::filesystem::path p(ref);
    if (p.is_absolute() || from == "-")
        return ref;
    return (std::filesystem::path(from).parent_path() / p).string();
}

std::string DocumentStore::text(const std::string& path)
{
    const auto k = key(path);
    if (auto it = texts_.find(k); it != texts_.end())
        return it->second;
    std::string content;
    if (path == "-") {
        content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InvalidArgument("cannot read '" + path + "'");
        content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return texts_[k] = content;
}

SsetPtr DocumentStore::sset(const std::string& path)
{
    const auto k = key(path);
    if (auto it = ssets_.find(k); it != ssets_.end())
        return it->second;
    auto x = parse_sset(text(path));
    if (const auto report = validate(x); !report.ok())
        throw InvalidPresentation(path + ": " + report.violations.front().kind + " at '" +
                                  report.violations.front().generator + "': " + report.violations.front().message);
    return ssets_[k] = share(std::move(x));
}

OscPtr DocumentStore::osc(const std::string& path)
{
    const auto k = key(path);
    if (auto it = oscs_.find(k); it != oscs_.end())
        return it->second;
    return oscs_[k] = share(parse_osc(text(path)));
}

SimplicialMap DocumentStore::smap(const std::string& path)
{
    const auto recs = records(text(path), "smap");
    std::string src, tgt;
    for (const auto& r : recs) {
        if (r.fields[0] == "source" || r.fields[0] == "target") {
            expect_fields(r, 2);
            (r.fields[0] == "source" ? src : tgt) = resolve(r.fields[1], path);
        }
    }
    if (src.empty() || tgt.empty())
        throw ParseError(path + ": map needs 'source' and 'target' records");
    const auto x = sset(src);
    const auto y = sset(tgt);
    std::vector<std::optional<DegenerateTerm>> assign(x->size());
    std::vector<std::optional<GenId>> vmap(x->size());
    bool vertex_form = false, assign_form = false;
    for (const auto& r : recs) {
        if (r.fields[0] == "assign") {
            expect_fields(r, 4);
            assign_form = true;
            const auto g = x->find(r.fields[1]);
            if (!g)
                fail(r, "unknown source generator '" + r.fields[1] + "'");
            assign[*g] = term_from(r, *y, r.fields[2], r.fields[3]);
        } else if (r.fields[0] == "vertex") {
            expect_fields(r, 3);
            vertex_form = true;
            const auto a = x->find(r.fields[1]);
            const auto b = y->find(r.fields[2]);
            if (!a || x->dim(*a) != 0)
                fail(r, "unknown source vertex '" + r.fields[1] + "'");
            if (!b || y->dim(*b) != 0)
                fail(r, "unknown target vertex '" + r.fields[2] + "'");
            vmap[*a] = *b;
        } else if (r.fields[0] != "source" && r.fields[0] != "target") {
            fail(r, "unknown record '" + r.fields[0] + "'");
        }
    }
    if (vertex_form && assign_form)
        throw ParseError(path + ": mixes 'assign' and 'vertex' records");
    if (vertex_form) {
        std::vector<GenId> vi(x->size(), 0);
        for (GenId g = 0; g < x->size(); ++g) {
            if (x->dim(g) != 0)
                continue;
            if (!vmap[g])
                throw ParseError(path + ": no image for vertex '" + x->name(g) + "'");
            vi[g] = *vmap[g];
        }
        auto m = SimplicialMap::from_vertex_map(x, y, vi);
        if (!m)
            throw InvalidArgument(path + ": the vertex assignment does not extend to a map");
        return *m;
    }
    std::vector<DegenerateTerm> a;
    for (GenId g = 0; g < x->size(); ++g) {
        if (!assign[g])
            throw ParseError(path + ": no image for generator '" + x->name(g) + "'");
        a.push_back(*assign[g]);
    }
    SimplicialMap m(x, y, std::move(a));
    if (const auto report = m.check(); !report.ok())
        throw InvalidArgument(path + ": not a simplicial map: " + report.violations.front().message);
    return m;
}

OscMap DocumentStore::oscmap(const std::string& path)
{
    const auto recs = records(text(path), "oscmap");
    std::string src, tgt;
    for (const auto& r : recs)
        if (r.fields[0] == "source" || r.fields[0] == "target") {
            expect_fields(r, 2);
            (r.fields[0] == "source" ? src : tgt) = resolve(r.fields[1], path);
        }
    if (src.empty() || tgt.empty())
        throw ParseError(path + ": map needs 'source' and 'target' records");
    const auto a = osc(src);
    const auto b = osc(tgt);
    std::vector<int> vm(a->size(), -1);
    for (const auto& r : recs) {
        if (r.fields[0] == "vertex") {
            expect_fields(r, 3);
            const auto u = a->find(r.fields[1]);
            const auto v = b->find(r.fields[2]);
            if (!u)
                fail(r, "unknown source vertex '" + r.fields[1] + "'");
            if (!v)
                fail(r, "unknown target vertex '" + r.fields[2] + "'");
            vm[static_cast<std::size_t>(*u)] = *v;
        } else if (r.fields[0] != "source" && r.fields[0] != "target") {
            fail(r, "unknown record '" + r.fields[0] + "'");
        }
    }
    for (std::size_t v = 0; v < vm.size(); ++v)
        if (vm[v] < 0)
            throw ParseError(path + ": no image for vertex '" + a->name(static_cast<int>(v)) + "'");
    OscMap m(a, b, std::move(vm));
    if (const auto report = m.check(); !report.ok())
        throw InvalidOsc(path + ": " + report.violations.front());
    return m;
}

std::string export_off(const FiniteSimplicialSet& x)
{
    if (x.max_dim() > 3)
        throw PreconditionViolated("OFF export needs dimension at most 3");
    const auto verts = x.generators_of_dim(0);
    std::vector<std::size_t> index(x.size(), 0);
    std::string body;
    char buf[128];
    for (std::size_t k = 0; k < verts.size(); ++k) {
        index[verts[k]] = k;
        const auto* c = x.coordinates(verts[k]);
        if (!c)
            throw PreconditionViolated("OFF export needs coordinates on vertex '" + x.name(verts[k]) + "'");
        if (c->size() > 3)
            throw PreconditionViolated("OFF export needs at most 3 coordinates");
        double p[3] = {0, 0, 0};
        std::copy(c->begin(), c->end(), p);
        std::snprintf(buf, sizeof buf, "%.9f %.9f %.9f\n", p[0], p[1], p[2]);
        body += buf;
    }
    const auto tris = x.generators_of_dim(2);
    const auto table = vertex_table(x);
    for (GenId t : tris) {
        const auto& v = table[t];
        body += "3 " + std::to_string(index[v[0]]) + " " + std::to_string(index[v[1]]) + " " +
                std::to_string(index[v[2]]) + "\n";
    }
    return "OFF\n" + std::to_string(verts.size()) + " " + std::to_string(tris.size()) + " 0\n" + body;
}

std::string export_dot(const FiniteSimplicialSet& x)
{
    std::string out = "digraph simpset {\n";
    for (GenId v : x.generators_of_dim(0))
        out += "  " + quoted(x.name(v)) + ";\n";
    const auto table = vertex_table(x);
    for (GenId e : x.generators_of_dim(1))
        out += "  " + quoted(x.name(table[e][0])) + " -> " + quoted(x.name(table[e][1])) + " [label=" +
               quoted(x.name(e)) + "];\n";
    return out + "}\n";
}

}  // namespace simpset
