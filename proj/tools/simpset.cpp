#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simpset/colimits.hpp"
#include "simpset/core.hpp"
#include "simpset/errors.hpp"
#include "simpset/hom.hpp"
#include "simpset/homology.hpp"
#include "simpset/io.hpp"
#include "simpset/osc.hpp"
#include "simpset/reflectors.hpp"
#include "simpset/subdivision.hpp"

using namespace simpset;

namespace {

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw InvalidArgument("cannot write '" + out + "'");
    f << text;
}

// A path to `file` usable from inside a document stored at `doc`.
std::string ref_from(const std::string& file, const std::string& doc)
{
    namespace fs = std::filesystem;
    const auto base = fs::absolute(doc).parent_path();
    return fs::relative(fs::absolute(file), base).generic_string();
}

std::string one_line(std::string s)
{
    while (!s.empty() && s.back() == '\n')
        s.pop_back();
    for (std::size_t k = 0; (k = s.find('\n', k)) != std::string::npos;)
        s.replace(k, 1, "; ");
    return s;
}

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"simpset: finite simplicial sets, their reflectors, ordered simplicial complexes and homology"};
    app.require_subcommand(1);
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 0;
    app.add_option("--budget", budget, "Maximum candidate assignments per enumeration (default SIMPSET_BUDGET or 10^6)");
    app.add_option("--seed", seed, "Seed for randomized choices");

    std::function<void()> run;
    DocumentStore store;
    auto hom_opts = [&] {
        HomOptions h;
        h.budget = budget;
        h.seed = seed;
        return h;
    };
    auto reflect_opts = [&] {
        ReflectOptions r;
        r.hom = hom_opts();
        r.seed = seed;
        return r;
    };

    std::string file = "-", file2, out, map_out, cat, property, format;
    int times = 1, max_dim = 2;
    std::string provenance;

    auto* validate_cmd = app.add_subcommand("validate", "Check a document and report violations");
    validate_cmd->add_option("FILE", file, "Input document (default stdin)");
    int validate_status = 0;
    validate_cmd->callback([&] {
        run = [&] {
            const auto text = store.text(file);
            const auto kind = document_kind(text);
            if (kind == "sset") {
                const auto report = validate(parse_sset(text));
                std::cout << report.to_string();
                validate_status = report.ok() ? 0 : 1;
            } else if (kind == "osc") {
                store.osc(file);
                std::cout << "ok\n";
            } else if (kind == "smap") {
                store.smap(file);
                std::cout << "ok\n";
            } else if (kind == "oscmap") {
                store.oscmap(file);
                std::cout << "ok\n";
            } else {
                throw ParseError("unknown document kind '" + kind + "'");
            }
        };
    });

    auto* subdivide_cmd = app.add_subcommand("subdivide", "Iterated barycentric subdivision");
    subdivide_cmd->add_option("--times", times, "Number of subdivisions")->check(CLI::NonNegativeNumber);
    subdivide_cmd->add_option("--provenance", provenance, "Write the flag table of the last step to this file");
    subdivide_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    subdivide_cmd->add_option("FILE", file, "Input document (default stdin)");
    subdivide_cmd->callback([&] {
        run = [&] {
            SsetPtr x = store.sset(file);
            std::optional<Subdivision> last;
            SsetPtr base = x;
            for (int k = 0; k < times; ++k) {
                base = x;
                last = sd(x);
                x = last->object;
            }
            if (!provenance.empty()) {
                if (!last)
                    throw InvalidArgument("--provenance needs --times at least 1");
                emit(provenance_table(*last, *base), provenance);
            }
            emit(write_sset(*x), out);
        };
    });

    auto add_reflector = [&](const std::string& name, const std::string& help,
                             std::function<Projection(const SsetPtr&, const ReflectOptions&)> fn) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("-o,--output", out, "Output file (default stdout)");
        cmd->add_option("--map-out", map_out, "Write the projection map here (needs --output and a file input)");
        cmd->add_option("FILE", file, "Input document (default stdin)");
        cmd->callback([&, fn] {
            run = [&, fn] {
                if (!map_out.empty() && (out.empty() || out == "-" || file == "-"))
                    throw InvalidArgument("--map-out needs --output and an input file");
                const auto p = fn(store.sset(file), reflect_opts());
                emit(write_sset(*p.object), out);
                if (!map_out.empty())
                    emit(write_smap(p.map, ref_from(file, map_out), ref_from(out, map_out)), map_out);
            };
        });
    };
    add_reflector("desingularize", "Universal Property-B quotient", desingularize);
    add_reflector("localize", "Property-C reflector on a Property-B input", localize);
    add_reflector("normalize", "Reflection into Properties B and C", normalize_to_un);

    auto* to_osc_cmd = app.add_subcommand("to-osc", "Ordered simplicial complex F(X) of an object in sSet_un");
    to_osc_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    to_osc_cmd->add_option("FILE", file, "Input document (default stdin)");
    to_osc_cmd->callback([&] { run = [&] { emit(write_osc(*F(store.sset(file)).object), out); }; });

    auto* to_sset_cmd = app.add_subcommand("to-sset", "Simplicial set U(Y) of an ordered simplicial complex");
    to_sset_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    to_sset_cmd->add_option("FILE", file, "Input document (default stdin)");
    to_sset_cmd->callback([&] { run = [&] { emit(write_sset(*U(*store.osc(file))), out); }; });

    auto* pushout_cmd = app.add_subcommand("pushout", "Pushout of a span given as two map files with a common source");
    pushout_cmd->add_option("--cat", cat, "Category")->check(CLI::IsMember({"sset", "ns", "un"}))->required();
    pushout_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    pushout_cmd->add_option("LEFT", file)->required();
    pushout_cmd->add_option("RIGHT", file2)->required();
    pushout_cmd->callback([&] {
        run = [&] {
            const auto l = store.smap(file);
            const auto r = store.smap(file2);
            const auto p = cat == "sset" ? pushout_sset(l, r)
                           : cat == "ns" ? pushout_ns(l, r, reflect_opts())
                                         : pushout_un(l, r, reflect_opts());
            emit(write_sset(*p.object), out);
        };
    });

    auto* coeq_cmd = app.add_subcommand("coequalize", "Coequalizer of two parallel map files");
    coeq_cmd->add_option("--cat", cat, "Category")->check(CLI::IsMember({"sset", "un", "osc"}))->required();
    coeq_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    coeq_cmd->add_option("F", file)->required();
    coeq_cmd->add_option("G", file2)->required();
    coeq_cmd->callback([&] {
        run = [&] {
            if (cat == "osc") {
                const auto q = coequalizer_osc(store.oscmap(file), store.oscmap(file2), reflect_opts());
                emit(write_osc(*q.target()), out);
                return;
            }
            const auto f = store.smap(file);
            const auto g = store.smap(file2);
            const auto q = cat == "sset" ? coequalizer_sset(f, g) : coequalizer_un(f, g, reflect_opts());
            emit(write_sset(*q.object), out);
        };
    });

    auto* product_cmd = app.add_subcommand("product", "Binary product");
    product_cmd->add_option("--cat", cat, "Category")->check(CLI::IsMember({"osc"}))->required();
    product_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    product_cmd->add_option("A", file)->required();
    product_cmd->add_option("B", file2)->required();
    product_cmd->callback([&] {
        run = [&] { emit(write_osc(*product_osc(store.osc(file), store.osc(file2)).object), out); };
    });

    auto* homology_cmd = app.add_subcommand("homology", "Integer homology up to a dimension");
    homology_cmd->add_option("--max-dim", max_dim, "Highest dimension reported")->required()->check(
        CLI::NonNegativeNumber);
    format = "text";
    homology_cmd->add_option("--format", format, "text or rows")->check(CLI::IsMember({"text", "rows"}));
    homology_cmd->add_option("FILE", file, "Input document (default stdin)");
    homology_cmd->callback([&] {
        run = [&] {
            const auto p = homology(*store.sset(file), max_dim);
            std::cout << (format == "rows" ? p.to_rows() : p.to_text());
        };
    });

    auto* check_cmd = app.add_subcommand("check", "Check a structural property");
    check_cmd->add_option("--property", property, "Property")
        ->check(CLI::IsMember({"B", "C", "loops", "rlp", "full-inclusion"}))
        ->required();
    check_cmd->add_option("FILE", file, "Input document (default stdin)");
    check_cmd->callback([&] {
        run = [&] {
            if (property == "full-inclusion") {
                std::cout << "full-inclusion: " << yes(is_full_simplicial_inclusion(store.smap(file))) << "\n";
                return;
            }
            const auto x = store.sset(file);
            if (property == "B") {
                std::cout << "B: " << yes(property_B(*x)) << "\n";
            } else if (property == "C") {
                std::cout << "C: " << yes(property_C(*x)) << "\n";
            } else if (property == "loops") {
                const auto loops = n_loop_detect(*x);
                if (loops.empty())
                    std::cout << "loops: none found\n";
                for (const auto& l : loops) {
                    std::cout << "loop:";
                    for (GenId e : l.edges)
                        std::cout << " " << x->name(e);
                    std::cout << "\n";
                }
            } else {
                for (int i = 0; i <= std::max(x->max_dim(), 0) + 1; ++i)
                    std::cout << "rlp f_" << i << ": " << yes(rlp_check(x, family_F(i), hom_opts())) << "\n";
            }
        };
    });

    auto* hom_cmd = app.add_subcommand("hom-count", "Number of maps A -> B");
    hom_cmd->add_option("--cat", cat, "Category")->check(CLI::IsMember({"sset", "osc"}));
    hom_cmd->add_option("A", file)->required();
    hom_cmd->add_option("B", file2)->required();
    hom_cmd->callback([&] {
        run = [&] {
            if (cat == "osc") {
                OscHomOptions o;
                o.budget = budget;
                std::cout << for_each_hom_osc(store.osc(file), store.osc(file2), o, [](const OscMap&) { return true; })
                          << "\n";
            } else {
                std::cout << hom_count(store.sset(file), store.sset(file2), hom_opts()) << "\n";
            }
        };
    });

    auto* export_cmd = app.add_subcommand("export", "Export as an OFF mesh or a dot graph");
    export_cmd->add_option("--format", format, "off or dot")->check(CLI::IsMember({"off", "dot"}))->required();
    export_cmd->add_option("-o,--output", out, "Output file (default stdout)");
    export_cmd->add_option("FILE", file, "Input document (default stdin)");
    export_cmd->callback([&] {
        run = [&] {
            const auto x = store.sset(file);
            emit(format == "off" ? export_off(*x) : export_dot(*x), out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "usage: " << one_line(e.what()) << "\n";
        return 2;
    }
    try {
        run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << one_line(e.what()) << "\n";
        return 1;
    }
    return validate_status;
}
