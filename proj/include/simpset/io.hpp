#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "simpset/osc.hpp"
#include "simpset/simplicial_set.hpp"

namespace simpset {

/// The kind marker on the first record line: "sset", "osc", "smap" or "oscmap".
std::string document_kind(std::string_view text);

/// Records: "gen NAME DIM", "face NAME I VALUES TARGET" (VALUES is the
/// comma separated surjection), "coord NAME X...". Lines starting with '#'
/// are comments. Throws ParseError; validation is left to the caller.
FiniteSimplicialSet parse_sset(std::string_view text);
/// Canonical form: generators by (dimension, name), faces after their
/// generator, coordinates last; coordinates printed in shortest round-trip form.
std::string write_sset(const FiniteSimplicialSet& x);

/// Records: "vertex NAME", "simplex NAME..." (listed in increasing order),
/// "order A B". The loader closes simplices downward and the order
/// reflexively and transitively; throws ParseError or InvalidOsc.
Osc parse_osc(std::string_view text);
/// Canonical form: vertices sorted by name, maximal simplices and covering
/// relations sorted lexicographically.
std::string write_osc(const Osc& y);

/// "smap" documents: "source PATH", "target PATH", then either
/// "assign NAME VALUES TARGET" for every source generator or "vertex A B"
/// for every source vertex (targets with Properties B and C).
std::string write_smap(const SimplicialMap& f, const std::string& source_ref, const std::string& target_ref);
/// "oscmap" documents: "source PATH", "target PATH", "vertex A B".
std::string write_oscmap(const OscMap& f, const std::string& source_ref, const std::string& target_ref);

/// Loads documents by path ("-" is standard input, read at most once).
/// Paths inside map documents are relative to the map's directory. Each file
/// is loaded once, so maps naming the same file share the object.
class DocumentStore {
public:
    std::string text(const std::string& path);
    /// Parses and validates; throws InvalidPresentation on violations.
    SsetPtr sset(const std::string& path);
    OscPtr osc(const std::string& path);
    SimplicialMap smap(const std::string& path);
    OscMap oscmap(const std::string& path);

private:
    std::string key(const std::string& path) const;
    std::string resolve(const std::string& ref, const std::string& from) const;

    std::map<std::string, std::string> texts_;
    std::map<std::string, SsetPtr> ssets_;
    std::map<std::string, OscPtr> oscs_;
};

/// "OFF", "V F 0", one "%.9f %.9f %.9f" line per vertex (padded to three
/// coordinates), one "3 i j k" line per 2-generator. Requires coordinates on
/// every vertex, at most three of them, and dimension at most 3.
std::string export_off(const FiniteSimplicialSet& x);
/// A directed graph with one arc per nondegenerate edge, source to target.
std::string export_dot(const FiniteSimplicialSet& x);

}  // namespace simpset
