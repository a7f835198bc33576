#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simpset/delta.hpp"

namespace simpset {

using GenId = std::uint32_t;

/// A simplex in Eilenberg-Zilber form: surjection^*(generator).
/// The term's dimension is surjection.domain_dim().
struct DegenerateTerm {
    MonotoneMap surjection;
    GenId generator;

    static DegenerateTerm nondegenerate(GenId g, int dim)
    {
        return {MonotoneMap::identity(dim), g};
    }
    int dim() const { return surjection.domain_dim(); }
    bool is_nondegenerate() const { return surjection.is_identity(); }

    friend bool operator==(const DegenerateTerm&, const DegenerateTerm&) = default;
    friend std::strong_ordering operator<=>(const DegenerateTerm& a, const DegenerateTerm& b)
    {
        if (auto c = a.generator <=> b.generator; c != 0)
            return c;
        return a.surjection <=> b.surjection;
    }
};

/// A finite simplicial set presented by its nondegenerate simplices
/// (generators) and their faces in EZ normal form. Generators are added in
/// nondecreasing order of use: faces may only reference existing generators.
class FiniteSimplicialSet {
public:
    FiniteSimplicialSet() = default;

    /// Adds a generator; names are unique and contain no whitespace.
    GenId add_generator(std::string name, int dim);
    /// Sets face i of g. Throws on shape errors; the simplicial identities
    /// are left to validate().
    void set_face(GenId g, int i, DegenerateTerm term);
    void set_coordinates(GenId vertex, std::vector<double> coords);

    std::size_t size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }
    int dim(GenId g) const { return dims_.at(g); }
    const std::string& name(GenId g) const { return names_.at(g); }
    const DegenerateTerm& face(GenId g, int i) const;
    bool has_face(GenId g, int i) const;
    std::optional<GenId> find(std::string_view name) const;
    GenId at(std::string_view name) const;

    /// -1 for the empty simplicial set.
    int max_dim() const;
    std::vector<GenId> generators_of_dim(int d) const;
    /// Count of generators per dimension 0..max_dim.
    std::vector<std::size_t> profile() const;

    bool has_coordinates() const;
    const std::vector<double>* coordinates(GenId vertex) const;

    DegenerateTerm term(GenId g) const { return DegenerateTerm::nondegenerate(g, dim(g)); }

private:
    std::vector<std::string> names_;
    std::vector<int> dims_;
    std::vector<std::vector<std::optional<DegenerateTerm>>> faces_;
    std::vector<std::optional<std::vector<double>>> coords_;
    std::unordered_map<std::string, GenId> index_;
};

using SsetPtr = std::shared_ptr<const FiniteSimplicialSet>;

inline SsetPtr share(FiniteSimplicialSet x)
{
    return std::make_shared<const FiniteSimplicialSet>(std::move(x));
}

/// Normal form of theta^*(t). Requires codomain(theta) == dim(t).
DegenerateTerm apply_operator(const FiniteSimplicialSet& x, const DegenerateTerm& t, const MonotoneMap& theta);

inline DegenerateTerm apply_face(const FiniteSimplicialSet& x, const DegenerateTerm& t, int i)
{
    return apply_operator(x, t, MonotoneMap::face(t.dim(), i));
}

/// Vertex tuple of generator g: entry i is the vertex at position i.
std::vector<GenId> vertices(const FiniteSimplicialSet& x, GenId g);
/// Vertex tuples of every generator, indexed by GenId.
std::vector<std::vector<GenId>> vertex_table(const FiniteSimplicialSet& x);
/// Vertex tuple of an arbitrary term.
std::vector<GenId> term_vertices(const std::vector<std::vector<GenId>>& table, const DegenerateTerm& t);

struct Violation {
    std::string kind;
    std::string generator;
    std::vector<int> indices;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate(const FiniteSimplicialSet& x);

/// The same presentation under new generator names (indexed by GenId).
FiniteSimplicialSet rename_generators(const FiniteSimplicialSet& x, const std::vector<std::string>& names);

/// Structural equality keyed by generator names.
bool same_presentation(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

/// A map of presentations: each source generator goes to a term of the
/// same dimension in the target.
class SimplicialMap {
public:
    SimplicialMap(SsetPtr source, SsetPtr target, std::vector<DegenerateTerm> assignment);

    static SimplicialMap identity(const SsetPtr& x);
    /// Lifts a vertex assignment (indexed by source vertex GenId; entries
    /// for higher generators ignored) into a target with Properties B and C.
    /// Returns nullopt when some simplex has no image.
    static std::optional<SimplicialMap> from_vertex_map(const SsetPtr& source, const SsetPtr& target,
                                                        const std::vector<GenId>& vertex_image);

    const SsetPtr& source() const { return source_; }
    const SsetPtr& target() const { return target_; }
    const std::vector<DegenerateTerm>& assignment() const { return assignment_; }
    const DegenerateTerm& operator()(GenId g) const { return assignment_.at(g); }
    /// Image of an arbitrary term of the source.
    DegenerateTerm image(const DegenerateTerm& t) const;
    GenId vertex_image(GenId v) const { return assignment_.at(v).generator; }

    /// Dimension and face compatibility.
    ValidationReport check() const;
    bool is_identity() const;
    /// Levelwise injective: injective on generators, nondegenerate images.
    bool is_injective() const;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_;
    }

private:
    SsetPtr source_;
    SsetPtr target_;
    std::vector<DegenerateTerm> assignment_;
};

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

}  // namespace simpset
