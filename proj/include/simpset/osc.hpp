#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simpset/congruence.hpp"
#include "simpset/hom.hpp"
#include "simpset/reflectors.hpp"

namespace simpset {

/// An ordered simplicial complex: vertices 0..size()-1, a family of
/// simplices (sorted vertex lists) and a partial order that is total on
/// every simplex.
class OrderedSimplicialComplex {
public:
    using Simplex = std::vector<int>;

    OrderedSimplicialComplex() = default;
    /// Stores the data as given; leq is a size() x size() matrix.
    OrderedSimplicialComplex(std::vector<std::string> names, std::set<Simplex> simplices,
                             std::vector<std::vector<char>> leq);

    /// Closes the simplices downward (every vertex becomes a simplex) and the
    /// order reflexively and transitively, then validates; throws InvalidOsc.
    static OrderedSimplicialComplex generated(std::vector<std::string> names, const std::vector<Simplex>& simplices,
                                              const std::vector<std::pair<int, int>>& order);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;
    const std::set<Simplex>& simplices() const { return simplices_; }
    bool is_simplex(Simplex s) const;
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
    const std::vector<std::vector<char>>& order() const { return leq_; }

    /// The vertices of a simplex listed in increasing order.
    Simplex ordered(const Simplex& s) const;
    std::vector<Simplex> maximal_simplices() const;
    /// Pairs a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const OrderedSimplicialComplex&, const OrderedSimplicialComplex&) = default;

private:
    std::vector<std::string> names_;
    std::set<Simplex> simplices_;
    std::vector<std::vector<char>> leq_;
};

using Osc = OrderedSimplicialComplex;
using OscPtr = std::shared_ptr<const Osc>;

inline OscPtr share(Osc y)
{
    return std::make_shared<const Osc>(std::move(y));
}

struct OscReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

OscReport validate_osc(const Osc& y);

/// A vertex map that preserves the order and carries simplices to simplices.
class OscMap {
public:
    OscMap(OscPtr source, OscPtr target, std::vector<int> vertex_map);

    const OscPtr& source() const { return source_; }
    const OscPtr& target() const { return target_; }
    const std::vector<int>& vertex_map() const { return map_; }
    int operator()(int v) const { return map_.at(static_cast<std::size_t>(v)); }

    OscReport check() const;
    bool is_identity() const;

    friend bool operator==(const OscMap& a, const OscMap& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
    }

private:
    OscPtr source_;
    OscPtr target_;
    std::vector<int> map_;
};

/// g o f.
OscMap compose(const OscMap& g, const OscMap& f);

/// U: one generator per simplex, vertices in increasing order, named by the
/// vertex names joined with ",". Vertex v of y is generator v of the result.
SsetPtr U(const Osc& y);
/// U on maps between the given U-images.
SimplicialMap U_map(const OscMap& f, const SsetPtr& u_source, const SsetPtr& u_target);

/// F of an object with Properties B and C. class_of sends each vertex of x
/// to its vertex of the result (-1 on other generators).
struct FImage {
    OscPtr object;
    std::vector<int> class_of;
};

FImage F(const SsetPtr& x);
OscMap F_map(const SimplicialMap& f, const FImage& fs, const FImage& ft);

/// X/~ built directly from strongly connected classes, with its projection.
Projection quotient_un(const SsetPtr& x);

/// eta_X: X -> U F X.
Projection unit(const SsetPtr& x);
/// eps_Y: F U Y -> Y.
OscMap counit(const OscPtr& y);

struct AdjunctionReport {
    bool f_side = false;  // eps_{FX} o F(eta_X) = id
    bool u_side = false;  // U(eps_Y) o eta_{UY} = id
    bool ok() const { return f_side && u_side; }
};

/// Triangle identities of F -| U at x (in sSet_un) and y.
AdjunctionReport triangle_check(const SsetPtr& x, const OscPtr& y);

struct OscCone {
    OscPtr object;
    std::vector<OscMap> maps;
};

/// Vertices are pairs "(a,b)" ordered componentwise; simplices are the
/// chains whose projections are simplices. maps = {pr1, pr2}.
OscCone product_osc(const OscPtr& a, const OscPtr& b);
/// The full subcomplex on {a : f(a) = g(a)} with the restricted order;
/// returns its inclusion.
OscMap equalizer_osc(const OscMap& f, const OscMap& g);
/// Names of part k get the prefix "k:".
OscCone coproduct_osc(const std::vector<OscPtr>& parts);
/// Through coequalizer_un of the U-images, then F, then the least order
/// making the projection order preserving. Order cycles created by that
/// step are collapsed and the loop repeats.
OscMap coequalizer_osc(const OscMap& f, const OscMap& g, const ReflectOptions& opts = {});
/// The same coequalizer computed on vertex classes alone.
OscMap coequalizer_osc_direct(const OscMap& f, const OscMap& g);
/// Pushout of j: A -> B and g: A -> C; maps = {B -> P, C -> P}.
OscCone pushout_osc(const OscMap& j, const OscMap& g, const ReflectOptions& opts = {});

struct OscHomOptions {
    std::uint64_t budget = default_budget();
    bool shuffle = false;
    std::uint64_t seed = 0;
};

std::uint64_t for_each_hom_osc(const OscPtr& a, const OscPtr& b, const OscHomOptions& opts,
                               const std::function<bool(const OscMap&)>& visit);
std::vector<OscMap> hom_enumerate_osc(const OscPtr& a, const OscPtr& b, const OscHomOptions& opts = {});

}  // namespace simpset
