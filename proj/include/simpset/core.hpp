#pragma once

#include <optional>
#include <vector>

#include "simpset/congruence.hpp"
#include "simpset/simplicial_set.hpp"

namespace simpset {

/// Every generator has pairwise distinct vertices.
bool property_B(const FiniteSimplicialSet& x);
/// No two generators share a vertex set. Throws NotNonsingular unless
/// property_B(x).
bool property_C(const FiniteSimplicialSet& x);
inline bool in_sset_un(const FiniteSimplicialSet& x)
{
    return property_B(x) && property_C(x);
}

/// A directed cycle of nondegenerate edges, listed head to tail.
struct Loop {
    std::vector<GenId> edges;
};

/// Source (face 1) and target (face 0) of a nondegenerate edge.
std::pair<GenId, GenId> edge_ends(const FiniteSimplicialSet& x, GenId edge);

/// One witness cycle per nontrivial strongly connected component of the
/// edge graph, plus every edge whose ends coincide. Empty iff the edge
/// graph is acyclic.
std::vector<Loop> n_loop_detect(const FiniteSimplicialSet& x);

/// A partition of the vertices; block_of is indexed by GenId and is -1 on
/// generators of positive dimension.
struct VertexPartition {
    std::vector<std::vector<GenId>> blocks;
    std::vector<int> block_of;

    bool is_discrete() const;
    static VertexPartition from_blocks(const FiniteSimplicialSet& x, std::vector<std::vector<GenId>> blocks);
};

/// Strongly connected components of the directed edge graph. Blocks are
/// sorted and ordered by their least vertex.
VertexPartition scc_classes(const FiniteSimplicialSet& x);
/// Connected components of the undirected edge graph.
VertexPartition path_components(const FiniteSimplicialSet& x);

/// Identifies the vertices of each block; the surviving vertex of a block
/// is its least one.
Projection quotient_vertices(const SsetPtr& x, const VertexPartition& p);

/// Presentation of the fundamental category: objects are the vertices,
/// arrows the nondegenerate edges, one relation h = g o f per 2-generator
/// with f = d2, g = d0, h = d1 (degenerate faces become identities).
struct FundamentalCategory {
    struct Arrow {
        GenId edge;
        GenId source;
        GenId target;
    };
    struct Relation {
        GenId simplex;
        std::optional<GenId> f, g, h;
    };
    std::vector<GenId> objects;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
};

FundamentalCategory fundamental_category(const FiniteSimplicialSet& x);

}  // namespace simpset
