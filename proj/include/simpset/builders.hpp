#pragma once

#include <vector>

#include "simpset/simplicial_set.hpp"

namespace simpset {

/// Name of a vertex subset of a standard simplex: its elements as base-36
/// digits in increasing order, e.g. {0,2} -> "02".
std::string subset_name(std::uint32_t mask);

/// The standard n-simplex. Generators are the nonempty vertex subsets;
/// vertex 0 sits at the origin and vertex i at the i-th unit vector.
FiniteSimplicialSet delta(int n);
/// The boundary of delta(n); empty for n = 0.
FiniteSimplicialSet boundary(int n);
/// The horn missing the top simplex and the face opposite vertex k.
FiniteSimplicialSet horn(int n, int k);
/// The simplicial subset of delta(n) on the given vertex subsets, which
/// must be closed under taking nonempty subsets.
FiniteSimplicialSet delta_subcomplex(int n, const std::vector<std::uint32_t>& masks);

/// One vertex "v" and one edge "e" with both faces at v.
FiniteSimplicialSet circle();
/// Vertices "0", "1"; edges "a": 0 -> 1 and "b": 1 -> 0.
FiniteSimplicialSet opposing_pair();
/// boundary(n) with two n-simplices glued along it; n >= 1.
FiniteSimplicialSet parallel_pair(int n);
/// Vertices a, b, c and the edges a->b, b->c, c->a.
FiniteSimplicialSet three_cycle();
/// Two vertices a and b.
FiniteSimplicialSet two_points();
/// Two loops e1, e2 at a single vertex v.
FiniteSimplicialSet wedge_of_circles();

/// Disjoint union; generator names of the k-th part get the prefix "k:".
FiniteSimplicialSet disjoint_union(const std::vector<const FiniteSimplicialSet*>& parts);

/// The inclusion of delta_subcomplex(n, masks) into delta(n).
SimplicialMap delta_inclusion(const SsetPtr& sub, const SsetPtr& full);

/// The simplicial subset of x spanned by the given vertices (all
/// generators whose vertices lie in the set) and its full inclusion.
SimplicialMap induced_subobject(const SsetPtr& x, const std::vector<GenId>& vertex_set);

/// The unique map to delta(0).
SimplicialMap to_point(const SsetPtr& x, const SsetPtr& point);

}  // namespace simpset
