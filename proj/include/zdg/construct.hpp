#pragma once

#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// Gamma(R): vertices are the nonzero zero-divisors in ascending element
/// order, an edge {x,y} iff xy = 0, and a loop at x iff x^2 = 0.
LoopGraph zero_divisor_graph(const FiniteRing& ring);

/// #U(R) isolated vertices labeled by the units.
LoopGraph unit_graph(const FiniteRing& ring);
/// One loop-free vertex labeled "0".
LoopGraph zero_graph(const FiniteRing& ring);
/// One looped vertex labeled "0".
LoopGraph looped_zero_graph(const FiniteRing& ring);

/// Extended graph on all #R elements in ring order: x ~ y iff xy = 0. The
/// zero element is adjacent to everything (itself included) and the units
/// hang pendant on it.
LoopGraph extended_graph(const FiniteRing& ring);

/// A zero-divisor graph together with the unit count of its ring: exactly the
/// data needed to rebuild the extended graph without the ring.
struct DecoratedGraph {
  LoopGraph graph;
  Index unit_count = 0;
};

DecoratedGraph decorated_graph(const FiniteRing& ring);

/// Extended graph built from graph data alone, via
/// (Gamma nabla Z) glued at 0 to (U nabla Z_L). Vertex layout:
/// [Gamma vertices..., zero, unit_1..unit_u].
LoopGraph extend_decorated(const DecoratedGraph& d);

/// Graph product chosen so that Gamma of a product ring is the product of the
/// factors' zero-divisor graphs: take the direct product of the extended
/// graphs and delete the zero pair and all unit pairs. Kept vertices stay in
/// row-major pair order.
DecoratedGraph gamma_product(const DecoratedGraph& a, const DecoratedGraph& b);

/// Position of each ring element in the [zero-divisors..., zero, units...]
/// layout used by extend_decorated; inverse data for product bijections.
std::vector<Index> extended_layout_positions(const FiniteRing& ring);

/// Annihilator classes of the nonzero zero-divisors, smallest-member order.
std::vector<AnnClass> zero_divisor_classes(const FiniteRing& ring);

/// Gamma_E(R): one vertex per zero-divisor annihilator class; [i] ~ [j] iff
/// rep_i * rep_j = 0 (representative-independent), loop at [i] iff rep_i^2 = 0.
struct CompressedGraph {
  std::vector<AnnClass> classes;
  AdjacencyMatrix adj;
  std::vector<std::string> labels;

  Index vertex_count() const { return adj.rows(); }
  LoopGraph to_loop_graph() const { return LoopGraph(labels, adj); }
};

CompressedGraph compressed_graph(const FiniteRing& ring);

/// Weighted quotient matrix of Gamma_E: entry (i,j) = #[j] when classes i and
/// j are adjacent (loops included), else 0. Generally non-symmetric.
IntMatrix weighted_quotient_matrix(const CompressedGraph& c);

/// Weighted quotient matrix of the extended compressed graph, with class
/// order [1], zero-divisor classes..., [0]. For products of Z_n factors this
/// equals the Kronecker product of the factor matrices up to the canonical
/// class correspondence.
IntMatrix extended_compressed_matrix(const FiniteRing& ring);

/// DOT export with class sizes as vertex attributes.
std::string to_dot(const CompressedGraph& c, const std::string& name = "GE");

}  // namespace zdg
