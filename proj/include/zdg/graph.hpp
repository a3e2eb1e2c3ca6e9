#pragma once

#include <string>
#include <vector>

#include "zdg/exact.hpp"
#include "zdg/types.hpp"

namespace zdg {

/// Undirected graph that may carry loops. Adjacency entries are 0/1 with a
/// symmetric matrix; diagonal 1 marks a loop.
class LoopGraph {
 public:
  LoopGraph() = default;
  LoopGraph(std::vector<std::string> labels, AdjacencyMatrix adjacency);

  Index vertex_count() const { return adj_.rows(); }
  const std::string& label(Index v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const AdjacencyMatrix& adjacency() const { return adj_; }
  bool edge(Index u, Index v) const { return adj_(u, v) != 0; }
  bool loop(Index v) const { return adj_(v, v) != 0; }
  /// Edges counted once; a loop counts as one edge.
  Index edge_count() const;
  Index loop_count() const;

 private:
  std::vector<std::string> labels_;
  AdjacencyMatrix adj_;
};

/// Tensor/Kronecker product: (u,v) ~ (u',v') iff u~u' and v~v'. Vertex pairs
/// are enumerated row-major, so the adjacency equals kronecker(A(g), A(h)).
LoopGraph direct_product(const LoopGraph& g, const LoopGraph& h);

/// Disjoint union plus all cross edges; internal edges and loops preserved.
LoopGraph complete_product(const LoopGraph& g, const LoopGraph& h);

/// Glue v in g to w in h. The merged vertex (kept at position v) inherits the
/// union of incidences and carries a loop iff v or w did.
LoopGraph point_identification(const LoopGraph& g, const LoopGraph& h, Index v, Index w);

/// Induced subgraph on the complement of s; label order preserved.
LoopGraph delete_vertices(const LoopGraph& g, const std::vector<Index>& s);

/// Adjacency J - A: complements edges and loops alike.
LoopGraph generalized_complement(const LoopGraph& g);

/// Exact integer copy of the adjacency matrix.
IntMatrix adjacency_matrix(const LoopGraph& g);

/// Multiplicity of the eigenvalue 0: #V - rank A(g), computed exactly.
Index nullity(const LoopGraph& g);

/// True iff the adjacency matrices agree under the vertex bijection
/// relabel: V(g) -> V(h). Throws std::invalid_argument on dimension mismatch
/// or when relabel is not a bijection.
bool is_same_labeled_graph(const LoopGraph& g, const LoopGraph& h,
                           const std::vector<Index>& relabel);

/// DOT export; loops render as self-edges and labels are quoted.
std::string to_dot(const LoopGraph& g, const std::string& name = "G");

}  // namespace zdg
