#include "zdg/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zdg {

LoopGraph::LoopGraph(std::vector<std::string> labels, AdjacencyMatrix adjacency)
    : labels_(std::move(labels)), adj_(std::move(adjacency)) {
  if (adj_.rows() != adj_.cols()) throw std::invalid_argument("adjacency must be square");
  if (static_cast<Index>(labels_.size()) != adj_.rows())
    throw std::invalid_argument("label count must match adjacency dimension");
  for (Index i = 0; i < adj_.rows(); ++i) {
    for (Index j = 0; j < adj_.cols(); ++j) {
      if (adj_(i, j) != 0 && adj_(i, j) != 1)
        throw std::invalid_argument("adjacency entries must be 0 or 1");
      if (adj_(i, j) != adj_(j, i)) throw std::invalid_argument("adjacency must be symmetric");
    }
  }
}

Index LoopGraph::edge_count() const {
  Index e = 0;
  for (Index i = 0; i < adj_.rows(); ++i)
    for (Index j = i; j < adj_.cols(); ++j) e += adj_(i, j);
  return e;
}

Index LoopGraph::loop_count() const {
  Index e = 0;
  for (Index i = 0; i < adj_.rows(); ++i) e += adj_(i, i);
  return e;
}

LoopGraph direct_product(const LoopGraph& g, const LoopGraph& h) {
  const Index ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ng * nh));
  for (Index i = 0; i < ng; ++i)
    for (Index j = 0; j < nh; ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
  return LoopGraph(std::move(labels), kronecker(g.adjacency(), h.adjacency()));
}

LoopGraph complete_product(const LoopGraph& g, const LoopGraph& h) {
  const Index ng = g.vertex_count(), nh = h.vertex_count();
  AdjacencyMatrix adj = AdjacencyMatrix::Zero(ng + nh, ng + nh);
  adj.topLeftCorner(ng, ng) = g.adjacency();
  adj.bottomRightCorner(nh, nh) = h.adjacency();
  adj.topRightCorner(ng, nh).setOnes();
  adj.bottomLeftCorner(nh, ng).setOnes();
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  return LoopGraph(std::move(labels), std::move(adj));
}

LoopGraph point_identification(const LoopGraph& g, const LoopGraph& h, Index v, Index w) {
  const Index ng = g.vertex_count(), nh = h.vertex_count();
  if (v < 0 || v >= ng || w < 0 || w >= nh)
    throw std::invalid_argument("point_identification: vertex out of range");
  const Index n = ng + nh - 1;
  // Vertices of g keep their positions; vertices of h (minus w) follow.
  std::vector<Index> hpos(static_cast<std::size_t>(nh));
  Index next = ng;
  for (Index j = 0; j < nh; ++j) hpos[static_cast<std::size_t>(j)] = (j == w) ? v : next++;

  AdjacencyMatrix adj = AdjacencyMatrix::Zero(n, n);
  adj.topLeftCorner(ng, ng) = g.adjacency();
  for (Index i = 0; i < nh; ++i) {
    for (Index j = 0; j < nh; ++j) {
      if (h.adjacency()(i, j))
        adj(hpos[static_cast<std::size_t>(i)], hpos[static_cast<std::size_t>(j)]) = 1;
    }
  }
  std::vector<std::string> labels = g.labels();
  for (Index j = 0; j < nh; ++j)
    if (j != w) labels.push_back(h.label(j));
  return LoopGraph(std::move(labels), std::move(adj));
}

LoopGraph delete_vertices(const LoopGraph& g, const std::vector<Index>& s) {
  const Index n = g.vertex_count();
  std::vector<char> drop(static_cast<std::size_t>(n), 0);
  for (Index v : s) {
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertices: vertex out of range");
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Index> keep;
  for (Index v = 0; v < n; ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  AdjacencyMatrix adj(static_cast<Index>(keep.size()), static_cast<Index>(keep.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(g.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j)
      adj(static_cast<Index>(i), static_cast<Index>(j)) = g.adjacency()(keep[i], keep[j]);
  }
  return LoopGraph(std::move(labels), std::move(adj));
}

LoopGraph generalized_complement(const LoopGraph& g) {
  AdjacencyMatrix adj = g.adjacency();
  for (Index i = 0; i < adj.rows(); ++i)
    for (Index j = 0; j < adj.cols(); ++j) adj(i, j) = 1 - adj(i, j);
  return LoopGraph(g.labels(), std::move(adj));
}

IntMatrix adjacency_matrix(const LoopGraph& g) { return to_exact(g.adjacency()); }

Index nullity(const LoopGraph& g) { return g.vertex_count() - rank(g.adjacency()); }

bool is_same_labeled_graph(const LoopGraph& g, const LoopGraph& h,
                           const std::vector<Index>& relabel) {
  const Index n = g.vertex_count();
  if (h.vertex_count() != n || static_cast<Index>(relabel.size()) != n)
    throw std::invalid_argument("is_same_labeled_graph: dimension mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Index v : relabel) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("is_same_labeled_graph: relabel is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (g.adjacency()(i, j) != h.adjacency()(relabel[static_cast<std::size_t>(i)],
                                               relabel[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

std::string to_dot(const LoopGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Index v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.label(v) << "\";\n";
  for (Index i = 0; i < g.vertex_count(); ++i)
    for (Index j = i; j < g.vertex_count(); ++j)
      if (g.edge(i, j)) os << "  \"" << g.label(i) << "\" -- \"" << g.label(j) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zdg
