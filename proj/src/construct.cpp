#include "zdg/construct.hpp"

#include <sstream>
#include <stdexcept>

namespace zdg {

LoopGraph zero_divisor_graph(const FiniteRing& ring) {
  const std::vector<Index> zds = zero_divisors(ring);
  const Index n = static_cast<Index>(zds.size());
  AdjacencyMatrix adj(n, n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(ring.label(zds[static_cast<std::size_t>(i)]));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const int v = ring.mul_is_zero(zds[static_cast<std::size_t>(i)],
                                     zds[static_cast<std::size_t>(j)])
                        ? 1
                        : 0;
      adj(i, j) = v;
      adj(j, i) = v;
    }
  return LoopGraph(std::move(labels), std::move(adj));
}

LoopGraph unit_graph(const FiniteRing& ring) {
  const std::vector<Index> us = units(ring);
  const Index n = static_cast<Index>(us.size());
  std::vector<std::string> labels;
  for (Index u : us) labels.push_back(ring.label(u));
  return LoopGraph(std::move(labels), AdjacencyMatrix::Zero(n, n));
}

LoopGraph zero_graph(const FiniteRing& ring) {
  return LoopGraph({ring.label(ring.zero())}, AdjacencyMatrix::Zero(1, 1));
}

LoopGraph looped_zero_graph(const FiniteRing& ring) {
  AdjacencyMatrix adj(1, 1);
  adj(0, 0) = 1;
  return LoopGraph({ring.label(ring.zero())}, std::move(adj));
}

LoopGraph extended_graph(const FiniteRing& ring) {
  const Index n = ring.size();
  AdjacencyMatrix adj(n, n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(ring.label(i));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const int v = ring.mul_is_zero(i, j) ? 1 : 0;
      adj(i, j) = v;
      adj(j, i) = v;
    }
  return LoopGraph(std::move(labels), std::move(adj));
}

DecoratedGraph decorated_graph(const FiniteRing& ring) {
  return {zero_divisor_graph(ring), static_cast<Index>(units(ring).size())};
}

LoopGraph extend_decorated(const DecoratedGraph& d) {
  if (d.unit_count < 1) throw std::invalid_argument("decorated graph needs at least one unit");
  LoopGraph z({"0"}, AdjacencyMatrix::Zero(1, 1));
  AdjacencyMatrix looped(1, 1);
  looped(0, 0) = 1;
  LoopGraph zl({"0"}, std::move(looped));
  std::vector<std::string> unit_labels;
  for (Index k = 0; k < d.unit_count; ++k) unit_labels.push_back("u" + std::to_string(k + 1));
  LoopGraph un(std::move(unit_labels),
               AdjacencyMatrix::Zero(d.unit_count, d.unit_count));
  // (Gamma nabla Z) . (U nabla Z_L), coalesced at the two zero vertices.
  return point_identification(complete_product(d.graph, z), complete_product(un, zl),
                              d.graph.vertex_count(), d.unit_count);
}

DecoratedGraph gamma_product(const DecoratedGraph& a, const DecoratedGraph& b) {
  const LoopGraph ea = extend_decorated(a);
  const LoopGraph eb = extend_decorated(b);
  const LoopGraph prod = direct_product(ea, eb);

  const Index na = a.graph.vertex_count(), nb = b.graph.vertex_count();
  const Index tb = eb.vertex_count();
  std::vector<Index> to_delete;
  to_delete.push_back(na * tb + nb);  // the (0,0) pair
  for (Index i = 0; i < a.unit_count; ++i)
    for (Index j = 0; j < b.unit_count; ++j)
      to_delete.push_back((na + 1 + i) * tb + (nb + 1 + j));  // unit pairs
  return {delete_vertices(prod, to_delete), a.unit_count * b.unit_count};
}

std::vector<Index> extended_layout_positions(const FiniteRing& ring) {
  std::vector<Index> pos(static_cast<std::size_t>(ring.size()), -1);
  const std::vector<Index> zds = zero_divisors(ring);
  Index next = 0;
  for (Index z : zds) pos[static_cast<std::size_t>(z)] = next++;
  pos[static_cast<std::size_t>(ring.zero())] = next++;
  for (Index u : units(ring)) pos[static_cast<std::size_t>(u)] = next++;
  return pos;
}

std::vector<AnnClass> zero_divisor_classes(const FiniteRing& ring) {
  std::vector<AnnClass> out;
  for (auto& c : ann_classes(ring)) {
    const Index rep = c.representative;
    if (rep == ring.zero() || ring.is_unit(rep)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

CompressedGraph compressed_graph(const FiniteRing& ring) {
  CompressedGraph c;
  c.classes = zero_divisor_classes(ring);
  const Index n = static_cast<Index>(c.classes.size());
  c.adj.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    c.labels.push_back("[" + ring.label(c.classes[static_cast<std::size_t>(i)].representative) +
                       "]");
    for (Index j = i; j < n; ++j) {
      const int v = ring.mul_is_zero(c.classes[static_cast<std::size_t>(i)].representative,
                                     c.classes[static_cast<std::size_t>(j)].representative)
                        ? 1
                        : 0;
      c.adj(i, j) = v;
      c.adj(j, i) = v;
    }
  }
  return c;
}

IntMatrix weighted_quotient_matrix(const CompressedGraph& c) {
  const Index n = c.vertex_count();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (c.adj(i, j))
        m(i, j) = static_cast<long>(c.classes[static_cast<std::size_t>(j)].members.size());
  return m;
}

IntMatrix extended_compressed_matrix(const FiniteRing& ring) {
  // Class order [1], zero-divisor classes..., [0]; adjacency decided on
  // representatives exactly as for the compressed graph.
  std::vector<AnnClass> all = ann_classes(ring);
  std::vector<const AnnClass*> ordered;
  const AnnClass* zero_class = nullptr;
  const AnnClass* one_class = nullptr;
  std::vector<const AnnClass*> mids;
  for (const auto& c : all) {
    if (c.representative == ring.zero())
      zero_class = &c;
    else if (ring.is_unit(c.representative))
      one_class = &c;
    else
      mids.push_back(&c);
  }
  ordered.push_back(one_class);
  for (const auto* c : mids) ordered.push_back(c);
  ordered.push_back(zero_class);

  const Index n = static_cast<Index>(ordered.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (ring.mul_is_zero(ordered[static_cast<std::size_t>(i)]->representative,
                           ordered[static_cast<std::size_t>(j)]->representative))
        m(i, j) = static_cast<long>(ordered[static_cast<std::size_t>(j)]->members.size());
  return m;
}

std::string to_dot(const CompressedGraph& c, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Index v = 0; v < c.vertex_count(); ++v)
    os << "  \"" << c.labels[static_cast<std::size_t>(v)] << "\" [class_size="
       << c.classes[static_cast<std::size_t>(v)].members.size() << "];\n";
  for (Index i = 0; i < c.vertex_count(); ++i)
    for (Index j = i; j < c.vertex_count(); ++j)
      if (c.adj(i, j))
        os << "  \"" << c.labels[static_cast<std::size_t>(i)] << "\" -- \""
           << c.labels[static_cast<std::size_t>(j)] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zdg
