#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccdim/detail/bitops.hpp"
#include "ccdim/errors.hpp"

namespace ccdim {

using Mask = std::uint64_t;

// Vertex sets are single machine words, so graphs are capped at 64 vertices.
// Every algorithm in this library is exponential in the vertex count anyway;
// larger inputs are rejected loudly at construction.
inline constexpr int kMaxVertices = 64;

class Graph;

// A set of vertices of some host graph, stored as a bit mask over the host's
// vertex order. The mask itself is the canonical representation; label output
// is derived from ascending vertex index at the interfaces.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Mask bits) : bits_(bits) {}

  static VertexSet of(const Graph& g, const std::vector<std::string>& labels);

  Mask mask() const { return bits_; }
  int size() const { return detail::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> v) & 1; }
  bool subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> indices() const { return detail::to_indices(bits_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Mask bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Finite simple graph over ordered, distinct string labels. The vertex order
// is fixed at construction and defines the canonical iteration order used by
// every enumeration in this library.
class Graph {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  Mask adjacency_mask(int v) const { return adj_[v]; }
  std::span<const Mask> adjacency() const { return adj_; }
  Mask full_mask() const { return detail::full_mask(size()); }
  VertexSet vertices() const { return VertexSet(full_mask()); }

  // Edges as label pairs with the endpoint indices in host order, i < j.
  std::vector<std::pair<std::string, std::string>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph build_graph(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges);
  friend Graph induced_subgraph(const Graph& g, const VertexSet& s);

 private:
  Graph() = default;

  std::vector<std::string> labels_;
  std::vector<Mask> adj_;
};

Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);

// Subgraph induced on s; the inherited vertex order is the host order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Components ordered by smallest member index; each set is nonempty and the
// sets partition the vertices.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

VertexSet neighborhood(const Graph& g, std::string_view v);
VertexSet neighborhood(const Graph& g, int v);

// True when s induces a complete subgraph; the empty set and singletons count.
bool is_clique(const Graph& g, const VertexSet& s);

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s);         // host order
std::vector<std::string> sorted_labels_of(const Graph& g, const VertexSet& s);  // label order

}  // namespace ccdim
