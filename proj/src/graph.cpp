#include "ccdim/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "mask_engine.hpp"

namespace ccdim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedDotFeature: return "UnsupportedDotFeature";
  }
  return "Error";
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  detail::for_each_bit(s.mask(), [&](int v) {
    if (!first) os << ',';
    first = false;
    os << v;
  });
  return os << '}';
}

VertexSet VertexSet::of(const Graph& g, const std::vector<std::string>& labels) {
  Mask bits = 0;
  for (const auto& label : labels) {
    const auto v = g.index_of(label);
    if (!v) fail(ErrorKind::UnknownVertex, "unknown vertex: " + label);
    bits |= detail::bit(*v);
  }
  return VertexSet(bits);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const Mask row : adj_) twice += detail::popcount(row);
  return twice / 2;
}

std::optional<int> Graph::index_of(std::string_view label) const {
  for (int v = 0; v < size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < size(); ++i) {
    detail::for_each_bit(adj_[i] >> i >> 1, [&](int off) {
      out.emplace_back(labels_[i], labels_[i + 1 + off]);
    });
  }
  return out;
}

Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  if (labels.empty()) fail(ErrorKind::EmptyGraph, "a graph needs at least one vertex");
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    fail(ErrorKind::GraphTooLarge,
         "at most " + std::to_string(kMaxVertices) + " vertices are supported, got " +
             std::to_string(labels.size()));
  }

  std::unordered_map<std::string_view, int> index;
  index.reserve(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].empty()) fail(ErrorKind::BadParams, "vertex labels must be nonempty");
    if (!index.emplace(labels[v], static_cast<int>(v)).second) {
      fail(ErrorKind::DuplicateLabel, "duplicate label: " + labels[v]);
    }
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    if (ia == index.end()) fail(ErrorKind::UnknownEndpoint, "unknown endpoint: " + a);
    const auto ib = index.find(b);
    if (ib == index.end()) fail(ErrorKind::UnknownEndpoint, "unknown endpoint: " + b);
    if (ia->second == ib->second) fail(ErrorKind::SelfLoop, "self-loop at " + a);
    g.adj_[ia->second] |= detail::bit(ib->second);
    g.adj_[ib->second] |= detail::bit(ia->second);
  }
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) fail(ErrorKind::EmptySelection, "cannot induce on the empty vertex set");
  if (s.mask() & ~g.full_mask()) {
    fail(ErrorKind::UnknownVertex, "selection contains vertices outside the host graph");
  }
  Graph out;
  out.labels_.reserve(static_cast<std::size_t>(s.size()));
  out.adj_.reserve(static_cast<std::size_t>(s.size()));
  detail::for_each_bit(s.mask(), [&](int v) {
    out.labels_.push_back(g.label(v));
    out.adj_.push_back(detail::compress(s.mask(), g.adjacency_mask(v)));
  });
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  detail::MaskList comps;
  detail::components_within(g.adjacency(), g.full_mask(), comps);
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(comps.size()));
  for (const Mask c : comps) out.emplace_back(c);
  return out;
}

bool is_connected(const Graph& g) {
  return detail::connected_within(g.adjacency(), g.full_mask());
}

VertexSet neighborhood(const Graph& g, std::string_view v) {
  const auto i = g.index_of(v);
  if (!i) fail(ErrorKind::UnknownVertex, "unknown vertex: " + std::string(v));
  return neighborhood(g, *i);
}

VertexSet neighborhood(const Graph& g, int v) { return VertexSet(g.adjacency_mask(v)); }

bool is_clique(const Graph& g, const VertexSet& s) {
  return detail::clique_within(g.adjacency(), s.mask());
}

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  detail::for_each_bit(s.mask(), [&](int v) { out.push_back(g.label(v)); });
  return out;
}

std::vector<std::string> sorted_labels_of(const Graph& g, const VertexSet& s) {
  auto out = labels_of(g, s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ccdim
