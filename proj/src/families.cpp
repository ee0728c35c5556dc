#include "ccdim/families.hpp"

#include <random>
#include <string>

namespace ccdim {

namespace {

std::string v_label(int i) { return "v" + std::to_string(i); }

void need_params(std::string_view family, const std::vector<long long>& params, std::size_t k) {
  if (params.size() != k) {
    fail(ErrorKind::BadParams, std::string(family) + " takes " + std::to_string(k) +
                                   " parameter(s), got " + std::to_string(params.size()));
  }
}

long long checked_count(std::string_view family, long long n, long long min_value) {
  if (n < min_value) {
    fail(ErrorKind::BadParams, std::string(family) + " needs at least " +
                                   std::to_string(min_value) + " vertices, got " +
                                   std::to_string(n));
  }
  if (n > kMaxVertices) {
    fail(ErrorKind::GraphTooLarge, std::string(family) + " with " + std::to_string(n) +
                                       " vertices exceeds the " + std::to_string(kMaxVertices) +
                                       "-vertex cap");
  }
  return n;
}

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(v_label(i));
  return labels;
}

}  // namespace

Graph gen_family(std::string_view family, const std::vector<long long>& params) {
  using Edge = std::pair<std::string, std::string>;

  if (family == "clique") {
    need_params(family, params, 1);
    const int n = static_cast<int>(checked_count(family, params[0], 1));
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(v_label(i), v_label(j));
    return build_graph(numbered_labels(n), edges);
  }

  if (family == "cycle") {
    need_params(family, params, 1);
    const int n = static_cast<int>(checked_count(family, params[0], 3));
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(v_label(i), v_label(i + 1));
    edges.emplace_back(v_label(1), v_label(n));
    return build_graph(numbered_labels(n), edges);
  }

  if (family == "path") {
    need_params(family, params, 1);
    const int n = static_cast<int>(checked_count(family, params[0], 1));
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(v_label(i), v_label(i + 1));
    return build_graph(numbered_labels(n), edges);
  }

  if (family == "star") {
    need_params(family, params, 1);
    if (params[0] < 1) fail(ErrorKind::BadParams, "star needs at least one leaf");
    const int k = static_cast<int>(checked_count(family, params[0] + 1, 2)) - 1;
    std::vector<std::string> labels{"c"};
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
      labels.push_back("l" + std::to_string(i));
      edges.emplace_back("c", labels.back());
    }
    return build_graph(labels, edges);
  }

  if (family == "complete_bipartite") {
    need_params(family, params, 2);
    const int m = static_cast<int>(checked_count(family, params[0], 1));
    const int n = static_cast<int>(checked_count(family, params[1], 1));
    checked_count(family, params[0] + params[1], 2);
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
    return build_graph(labels, edges);
  }

  if (family == "stacked_cycles") {
    need_params(family, params, 2);
    const long long k = params[0];
    const long long layers = params[1];
    if (k < 3) fail(ErrorKind::BadParams, "stacked_cycles needs cycles of length >= 3");
    if (layers < 1) fail(ErrorKind::BadParams, "stacked_cycles needs at least one layer");
    checked_count(family, k * layers, 3);
    auto name = [](long long layer, long long pos) {
      return "v" + std::to_string(layer) + "_" + std::to_string(pos);
    };
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (long long i = 1; i <= layers; ++i)
      for (long long j = 1; j <= k; ++j) labels.push_back(name(i, j));
    for (long long i = 1; i <= layers; ++i) {
      for (long long j = 1; j < k; ++j) edges.emplace_back(name(i, j), name(i, j + 1));
      edges.emplace_back(name(i, 1), name(i, k));
    }
    for (long long i = 1; i < layers; ++i)
      for (long long j = 1; j <= k; ++j) edges.emplace_back(name(i, j), name(i + 1, j));
    return build_graph(labels, edges);
  }

  if (family == "random") {
    need_params(family, params, 3);
    const int n = static_cast<int>(checked_count(family, params[0], 1));
    const long long p = params[1];
    if (p < 0 || p > 100) {
      fail(ErrorKind::BadParams, "random needs an integer percentage in [0, 100]");
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(params[2]));
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (static_cast<long long>(rng() % 100) < p) edges.emplace_back(v_label(i), v_label(j));
      }
    }
    return build_graph(numbered_labels(n), edges);
  }

  fail(ErrorKind::UnknownFamily, "unknown family: " + std::string(family));
}

}  // namespace ccdim
