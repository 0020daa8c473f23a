#include "estrada/generators.hpp"

#include <cmath>
#include <random>

#include "estrada/errors.hpp"

namespace estrada {

namespace {

// Uniform [0,1) from the top 53 bits; std::uniform_real_distribution is not
// reproducible across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::build(n, std::span<const Edge>{}); }

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = p; v < p + q; ++v) edges.emplace_back(u, v);
  return Graph::build(p + q, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw ParameterError("star needs n >= 1");
  return complete_bipartite_graph(1, n - 1);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

Graph union_of_complete_graphs(std::size_t copies, std::size_t order) {
  Graph g;
  for (std::size_t i = 0; i < copies; ++i) g = disjoint_union(g, complete_graph(order));
  return g;
}

Graph circulant_regular_graph(std::size_t n, std::size_t r) {
  if (r >= n || (n * r) % 2 != 0) {
    throw ParameterError("no " + std::to_string(r) + "-regular graph on " + std::to_string(n) +
                         " vertices");
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= r / 2; ++k) edges.emplace_back(v, (v + k) % n);
    if (r % 2 == 1) edges.emplace_back(v, (v + n / 2) % n);
  }
  return Graph::build(n, edges);
}

Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit_uniform(rng) < p) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = left; v < left + right; ++v)
      if (unit_uniform(rng) < p) edges.emplace_back(u, v);
  return Graph::build(left + right, edges);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = {
      "complete", "empty",         "complete_bipartite", "star",     "path",
      "cycle",    "disjoint_union", "regular_circulant", "er_random", "bipartite_random"};
  return ids;
}

namespace {

double require(const FamilyParams& params, std::string_view family, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ParameterError(std::string(family) + " requires parameter '" + std::string(key) + "'");
  }
  return it->second;
}

std::size_t require_count(const FamilyParams& params, std::string_view family,
                          std::string_view key) {
  const double x = require(params, family, key);
  if (!(x >= 0.0) || std::floor(x) != x || x > 1e9) {
    throw ParameterError(std::string(family) + " parameter '" + std::string(key) +
                         "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(x);
}

std::uint64_t require_seed(const FamilyParams& params, std::string_view family) {
  const double x = require(params, family, "seed");
  if (!(x >= 0.0) || std::floor(x) != x || x >= 0x1.0p53) {
    throw ParameterError(std::string(family) + " seed must be an integer in [0, 2^53)");
  }
  return static_cast<std::uint64_t>(x);
}

Graph generate_core(std::string_view family, const FamilyParams& params) {
  if (family == "complete") return complete_graph(require_count(params, family, "n"));
  if (family == "empty") return empty_graph(require_count(params, family, "n"));
  if (family == "complete_bipartite") {
    const auto p = require_count(params, family, "p");
    const auto q = require_count(params, family, "q");
    if (p < 1 || q < 1) throw ParameterError("complete_bipartite needs p, q >= 1");
    return complete_bipartite_graph(p, q);
  }
  if (family == "star") return star_graph(require_count(params, family, "n"));
  if (family == "path") {
    const auto n = require_count(params, family, "n");
    if (n < 1) throw ParameterError("path needs n >= 1");
    return path_graph(n);
  }
  if (family == "cycle") return cycle_graph(require_count(params, family, "n"));
  if (family == "disjoint_union") {
    const auto copies = require_count(params, family, "copies");
    const auto order = require_count(params, family, "order");
    if (copies < 1 || order < 1) throw ParameterError("disjoint_union needs copies, order >= 1");
    return union_of_complete_graphs(copies, order);
  }
  if (family == "regular_circulant") {
    return circulant_regular_graph(require_count(params, family, "n"),
                                   require_count(params, family, "r"));
  }
  if (family == "er_random") {
    return erdos_renyi_graph(require_count(params, family, "n"), require(params, family, "p"),
                             require_seed(params, family));
  }
  if (family == "bipartite_random") {
    return random_bipartite_graph(require_count(params, family, "p"),
                                  require_count(params, family, "q"),
                                  require(params, family, "prob"), require_seed(params, family));
  }
  throw ParameterError("unknown family '" + std::string(family) + "'");
}

}  // namespace

Graph generate_family(std::string_view family, const FamilyParams& params) {
  Graph g = generate_core(family, params);
  if (params.contains("isolated")) {
    g = disjoint_union(g, empty_graph(require_count(params, family, "isolated")));
  }
  return g;
}

}  // namespace estrada
