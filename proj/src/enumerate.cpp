#include "estrada/enumerate.hpp"

#include <string>

#include "estrada/errors.hpp"

namespace estrada {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw CapacityError("labeled enumeration is limited to n <= " +
                        std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t labeled_graph_count(std::size_t n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  check_order(n);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

void enumerate_graphs(std::size_t n, const GraphFilter& filter,
                      const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (!filter || filter(g)) visit(g);
  }
}

std::vector<Graph> all_graphs(std::size_t n, const GraphFilter& filter) {
  std::vector<Graph> out;
  enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

bool is_bipartite_connected(const Graph& g) {
  return is_connected(g) && two_coloring(g).has_value();
}

}  // namespace estrada
