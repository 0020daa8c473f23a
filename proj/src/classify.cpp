#include <algorithm>

#include "estrada/graph.hpp"

namespace estrada {

namespace {

BipartiteShape normalized(std::size_t a, std::size_t b) {
  return a <= b ? BipartiteShape{a, b} : BipartiteShape{b, a};
}

}  // namespace

Classification classify(const Graph& g) {
  Classification c;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const auto degrees = degree_sequence(g);
  const auto labels = component_labels(g);

  c.components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  c.connected = c.components == 1;
  c.empty = m == 0;
  c.complete = n > 0 && m == n * (n - 1) / 2;
  c.isolated_vertices = static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 0U));
  c.unicyclic = c.connected && m == n;

  if (n > 0 && std::all_of(degrees.begin(), degrees.end(),
                           [&](std::size_t d) { return d == degrees.front(); })) {
    c.regular_degree = degrees.front();
  }

  c.bipartition = two_coloring(g);
  c.bipartite = c.bipartition.has_value();
  if (c.bipartite) {
    const auto& parts = *c.bipartition;
    if (c.connected && !parts.left.empty() && !parts.right.empty() &&
        m == parts.left.size() * parts.right.size()) {
      c.complete_bipartite = normalized(parts.left.size(), parts.right.size());
    }
    // Isolated vertices are coloured left, so removing them only shrinks `left`.
    const std::size_t left_core = parts.left.size() - c.isolated_vertices;
    if (m > 0 && c.components - c.isolated_vertices == 1 &&
        m == left_core * parts.right.size()) {
      c.complete_bipartite_core = normalized(left_core, parts.right.size());
    }
  }

  c.star = c.complete_bipartite && c.complete_bipartite->p == 1;
  c.path = c.connected && m + 1 == n &&
           std::all_of(degrees.begin(), degrees.end(), [](std::size_t d) { return d <= 2; });
  c.cycle = c.connected && n >= 3 && c.regular_degree == std::size_t{2};

  std::vector<std::size_t> component_size(c.components, 0);
  for (auto l : labels) ++component_size[l];
  c.union_of_completes = n > 0;
  for (Vertex v = 0; v < n; ++v) {
    if (degrees[v] + 1 != component_size[labels[v]]) {
      c.union_of_completes = false;
      break;
    }
  }
  if (c.union_of_completes &&
      std::all_of(component_size.begin(), component_size.end(),
                  [&](std::size_t s) { return s == component_size.front(); })) {
    c.uniform_clique_order = component_size.front();
  }
  return c;
}

}  // namespace estrada
