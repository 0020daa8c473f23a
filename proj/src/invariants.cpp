#include "estrada/invariants.hpp"

#include <cmath>

#include "estrada/errors.hpp"

namespace estrada {

double general_randic(const Graph& g, double alpha) {
  const auto degrees = degree_sequence(g);
  double sum = 0.0;
  for (const auto& [u, v] : g.edges()) {
    sum += std::pow(static_cast<double>(degrees[u] * degrees[v]), alpha);
  }
  return sum;
}

InvariantSet invariant_set(const Graph& g) {
  if (g.order() == 0) throw DegenerateGraphError("invariants of the null graph");
  InvariantSet inv;
  inv.n = g.order();
  inv.m = g.size();
  const auto extremes = degree_extremes(g);
  inv.max_degree = extremes.max;
  inv.min_degree = extremes.min;
  inv.diam = diameter(g);
  inv.triangles = triangle_count(g);
  inv.randic = general_randic(g, -0.5);
  inv.randic_half = general_randic(g, 0.5);
  inv.classification = classify(g);
  return inv;
}

}  // namespace estrada
