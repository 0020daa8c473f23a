#pragma once

#include "estrada/graph.hpp"

namespace estrada {

/// General Randić index: sum over edges ij of (d(i) d(j))^alpha.
/// Zero for a graph without edges.
double general_randic(const Graph& g, double alpha);

/// Randić index, alpha = -1/2.
inline double randic_index(const Graph& g) { return general_randic(g, -0.5); }

/// Structural invariants consumed by the bound catalog, computed once.
struct InvariantSet {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  Diameter diam = Diameter::infinite();
  std::size_t triangles = 0;
  double randic = 0.0;
  double randic_half = 0.0;
  Classification classification;
};

/// Throws DegenerateGraphError for the null graph.
InvariantSet invariant_set(const Graph& g);

}  // namespace estrada
