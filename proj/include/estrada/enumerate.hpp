#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

/// Largest order supported by labeled enumeration (2^21 graphs).
inline constexpr std::size_t kMaxEnumerationOrder = 7;

using GraphFilter = std::function<bool(const Graph&)>;

/// 2^(n(n-1)/2). Throws CapacityError for n > kMaxEnumerationOrder.
std::uint64_t labeled_graph_count(std::size_t n);

/// Bit k of `mask` selects the k-th vertex pair in graph6 order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Visits every labeled graph on n vertices passing `filter`, in ascending
/// mask order. An empty filter accepts everything.
void enumerate_graphs(std::size_t n, const GraphFilter& filter,
                      const std::function<void(const Graph&)>& visit);

std::vector<Graph> all_graphs(std::size_t n, const GraphFilter& filter = {});

bool is_bipartite_connected(const Graph& g);

}  // namespace estrada
