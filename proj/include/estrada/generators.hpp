#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// K_{p,q} with parts {0..p-1} and {p..p+q-1}.
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
/// K_{1,n-1} centred at vertex 0; star(1) is K_1. Throws for n < 1.
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Throws for n < 3.
Graph cycle_graph(std::size_t n);
/// `copies` disjoint copies of K_order.
Graph union_of_complete_graphs(std::size_t copies, std::size_t order);

/// r-regular circulant on n vertices: offsets 1..r/2, plus n/2 when r is odd.
/// Requires r < n and n*r even.
Graph circulant_regular_graph(std::size_t n, std::size_t r);

/// G(n, p). Deterministic for a given seed on every platform.
Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed);
/// Random subgraph of K_{left,right} keeping each cross pair with probability p.
Graph random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed);

/// Named numeric parameters, e.g. {"n": 5} or {"p": 2, "q": 3}.
using FamilyParams = std::map<std::string, double, std::less<>>;

/// Family identifiers accepted by generate_family.
const std::vector<std::string>& family_ids();

/// Builds the named family member. Every family accepts an optional
/// `isolated` count that appends that many K_1 components.
/// Throws ParameterError for unknown families or invalid parameters.
Graph generate_family(std::string_view family, const FamilyParams& params);

/// SplitMix64 step, used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace estrada
