#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace estrada {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as packed 64-bit rows so that neighbourhood
/// intersections (triangles, BFS frontiers) are word operations.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// The graph with no vertices.
  Graph() = default;

  /// Deduplicates and symmetrizes `edges`. Throws ConstructionError on an
  /// endpoint >= n or a loop.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::size_t degree(Vertex v) const noexcept;
  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::size_t n);
  void link(Vertex u, Vertex v) noexcept;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<std::size_t> degree_sequence(const Graph& g);

struct DegreeExtremes {
  std::size_t max = 0;
  std::size_t min = 0;
};

/// Throws DegenerateGraphError for the graph with no vertices.
DegreeExtremes degree_extremes(const Graph& g);

/// Graph diameter, where a disconnected graph has infinite diameter.
class Diameter {
 public:
  static constexpr Diameter infinite() noexcept { return Diameter(); }
  constexpr explicit Diameter(std::size_t d) noexcept : value_(d) {}

  constexpr bool finite() const noexcept { return value_.has_value(); }
  /// Throws DomainError when infinite.
  std::size_t value() const;
  std::string to_string() const;

  friend bool operator==(const Diameter&, const Diameter&) = default;

 private:
  constexpr Diameter() noexcept = default;
  std::optional<std::size_t> value_;
};

/// BFS distances from `source`; unreachable vertices map to nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

/// Requires n >= 1.
Diameter diameter(const Graph& g);

std::size_t triangle_count(const Graph& g);

/// Component label per vertex, labels assigned in order of first vertex.
std::vector<std::size_t> component_labels(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// BFS 2-colouring; nullopt when an odd cycle exists. Each component's
/// lowest vertex lands on the left, so isolated vertices are all left.
std::optional<Bipartition> two_coloring(const Graph& g);

/// Part sizes of a complete bipartite graph, normalized so p <= q.
struct BipartiteShape {
  std::size_t p = 0;
  std::size_t q = 0;
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

struct Classification {
  std::size_t components = 0;
  bool connected = false;
  bool bipartite = false;
  std::optional<Bipartition> bipartition;
  bool unicyclic = false;
  std::optional<std::size_t> regular_degree;
  bool empty = false;
  bool complete = false;
  std::size_t isolated_vertices = 0;

  /// Set when the whole graph is K_{p,q} with p, q >= 1.
  std::optional<BipartiteShape> complete_bipartite;
  /// Set when the non-isolated vertices induce K_{p,q}; implies m >= 1.
  std::optional<BipartiteShape> complete_bipartite_core;

  bool star = false;
  bool path = false;
  bool cycle = false;
  /// Every component is a clique.
  bool union_of_completes = false;
  /// Common clique order when every component is a clique of the same order.
  std::optional<std::size_t> uniform_clique_order;
};

/// Structural classification; no spectral information is used.
Classification classify(const Graph& g);

}  // namespace estrada
