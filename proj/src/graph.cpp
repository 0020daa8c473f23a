#include "estrada/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "estrada/errors.hpp"

namespace estrada {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

void Graph::link(Vertex u, Vertex v) noexcept {
  if (adjacent(u, v)) return;
  bits_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits_[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++m_;
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ConstructionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside 0.." +
                              (n == 0 ? std::string("(none)") : std::to_string(n - 1)));
    }
    if (u == v) {
      throw ConstructionError("loop at vertex " + std::to_string(u));
    }
    g.link(u, v);
  }
  return g;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (Word w = r[k]; w != 0; w &= w - 1) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const std::size_t shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::build(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw ParameterError("permutation length " + std::to_string(perm.size()) +
                         " does not match order " + std::to_string(g.order()));
  }
  std::vector<bool> seen(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || seen[p]) throw ParameterError("not a permutation");
    seen[p] = true;
  }
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::build(g.order(), edges);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

DegreeExtremes degree_extremes(const Graph& g) {
  if (g.order() == 0) throw DegenerateGraphError("degree extremes of the null graph");
  const auto d = degree_sequence(g);
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return {*hi, *lo};
}

std::size_t Diameter::value() const {
  if (!value_) throw DomainError("diameter is infinite");
  return *value_;
}

std::string Diameter::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Diameter diameter(const Graph& g) {
  if (g.order() == 0) throw DegenerateGraphError("diameter of the null graph");
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (!d) return Diameter::infinite();
      best = std::max(best, *d);
    }
  }
  return Diameter(best);
}

std::size_t triangle_count(const Graph& g) {
  // Each triangle is seen once per edge, i.e. three times.
  std::size_t closed = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto ru = g.row(u);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto rv = g.row(v);
      for (std::size_t k = 0; k < ru.size(); ++k) {
        closed += static_cast<std::size_t>(std::popcount(ru[k] & rv[k]));
      }
    }
  }
  return closed / 3;
}

std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (label[v] == kUnset) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  // Frontier expansion on packed rows.
  const std::size_t words = g.words_per_row();
  std::vector<Graph::Word> seen(words, 0), frontier(words, 0);
  seen[0] = frontier[0] = 1;
  bool grew = true;
  while (grew) {
    std::vector<Graph::Word> next(words, 0);
    for (std::size_t k = 0; k < words; ++k) {
      for (Graph::Word w = frontier[k]; w != 0; w &= w - 1) {
        const Vertex u = k * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        const auto r = g.row(u);
        for (std::size_t j = 0; j < words; ++j) next[j] |= r[j];
      }
    }
    grew = false;
    for (std::size_t k = 0; k < words; ++k) {
      frontier[k] = next[k] & ~seen[k];
      if (frontier[k] != 0) grew = true;
      seen[k] |= next[k];
    }
  }
  std::size_t reached = 0;
  for (auto w : seen) reached += static_cast<std::size_t>(std::popcount(w));
  return reached == g.order();
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    (colour[v] == 0 ? parts.left : parts.right).push_back(v);
  }
  return parts;
}

}  // namespace estrada
