// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "estrada/bounds.hpp"
#include "estrada/cli.hpp"
#include "estrada/enumerate.hpp"
#include "estrada/generators.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/harness.hpp"
#include "estrada/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace estrada;

constexpr double kEeTol = 1e-9;
constexpr double kMomentTol = 1e-8;
constexpr double kOracleTol = 1e-9;
constexpr double kBoundTol = 1e-8;
constexpr double kSeriesTruncation = 1e-13;
constexpr double kFrozenP4Gap = 0.394280041338349;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) notes_ += (notes_.empty() ? "" : "; ") + what;
    if (!ok) pass_ = false;
  }
  Outcome done(std::string summary) const {
    return {pass_, pass_ ? std::move(summary) : notes_ + (failures_ > 5 ? " ..." : "")};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string notes_;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

template <class F>
void for_each_labeled(std::size_t n_max, F f) {
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) f(n, mask);
}

double ee(const Graph& g) { return estrada_index(spectrum(g)); }

std::size_t brute_triangles(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::size_t t = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) t += adj[a][b] && adj[b][c] && adj[a][c];
  return t;
}

Outcome closed_forms() {
  Check c;
  c.expect(std::abs(ee(complete_graph(2)) - 2 * std::cosh(1.0)) < kEeTol, "K2");
  c.expect(std::abs(ee(cycle_graph(4)) - (2 * std::cosh(2.0) + 2)) < kEeTol, "C4");
  for (std::size_t n = 1; n <= 10; ++n)
    c.expect(std::abs(ee(empty_graph(n)) - static_cast<double>(n)) < kEeTol, "empty n=" + std::to_string(n));
  for (std::size_t n = 2; n <= 6; ++n) {
    const double k = static_cast<double>(n);
    c.expect(std::abs(ee(complete_graph(n)) - (std::exp(k - 1) + (k - 1) * std::exp(-1.0))) < kEeTol,
             "K" + std::to_string(n));
  }
  return c.done("EE(K2)=" + num(ee(complete_graph(2))) + " EE(C4)=" + num(ee(cycle_graph(4))));
}

Outcome moments() {
  Check c;
  std::size_t graphs = 0;
  auto check = [&](const Graph& g, std::size_t triangles, const std::string& tag) {
    const auto s = spectrum(g);
    c.expect(spectral_moment(s, 0) == static_cast<double>(g.order()), tag + " M0");
    c.expect(std::abs(spectral_moment(s, 1)) < kMomentTol, tag + " M1");
    c.expect(std::abs(spectral_moment(s, 2) - 2.0 * static_cast<double>(g.size())) < kMomentTol, tag + " M2");
    c.expect(std::abs(spectral_moment(s, 3) - 6.0 * static_cast<double>(triangles)) < kMomentTol, tag + " M3");
    ++graphs;
  };
  for_each_labeled(6, [&](std::size_t n, std::uint64_t mask) {
    check(graph_from_mask(n, mask), brute_triangles(n, oracle::mask_edges(n, mask)), "n=" + std::to_string(n));
  });
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto seed = mix_seed(2024, i);
    const auto n = 1 + static_cast<std::size_t>(seed % 30);
    const double p = 0.05 + 0.9 * static_cast<double>(mix_seed(seed, 1) % 1000) / 1000.0;
    const auto g = erdos_renyi_graph(n, p, seed);
    check(g, brute_triangles(n, g.edges()), write_graph6(g));
  }
  return c.done(std::to_string(graphs) + " graphs");
}

Outcome series_oracle() {
  Check c;
  double worst = 0.0;
  for_each_labeled(6, [&](std::size_t n, std::uint64_t mask) {
    const auto g = graph_from_mask(n, mask);
    const double d = std::abs(ee(g) - estrada_index_series(g, kSeriesTruncation));
    worst = std::max(worst, d);
    c.expect(d < kOracleTol, write_graph6(g));
  });
  return c.done("max |eigen - series| = " + num(worst));
}

Outcome dominance() {
  Check c;
  RunOptions opts;
  opts.keep_rows = false;
  opts.tol = kBoundTol;
  const auto general = exhaustive_verify(7, ExhaustiveMode::connected, opts);
  const auto bipartite = exhaustive_verify(7, ExhaustiveMode::bipartite_connected, opts);
  std::uint64_t checked = 0;
  for (auto id : kAllBounds) {
    const auto& report = is_bipartite_bound(id) ? bipartite : general;
    const auto& t = report.summary.bounds[index_of(id)];
    checked += t.applicable;
    c.expect(t.applicable > 0, std::string(to_string(id)) + " never applicable");
    c.expect(t.violations == 0, std::string(to_string(id)) + " violations=" + std::to_string(t.violations));
  }
  return c.done(std::to_string(general.summary.graphs) + " connected + " +
                std::to_string(bipartite.summary.graphs) + " bipartite connected graphs, " +
                std::to_string(checked) + " bound evaluations");
}

Outcome equality_classes() {
  Check c;
  const std::vector<BoundId> ids{BoundId::B1, BoundId::B2, BoundId::B4, BoundId::B5, BoundId::B6, BoundId::G5};
  const auto found = find_equality_cases(ids, 7, kBoundTol);
  std::map<BoundId, std::set<std::string>> expected;
  for_each_labeled(7, [&](std::size_t n, std::uint64_t mask) {
    const auto g = graph_from_mask(n, mask);
    const auto edges = oracle::mask_edges(n, mask);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
      adj[u][v] = adj[v][u] = true;
      ++deg[u], ++deg[v];
    }
    const auto isolated = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 0));
    // Complete bipartite core: split the non-isolated vertices by adjacency to
    // one of them and require every cross pair and no inner pair.
    std::optional<std::pair<std::size_t, std::size_t>> kpq;
    if (!edges.empty()) {
      const auto root = static_cast<std::size_t>(std::find_if(deg.begin(), deg.end(), [](auto d) { return d > 0; }) - deg.begin());
      std::vector<int> side(n, -1);
      std::size_t left = 0, right = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        side[v] = adj[root][v] ? 1 : 0;
        (side[v] ? right : left) += 1;
      }
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        for (std::size_t v = u + 1; v < n && ok; ++v)
          if (side[u] >= 0 && side[v] >= 0) ok = adj[u][v] == (side[u] != side[v]);
      if (ok) kpq = std::pair{std::min(left, right), std::max(left, right)};
    }
    const bool conn = oracle::connected(n, edges);
    const auto g6 = write_graph6(g);
    if (kpq && conn) expected[BoundId::B1].insert(g6);
    if (kpq && kpq->first == 1 && n >= 2) expected[BoundId::B2].insert(g6);
    if (kpq && kpq->first == 1 && conn) expected[BoundId::B4].insert(g6);
    if (kpq && kpq->first == kpq->second && isolated == 1) expected[BoundId::B5].insert(g6);
    if (n == 4 && conn && edges.size() == 4 && std::count(deg.begin(), deg.end(), 2) == 4) expected[BoundId::B6].insert(g6);
    if (edges.empty() && n >= 2) expected[BoundId::G5].insert(g6);
  });
  std::string counts;
  for (auto id : ids) {
    const auto& list = found.at(id);
    const std::set<std::string> got(list.begin(), list.end());
    c.expect(got.size() == list.size(), std::string(to_string(id)) + " duplicates");
    c.expect(got == expected[id], std::string(to_string(id)) + " found " + std::to_string(got.size()) +
                                      " expected " + std::to_string(expected[id].size()));
    for (const auto& g6 : list) c.expect(equality_class_check(id, parse_graph6(g6)), std::string(to_string(id)) + " " + g6);
    counts += std::string(counts.empty() ? "" : " ") + std::string(to_string(id)) + "=" + std::to_string(list.size());
  }
  c.expect(found.at(BoundId::B6).size() == 3, "B6 count");
  c.expect(found.at(BoundId::G5).size() == 6, "G5 count");
  c.expect(found.at(BoundId::B5).size() == 3 + 15 + 70, "B5 count");
  c.expect(found.at(BoundId::B4).size() == 1 + 3 + 4 + 5 + 6 + 7, "B4 count");
  return c.done(counts);
}

Outcome path_b7() {
  Check c;
  const auto report = family_sweep("path", {parse_param_range("n=2..10")}, {});
  std::vector<std::size_t> equal;
  for (const auto& row : report.rows) {
    const auto& r = row.bounds[index_of(BoundId::B7)];
    c.expect(r.applicable, "B7 inapplicable on P" + std::to_string(row.invariants.n));
    if (r.equality_detected) equal.push_back(row.invariants.n);
  }
  c.expect(equal == std::vector<std::size_t>{2, 3}, "equality set differs");
  const auto p4 = path_graph(4);
  const double bound = bound_value(BoundId::B7, invariant_set(p4));
  const double series_gap = estrada_index_series(p4, kSeriesTruncation) - bound;
  const double closed_gap =
      oracle::exp_sum(oracle::path_spectrum(4)) - (2 * std::cosh(2 * std::cos(std::numbers::pi / 5)) + 2);
  const double eigen_gap = *report.rows[2].bounds[index_of(BoundId::B7)].gap;
  c.expect(std::abs(series_gap - kFrozenP4Gap) < kOracleTol, "series gap " + num(series_gap));
  c.expect(std::abs(closed_gap - kFrozenP4Gap) < kOracleTol, "closed-form gap " + num(closed_gap));
  c.expect(std::abs(eigen_gap - kFrozenP4Gap) < kOracleTol, "eigen gap " + num(eigen_gap));
  return c.done("equality at n in {2,3}; P4 gap " + num(series_gap) + " (series oracle)");
}

Outcome lemma_chain() {
  // Streams the connected n <= 7 corpus through a checking sink.
  class LemmaSink : public ReportSink {
   public:
    explicit LemmaSink(Check& c) : c_(c) {}
    void begin(const CorpusDescriptor&) override {}
    void end(const Summary&, std::span<const Violation>) override {}
    void row(const GraphRow& row) override {
      ++rows;
      const auto& cls = row.invariants.classification;
      for (const auto& l : row.lemmas) {
        if (!l.applicable) continue;
        if (l.id == LemmaId::randic_upper) continue;
        ++checks;
        c_.expect(l.slack >= -kBoundTol, std::string(to_string(l.id)) + " " + row.graph6);
        if (l.id == LemmaId::unicyclic_two) {
          c_.expect(l.equality == cls.cycle, "unicyclic equality " + row.graph6);
          cycles += l.equality;
        }
        if (l.id == LemmaId::path_radius) {
          c_.expect(l.equality == cls.path, "path equality " + row.graph6);
          paths += l.equality;
        }
      }
    }
    std::uint64_t rows = 0, checks = 0, cycles = 0, paths = 0;

   private:
    Check& c_;
  };
  Check c;
  LemmaSink sink(c);
  RunOptions opts;
  opts.keep_rows = false;
  opts.sink = &sink;
  opts.tol = kBoundTol;
  exhaustive_verify(7, ExhaustiveMode::connected, opts);
  // Labeled cycles: (n-1)!/2 for n = 3..7; labeled paths: n!/2 for n >= 2, plus K_1.
  std::uint64_t cycles = 0, paths = 1, f = 1;
  for (std::uint64_t n = 2; n <= 7; ++n) {
    f *= n;
    paths += f / 2;
    if (n >= 3) cycles += f / n / 2;
  }
  c.expect(sink.cycles == cycles, "cycle equalities " + std::to_string(sink.cycles));
  c.expect(sink.paths == paths, "path equalities " + std::to_string(sink.paths));
  return c.done(std::to_string(sink.checks) + " lemma checks on " + std::to_string(sink.rows) +
                " graphs; equality on " + std::to_string(sink.cycles) + " cycles, " +
                std::to_string(sink.paths) + " paths");
}

Outcome remark_family() {
  Check c;
  for (auto [r, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 4}, {4, 5}, {2, 8}}) {
    const auto v = remark_family_check(r, n, kBoundTol);
    c.expect(v.holds && std::abs(v.spectral_radius - static_cast<double>(r)) < kBoundTol,
             "(" + std::to_string(r) + "," + std::to_string(n) + ") radius " + num(v.spectral_radius));
  }
  return c.done("5 pairs");
}

Outcome graph6_round_trip() {
  Check c;
  std::size_t graphs = 0;
  for_each_labeled(6, [&](std::size_t n, std::uint64_t mask) {
    const auto g = graph_from_mask(n, mask);
    const auto s = write_graph6(g);
    c.expect(parse_graph6(s) == g && s == oracle::graph6(n, oracle::mask_edges(n, mask)), s);
    ++graphs;
  });
  c.expect(write_graph6(Graph{}) == "?" && parse_graph6("?") == Graph{}, "null graph");
  const std::size_t orders[] = {63, 64, 100};
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto n = orders[i % 3];
    const auto g = erdos_renyi_graph(n, 0.1 + 0.008 * static_cast<double>(i), mix_seed(99, i));
    const auto s = write_graph6(g);
    c.expect(s[0] == '~' && parse_graph6(s) == g && write_graph6(parse_graph6(s)) == s, "n=" + std::to_string(n));
    ++graphs;
  }
  return c.done(std::to_string(graphs) + " graphs");
}

Outcome determinism() {
  Check c;
  const std::vector<std::string> args{"random", "--trials", "1000", "--seed", "42", "--format", "json"};
  std::ostringstream a, b, err;
  const int ca = cli::run(args, a, err);
  const int cb = cli::run(args, b, err);
  c.expect(ca == cli::kExitOk && cb == cli::kExitOk, "exit codes " + std::to_string(ca) + "," + std::to_string(cb));
  c.expect(!a.str().empty() && a.str() == b.str(), "reports differ");
  return c.done(std::to_string(a.str().size()) + " identical bytes");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form Estrada values", 1.0, closed_forms},
      {2, "moment identities", 60.0, moments},
      {3, "series oracle equivalence", 120.0, series_oracle},
      {4, "bound dominance n<=7", 1800.0, dominance},
      {5, "equality characterizations n<=7", 1800.0, equality_classes},
      {6, "B7 path equality cases", 1.0, path_b7},
      {7, "spectral radius lemma chain", 1800.0, lemma_chain},
      {8, "regular plus isolated vertex family", 1.0, remark_family},
      {9, "graph6 round trip", 60.0, graph6_round_trip},
      {10, "random campaign determinism", 600.0, determinism},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > crit.limit_seconds) {
      o.pass = false;
      o.detail += " (over " + num(crit.limit_seconds) + " s limit)";
    }
    failed += !o.pass;
    char line[128];
    std::snprintf(line, sizeof line, "%s  %2d  %-38s %9.2f s  ", o.pass ? "PASS" : "FAIL", crit.number, crit.name, secs);
    std::cout << line << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : "ALL PASSED ") << criteria.size()
            << (failed ? "" : " criteria") << std::endl;
  return failed ? 1 : 0;
}
