#include "estrada/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>

#include "estrada/enumerate.hpp"
#include "estrada/errors.hpp"
#include "estrada/generators.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

namespace {

constexpr std::uint64_t kBatchPerWorker = 2048;

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, count) into `jobs` contiguous slices and runs
/// body(worker, lo, hi) on each; the first worker exception is rethrown.
template <class Body>
void parallel_slices(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
  auto slice = [&](unsigned w) {
    return std::pair{count * w / jobs, count * (w + 1) / jobs};
  };
  if (jobs == 1) {
    body(0U, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          const auto [lo, hi] = slice(w);
          body(w, lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Runs `produce(i)` for i in [0, count), streaming rows in index order.
template <class Produce>
VerificationReport run_campaign(CorpusDescriptor corpus, std::uint64_t count, Produce&& produce,
                                const RunOptions& options) {
  VerificationReport report;
  corpus.tol = options.tol;
  report.corpus = std::move(corpus);
  if (options.sink) options.sink->begin(report.corpus);

  const unsigned jobs = resolve_jobs(options.jobs);
  const std::uint64_t batch = kBatchPerWorker * jobs;
  for (std::uint64_t start = 0; start < count; start += batch) {
    const std::uint64_t size = std::min(batch, count - start);
    std::vector<std::optional<GraphRow>> rows(size);
    std::vector<Summary> partial(jobs);
    parallel_slices(size, jobs, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        rows[i] = produce(start + i);
        if (rows[i]) partial[w].add(*rows[i], options.tol);
      }
    });
    for (const auto& s : partial) report.summary.merge(s);
    for (auto& row : rows) {
      if (!row) continue;
      for (auto& v : violations_of(*row, options.tol)) report.violations.push_back(std::move(v));
      if (options.sink) options.sink->row(*row);
      if (options.keep_rows) report.rows.push_back(std::move(*row));
    }
  }
  if (options.sink) options.sink->end(report.summary, report.violations);
  return report;
}

/// Maps a flat index over n = 1..n_max onto (n, mask).
class MaskSpace {
 public:
  explicit MaskSpace(std::size_t n_max) {
    labeled_graph_count(n_max);  // throws beyond the enumeration limit
    std::uint64_t acc = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      offsets_.push_back(acc);
      acc += labeled_graph_count(n);
    }
    total_ = acc;
  }
  std::uint64_t total() const { return total_; }
  std::pair<std::size_t, std::uint64_t> at(std::uint64_t index) const {
    std::size_t k = offsets_.size();
    while (offsets_[k - 1] > index) --k;
    return {k, index - offsets_[k - 1]};
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
};

bool passes(ExhaustiveMode mode, const Graph& g) {
  switch (mode) {
    case ExhaustiveMode::all: return true;
    case ExhaustiveMode::connected: return is_connected(g);
    case ExhaustiveMode::bipartite_connected: return is_bipartite_connected(g);
  }
  return false;
}

std::string format_number(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

void Summary::add(const GraphRow& row, double tol) {
  ++graphs;
  for (const auto& r : row.bounds) {
    auto& t = bounds[index_of(r.id)];
    if (r.applicable) {
      const double gap = *r.gap;
      ++t.applicable;
      t.gaps.add(gap);
      if (gap >= -tol) ++t.held;
      if (gap > tol) ++t.strict_held;
      if (std::abs(gap) < tol) ++t.equality;
      if (gap < -tol || (bound_spec(r.id).strict && gap <= tol)) ++t.violations;
    } else if (r.exploratory_gap) {
      ++t.exploratory;
      if (*r.exploratory_gap < -tol) ++t.exploratory_failed;
    }
  }
  for (const auto& l : row.lemmas) {
    if (l.applicable && l.slack < -tol) ++lemma_violations[std::string(to_string(l.id))];
  }
  violations += violations_of(row, tol).size();
}

void Summary::merge(const Summary& other) {
  graphs += other.graphs;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    auto& t = bounds[i];
    const auto& o = other.bounds[i];
    t.applicable += o.applicable;
    t.held += o.held;
    t.strict_held += o.strict_held;
    t.equality += o.equality;
    t.violations += o.violations;
    t.exploratory += o.exploratory;
    t.exploratory_failed += o.exploratory_failed;
    t.gaps.merge(o.gaps);
  }
  for (const auto& [name, count] : other.lemma_violations) lemma_violations[name] += count;
  violations += other.violations;
}

GraphRow verify_graph(const Graph& g, double tol) {
  GraphRow row;
  row.graph6 = write_graph6(g);
  row.invariants = invariant_set(g);
  Spectrum s;
  try {
    s = spectrum(g);
  } catch (const NumericError& e) {
    throw NumericError(row.graph6 + ": " + e.what());
  }
  row.ee = estrada_index(s);
  for (BoundId id : kAllBounds) row.bounds[index_of(id)] = evaluate_bound(id, row.invariants, row.ee, tol);
  row.lemmas = lemma_checks(row.invariants, s, tol);
  return row;
}

std::vector<Violation> violations_of(const GraphRow& row, double tol) {
  std::vector<Violation> out;
  for (const auto& r : row.bounds) {
    if (!r.applicable) continue;
    if (*r.gap < -tol) {
      out.push_back({row.graph6, std::string(to_string(r.id)), *r.gap});
    } else if (bound_spec(r.id).strict && *r.gap <= tol) {
      out.push_back({row.graph6, std::string(to_string(r.id)) + "(strict)", *r.gap});
    }
  }
  for (const auto& l : row.lemmas) {
    if (l.applicable && l.slack < -tol) {
      out.push_back({row.graph6, std::string(to_string(l.id)), l.slack});
    }
  }
  return out;
}

std::string_view to_string(ExhaustiveMode mode) noexcept {
  switch (mode) {
    case ExhaustiveMode::all: return "all";
    case ExhaustiveMode::connected: return "connected";
    case ExhaustiveMode::bipartite_connected: return "bipartite-connected";
  }
  return "?";
}

std::optional<ExhaustiveMode> parse_exhaustive_mode(std::string_view text) noexcept {
  for (auto mode : {ExhaustiveMode::all, ExhaustiveMode::connected,
                    ExhaustiveMode::bipartite_connected}) {
    if (to_string(mode) == text) return mode;
  }
  return std::nullopt;
}

VerificationReport exhaustive_verify(std::size_t n_max, ExhaustiveMode mode,
                                     const RunOptions& options) {
  const MaskSpace space(n_max);
  CorpusDescriptor corpus;
  corpus.source = "exhaustive:n<=" + std::to_string(n_max);
  corpus.filters = std::string(to_string(mode));
  return run_campaign(
      std::move(corpus), space.total(),
      [&](std::uint64_t i) -> std::optional<GraphRow> {
        const auto [n, mask] = space.at(i);
        const Graph g = graph_from_mask(n, mask);
        if (!passes(mode, g)) return std::nullopt;
        return verify_graph(g, options.tol);
      },
      options);
}

VerificationReport verify_documents(std::span<const GraphDocument> docs,
                                    const RunOptions& options) {
  CorpusDescriptor corpus;
  corpus.source = docs.empty() ? std::string("(none)") : docs.front().source_name;
  for (const auto& d : docs) {
    if (d.graph.order() == 0) {
      throw DegenerateGraphError(d.source_name + " #" + std::to_string(d.index) +
                                 ": graph has no vertices");
    }
  }
  return run_campaign(
      std::move(corpus), docs.size(),
      [&](std::uint64_t i) -> std::optional<GraphRow> {
        return verify_graph(docs[i].graph, options.tol);
      },
      options);
}

ParamRange parse_param_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ParameterError("parameter '" + std::string(text) + "' is not of the form name=value");
  }
  ParamRange r;
  r.name = std::string(text.substr(0, eq));
  const auto value = text.substr(eq + 1);
  auto number = [&](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParameterError("bad number '" + std::string(s) + "' in '" + std::string(text) + "'");
    }
    return x;
  };
  if (const auto dots = value.find(".."); dots != std::string_view::npos) {
    r.lo = number(value.substr(0, dots));
    r.hi = number(value.substr(dots + 2));
    if (r.hi < r.lo) throw ParameterError("empty range in '" + std::string(text) + "'");
  } else {
    r.lo = r.hi = number(value);
  }
  return r;
}

std::vector<BoundId> designated_bounds(std::string_view family) {
  if (family == "complete_bipartite") return {BoundId::B1, BoundId::B3};
  if (family == "star") return {BoundId::B2, BoundId::B4};
  if (family == "path") return {BoundId::B7};
  if (family == "cycle") return {BoundId::B6};
  if (family == "empty") return {BoundId::G5};
  return {};
}

VerificationReport family_sweep(std::string_view family, const ParamGrid& grid,
                                const RunOptions& options) {
  std::vector<FamilyParams> points{FamilyParams{}};
  std::string filters;
  for (const auto& range : grid) {
    std::vector<FamilyParams> next;
    for (const auto& base : points) {
      for (double x = range.lo; x <= range.hi; x += 1.0) {
        auto p = base;
        p[range.name] = x;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
    if (!filters.empty()) filters += ',';
    filters += range.name + '=' + format_number(range.lo);
    if (range.hi != range.lo) filters += ".." + format_number(range.hi);
  }
  CorpusDescriptor corpus;
  corpus.source = "family:" + std::string(family);
  corpus.filters = filters;
  corpus.designated = designated_bounds(family);
  if (const auto it = std::find_if(grid.begin(), grid.end(),
                                   [](const ParamRange& r) { return r.name == "seed"; });
      it != grid.end()) {
    corpus.seed = static_cast<std::uint64_t>(it->lo);
  }
  // Generate up front so parameter errors surface before any output.
  std::vector<Graph> graphs;
  graphs.reserve(points.size());
  for (const auto& p : points) {
    graphs.push_back(generate_family(family, p));
    if (graphs.back().order() == 0) throw ParameterError("family member has no vertices");
  }
  return run_campaign(
      std::move(corpus), graphs.size(),
      [&](std::uint64_t i) -> std::optional<GraphRow> {
        return verify_graph(graphs[i], options.tol);
      },
      options);
}

VerificationReport random_campaign(const RandomModel& model, std::size_t trials,
                                   std::uint64_t seed, const RunOptions& options) {
  if (trials < 1) throw ParameterError("random campaign needs at least one trial");
  if (!(model.p >= 0.0 && model.p <= 1.0)) throw ParameterError("edge probability outside [0, 1]");
  CorpusDescriptor corpus;
  corpus.seed = seed;
  if (model.kind == RandomModel::Kind::er) {
    if (model.n_min < 1 || model.n_max < model.n_min) {
      throw ParameterError("er model needs 1 <= n_min <= n_max");
    }
    corpus.source = "random:er";
    corpus.filters = "n=" + std::to_string(model.n_min) + ".." + std::to_string(model.n_max) +
                     ",p=" + format_number(model.p) + ",trials=" + std::to_string(trials);
  } else {
    if (model.left + model.right < 1) throw ParameterError("bipartite model needs vertices");
    corpus.source = "random:bipartite";
    corpus.filters = "left=" + std::to_string(model.left) +
                     ",right=" + std::to_string(model.right) + ",p=" + format_number(model.p) +
                     ",trials=" + std::to_string(trials);
  }
  return run_campaign(
      std::move(corpus), trials,
      [&](std::uint64_t i) -> std::optional<GraphRow> {
        const std::uint64_t trial_seed = mix_seed(seed, i);
        if (model.kind == RandomModel::Kind::bipartite) {
          return verify_graph(random_bipartite_graph(model.left, model.right, model.p, trial_seed),
                              options.tol);
        }
        const std::size_t span = model.n_max - model.n_min + 1;
        const std::size_t n = model.n_min + static_cast<std::size_t>(mix_seed(trial_seed, 0) % span);
        return verify_graph(erdos_renyi_graph(n, model.p, trial_seed), options.tol);
      },
      options);
}

std::map<BoundId, std::vector<std::string>> find_equality_cases(std::span<const BoundId> requested,
                                                                std::size_t n_max, double tol,
                                                                unsigned jobs) {
  const MaskSpace space(n_max);
  // Labeled masks give distinct graph6 strings; only repeated ids could duplicate.
  std::vector<BoundId> ids(requested.begin(), requested.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const bool needs_general =
      std::any_of(ids.begin(), ids.end(), [](BoundId id) { return !is_bipartite_bound(id); });
  jobs = resolve_jobs(jobs);
  using Found = std::map<BoundId, std::vector<std::string>>;
  std::vector<Found> partial(jobs);
  parallel_slices(space.total(), jobs, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto [n, mask] = space.at(i);
      const Graph g = graph_from_mask(n, mask);
      if (!needs_general && !two_coloring(g)) continue;
      const auto inv = invariant_set(g);
      std::optional<double> ee;
      for (BoundId id : ids) {
        if (!is_applicable(id, inv)) continue;
        if (!ee) ee = estrada_index(spectrum(g));
        if (std::abs(*ee - bound_value(id, inv)) < tol) partial[w][id].push_back(write_graph6(g));
      }
    }
  });
  Found out;
  for (BoundId id : ids) out[id];
  for (auto& part : partial) {
    for (auto& [id, list] : part) {
      auto& dst = out[id];
      dst.insert(dst.end(), std::make_move_iterator(list.begin()),
                 std::make_move_iterator(list.end()));
    }
  }
  return out;
}

std::vector<std::string> find_equality_cases(BoundId id, std::size_t n_max, double tol,
                                             unsigned jobs) {
  const BoundId ids[] = {id};
  return std::move(find_equality_cases(ids, n_max, tol, jobs)[id]);
}

}  // namespace estrada
