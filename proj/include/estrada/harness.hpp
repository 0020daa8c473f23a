#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/bounds.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/invariants.hpp"
#include "estrada/lemmas.hpp"
#include "estrada/sketch.hpp"

namespace estrada {

inline constexpr double kDefaultTolerance = 1e-8;

struct CorpusDescriptor {
  std::string source;
  std::string filters;
  std::optional<std::uint64_t> seed;
  double tol = kDefaultTolerance;
  /// Bounds whose equality family the corpus is meant to exercise.
  std::vector<BoundId> designated;
};

/// Everything computed for one graph.
struct GraphRow {
  std::string graph6;
  InvariantSet invariants;
  double ee = 0.0;
  std::array<BoundResult, 14> bounds{};
  std::vector<LemmaCheck> lemmas;
};

/// A failed check: a bound id, a bound id suffixed "(strict)" when a strict
/// bound is met with equality, or a lemma name.
struct Violation {
  std::string graph6;
  std::string check;
  double gap = 0.0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct BoundTally {
  std::uint64_t applicable = 0;
  std::uint64_t held = 0;         // gap >= -tol
  std::uint64_t strict_held = 0;  // gap > tol
  std::uint64_t equality = 0;     // |gap| < tol
  std::uint64_t violations = 0;
  std::uint64_t exploratory = 0;         // B-formula on non-bipartite graphs
  std::uint64_t exploratory_failed = 0;  // ... with gap < -tol
  QuantileSketch gaps;

  friend bool operator==(const BoundTally&, const BoundTally&) = default;
};

/// Row-wise tallies; a commutative monoid under merge().
struct Summary {
  std::uint64_t graphs = 0;
  std::array<BoundTally, 14> bounds{};
  std::map<std::string, std::uint64_t> lemma_violations;
  std::uint64_t violations = 0;

  void add(const GraphRow& row, double tol);
  void merge(const Summary& other);
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerificationReport {
  CorpusDescriptor corpus;
  /// Empty when rows were only streamed.
  std::vector<GraphRow> rows;
  Summary summary;
  std::vector<Violation> violations;
};

/// Receives rows in deterministic order as a campaign runs.
class ReportSink {
 public:
  virtual ~ReportSink() = default;
  virtual void begin(const CorpusDescriptor& corpus) = 0;
  virtual void row(const GraphRow& row) = 0;
  virtual void end(const Summary& summary, std::span<const Violation> violations) = 0;
};

struct RunOptions {
  double tol = kDefaultTolerance;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  ReportSink* sink = nullptr;
  /// Keep rows in the returned report; disable for large streamed runs.
  bool keep_rows = true;
};

/// Full evaluation of one graph. Requires n >= 1; eigensolver failures are
/// rethrown as NumericError naming the graph6 string.
GraphRow verify_graph(const Graph& g, double tol);

std::vector<Violation> violations_of(const GraphRow& row, double tol);

enum class ExhaustiveMode { all, connected, bipartite_connected };

std::string_view to_string(ExhaustiveMode mode) noexcept;
std::optional<ExhaustiveMode> parse_exhaustive_mode(std::string_view text) noexcept;

/// Every labeled graph of the mode's class for n = 1..n_max, ordered by n
/// then adjacency mask. Throws CapacityError for n_max > 7.
VerificationReport exhaustive_verify(std::size_t n_max, ExhaustiveMode mode,
                                     const RunOptions& options = {});

/// Verifies an arbitrary list of graphs, e.g. read from a file.
VerificationReport verify_documents(std::span<const GraphDocument> docs,
                                    const RunOptions& options = {});

struct ParamRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;  // inclusive, step 1
};
using ParamGrid = std::vector<ParamRange>;

/// Parses "n=3..12" or "prob=0.5".
ParamRange parse_param_range(std::string_view text);

/// Bounds whose equality family contains members of `family`.
std::vector<BoundId> designated_bounds(std::string_view family);

/// One row per point of the cartesian product of the ranges (first range
/// outermost). Parameter errors propagate.
VerificationReport family_sweep(std::string_view family, const ParamGrid& grid,
                                const RunOptions& options = {});

struct RandomModel {
  enum class Kind { er, bipartite };
  Kind kind = Kind::er;
  /// er: order drawn uniformly from [n_min, n_max].
  std::size_t n_min = 20;
  std::size_t n_max = 20;
  /// bipartite: part sizes.
  std::size_t left = 8;
  std::size_t right = 8;
  double p = 0.3;
};

/// Deterministic given `seed`: trial i uses mix_seed(seed, i).
VerificationReport random_campaign(const RandomModel& model, std::size_t trials,
                                   std::uint64_t seed, const RunOptions& options = {});

/// Labeled graphs with n <= n_max in each bound's applicability class whose
/// gap is below tol, as graph6 strings in enumeration order.
std::map<BoundId, std::vector<std::string>> find_equality_cases(std::span<const BoundId> ids,
                                                                std::size_t n_max, double tol,
                                                                unsigned jobs = 0);
std::vector<std::string> find_equality_cases(BoundId id, std::size_t n_max, double tol,
                                             unsigned jobs = 0);

}  // namespace estrada
