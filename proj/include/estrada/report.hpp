#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "estrada/harness.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

/// JSON documents carry {"version": "1"}.
inline constexpr const char* kReportSchemaVersion = "1";

/// Shortest round-trip decimal form; stable across runs.
std::string format_real(double x);

/// Column names of the CSV report, in order.
std::vector<std::string> csv_columns();

/// One CSV line per graph: graph6, n, m, delta_max, delta_min, diam,
/// triangles, randic, randic_half, ee, then <id>_applicable, <id>_value,
/// <id>_gap for G1..G7, B1..B7. Inapplicable bounds leave value and gap
/// empty; an infinite diameter is written as "inf".
class CsvSink : public ReportSink {
 public:
  explicit CsvSink(std::ostream& out) : out_(out) {}
  void begin(const CorpusDescriptor& corpus) override;
  void row(const GraphRow& row) override;
  void end(const Summary& summary, std::span<const Violation> violations) override;

 private:
  std::ostream& out_;
};

/// Streams a single JSON object: version, corpus, rows, summary, violations.
class JsonSink : public ReportSink {
 public:
  explicit JsonSink(std::ostream& out) : out_(out) {}
  void begin(const CorpusDescriptor& corpus) override;
  void row(const GraphRow& row) override;
  void end(const Summary& summary, std::span<const Violation> violations) override;

 private:
  std::ostream& out_;
  bool first_row_ = true;
};

/// Human-oriented fixed-width table; '=' marks equality, '!' a violation.
class TableSink : public ReportSink {
 public:
  explicit TableSink(std::ostream& out) : out_(out) {}
  void begin(const CorpusDescriptor& corpus) override;
  void row(const GraphRow& row) override;
  void end(const Summary& summary, std::span<const Violation> violations) override;

 private:
  std::ostream& out_;
  double tol_ = kDefaultTolerance;
};

void write_csv(const VerificationReport& report, std::ostream& out);
void write_json(const VerificationReport& report, std::ostream& out);

/// Output of the `compute` subcommand for one graph.
struct GraphDescription {
  std::string graph6;
  InvariantSet invariants;
  Spectrum spectrum;
  double ee = 0.0;
  double energy = 0.0;
};

GraphDescription describe_graph(const Graph& g);

void write_descriptions_json(const std::vector<GraphDescription>& graphs, std::ostream& out);
void write_descriptions_csv(const std::vector<GraphDescription>& graphs, std::ostream& out);
void write_descriptions_table(const std::vector<GraphDescription>& graphs, std::ostream& out);

}  // namespace estrada
