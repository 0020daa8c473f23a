#include "estrada/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace estrada {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json optional_number(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

ordered_json diameter_json(const Diameter& d) {
  return d.finite() ? ordered_json(d.value()) : ordered_json("inf");
}

ordered_json classification_json(const Classification& c) {
  ordered_json j;
  j["connected"] = c.connected;
  j["components"] = c.components;
  j["bipartite"] = c.bipartite;
  j["unicyclic"] = c.unicyclic;
  j["regular"] = c.regular_degree ? ordered_json(*c.regular_degree) : ordered_json(nullptr);
  j["empty"] = c.empty;
  j["complete"] = c.complete;
  j["isolated"] = c.isolated_vertices;
  j["complete_bipartite"] = c.complete_bipartite
                                ? ordered_json::array({c.complete_bipartite->p, c.complete_bipartite->q})
                                : ordered_json(nullptr);
  j["star"] = c.star;
  j["path"] = c.path;
  j["cycle"] = c.cycle;
  j["union_of_completes"] = c.union_of_completes;
  return j;
}

void put_invariants(ordered_json& j, const std::string& graph6, const InvariantSet& inv) {
  j["graph6"] = graph6;
  j["n"] = inv.n;
  j["m"] = inv.m;
  j["delta_max"] = inv.max_degree;
  j["delta_min"] = inv.min_degree;
  j["diam"] = diameter_json(inv.diam);
  j["triangles"] = inv.triangles;
  j["randic"] = inv.randic;
  j["randic_half"] = inv.randic_half;
}

ordered_json row_json(const GraphRow& row) {
  ordered_json j;
  put_invariants(j, row.graph6, row.invariants);
  j["ee"] = row.ee;
  ordered_json bounds = ordered_json::object();
  for (const auto& r : row.bounds) {
    ordered_json b;
    b["applicable"] = r.applicable;
    b["value"] = optional_number(r.bound_value);
    b["gap"] = optional_number(r.gap);
    b["equality"] = r.equality_detected;
    b["equality_class"] = r.equality_class_match;
    if (r.exploratory_gap) b["exploratory_gap"] = *r.exploratory_gap;
    bounds[std::string(to_string(r.id))] = std::move(b);
  }
  j["bounds"] = std::move(bounds);
  ordered_json lemmas = ordered_json::object();
  for (const auto& l : row.lemmas) {
    lemmas[std::string(to_string(l.id))] = {
        {"applicable", l.applicable},
        {"slack", l.applicable ? ordered_json(l.slack) : ordered_json(nullptr)},
        {"equality", l.equality}};
  }
  j["lemmas"] = std::move(lemmas);
  return j;
}

ordered_json corpus_json(const CorpusDescriptor& c) {
  ordered_json j;
  j["source"] = c.source;
  j["filters"] = c.filters;
  j["seed"] = c.seed ? ordered_json(*c.seed) : ordered_json(nullptr);
  j["tol"] = c.tol;
  ordered_json designated = ordered_json::array();
  for (BoundId id : c.designated) designated.push_back(std::string(to_string(id)));
  j["designated"] = std::move(designated);
  return j;
}

ordered_json summary_json(const Summary& s) {
  ordered_json j;
  j["graphs"] = s.graphs;
  j["violations"] = s.violations;
  j["lemma_violations"] = ordered_json::object();
  for (const auto& [name, count] : s.lemma_violations) j["lemma_violations"][name] = count;
  ordered_json bounds = ordered_json::object();
  for (BoundId id : kAllBounds) {
    const auto& t = s.bounds[index_of(id)];
    ordered_json b;
    b["applicable"] = t.applicable;
    b["held"] = t.held;
    b["strict_held"] = t.strict_held;
    b["equality"] = t.equality;
    b["violations"] = t.violations;
    b["exploratory"] = t.exploratory;
    b["exploratory_failed"] = t.exploratory_failed;
    if (t.gaps.count() > 0) {
      b["gap_quantiles"] = {{"min", t.gaps.quantile(0.0)},
                            {"p01", t.gaps.quantile(0.01)},
                            {"p50", t.gaps.quantile(0.5)},
                            {"p99", t.gaps.quantile(0.99)},
                            {"max", t.gaps.quantile(1.0)}};
    } else {
      b["gap_quantiles"] = nullptr;
    }
    bounds[std::string(to_string(id))] = std::move(b);
  }
  j["bounds"] = std::move(bounds);
  return j;
}

ordered_json violations_json(std::span<const Violation> violations) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : violations) {
    arr.push_back({{"graph6", v.graph6}, {"check", v.check}, {"gap", v.gap}});
  }
  return arr;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::vector<std::string> csv_columns() {
  std::vector<std::string> cols = {"graph6",    "n",         "m",      "delta_max",
                                   "delta_min", "diam",      "triangles", "randic",
                                   "randic_half", "ee"};
  for (BoundId id : kAllBounds) {
    const std::string name(to_string(id));
    cols.push_back(name + "_applicable");
    cols.push_back(name + "_value");
    cols.push_back(name + "_gap");
  }
  return cols;
}

void CsvSink::begin(const CorpusDescriptor&) {
  const auto cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
  out_ << '\n';
}

void CsvSink::row(const GraphRow& row) {
  const auto& inv = row.invariants;
  // graph6 never contains ',' or '"' (bytes 63..126 exclude both).
  out_ << row.graph6 << ',' << inv.n << ',' << inv.m << ',' << inv.max_degree << ','
       << inv.min_degree << ',' << inv.diam.to_string() << ',' << inv.triangles << ','
       << format_real(inv.randic) << ',' << format_real(inv.randic_half) << ','
       << format_real(row.ee);
  for (const auto& r : row.bounds) {
    out_ << ',' << (r.applicable ? 1 : 0) << ',';
    if (r.applicable) out_ << format_real(*r.bound_value);
    out_ << ',';
    if (r.applicable) out_ << format_real(*r.gap);
  }
  out_ << '\n';
}

void CsvSink::end(const Summary&, std::span<const Violation>) { out_.flush(); }

void JsonSink::begin(const CorpusDescriptor& corpus) {
  first_row_ = true;
  out_ << "{\"version\":\"" << kReportSchemaVersion << "\",\"corpus\":" << corpus_json(corpus).dump()
       << ",\"rows\":[";
}

void JsonSink::row(const GraphRow& row) {
  out_ << (first_row_ ? "\n" : ",\n") << row_json(row).dump();
  first_row_ = false;
}

void JsonSink::end(const Summary& summary, std::span<const Violation> violations) {
  out_ << "\n],\"summary\":" << summary_json(summary).dump()
       << ",\"violations\":" << violations_json(violations).dump() << "}\n";
  out_.flush();
}

void TableSink::begin(const CorpusDescriptor& corpus) {
  tol_ = corpus.tol;
  out_ << "# " << corpus.source;
  if (!corpus.filters.empty()) out_ << "  [" << corpus.filters << "]";
  if (corpus.seed) out_ << "  seed=" << *corpus.seed;
  if (!corpus.designated.empty()) {
    out_ << "  designated:";
    for (BoundId id : corpus.designated) out_ << ' ' << to_string(id);
  }
  out_ << '\n' << std::left << std::setw(14) << "graph6" << std::right << std::setw(4) << "n"
       << std::setw(5) << "m" << std::setw(16) << "EE";
  for (BoundId id : kAllBounds) out_ << std::setw(4) << to_string(id);
  out_ << '\n';
}

void TableSink::row(const GraphRow& row) {
  out_ << std::left << std::setw(14) << row.graph6 << std::right << std::setw(4)
       << row.invariants.n << std::setw(5) << row.invariants.m << std::setw(16)
       << std::setprecision(10) << row.ee;
  for (const auto& r : row.bounds) {
    char mark = '-';
    if (r.applicable) {
      if (*r.gap < -tol_) {
        mark = '!';
      } else if (r.equality_detected) {
        mark = '=';
      } else {
        mark = '+';
      }
    }
    out_ << std::setw(4) << mark;
  }
  out_ << '\n';
}

void TableSink::end(const Summary& summary, std::span<const Violation> violations) {
  out_ << "# graphs=" << summary.graphs << " violations=" << summary.violations << '\n';
  out_ << "# bound  applicable  held  equality  violations  min_gap\n";
  for (BoundId id : kAllBounds) {
    const auto& t = summary.bounds[index_of(id)];
    out_ << "# " << std::left << std::setw(7) << to_string(id) << std::right << std::setw(10)
         << t.applicable << std::setw(6) << t.held << std::setw(10) << t.equality << std::setw(12)
         << t.violations << "  ";
    if (t.gaps.count() > 0) {
      out_ << std::setprecision(6) << t.gaps.min();
    } else {
      out_ << '-';
    }
    out_ << '\n';
  }
  for (const auto& v : violations) {
    out_ << "# VIOLATION " << v.graph6 << ' ' << v.check << ' ' << format_real(v.gap) << '\n';
  }
  out_.flush();
}

void write_csv(const VerificationReport& report, std::ostream& out) {
  CsvSink sink(out);
  sink.begin(report.corpus);
  for (const auto& r : report.rows) sink.row(r);
  sink.end(report.summary, report.violations);
}

void write_json(const VerificationReport& report, std::ostream& out) {
  JsonSink sink(out);
  sink.begin(report.corpus);
  for (const auto& r : report.rows) sink.row(r);
  sink.end(report.summary, report.violations);
}

GraphDescription describe_graph(const Graph& g) {
  GraphDescription d;
  d.graph6 = write_graph6(g);
  d.invariants = invariant_set(g);
  d.spectrum = spectrum(g);
  d.ee = estrada_index(d.spectrum);
  d.energy = graph_energy(d.spectrum);
  return d;
}

void write_descriptions_json(const std::vector<GraphDescription>& graphs, std::ostream& out) {
  ordered_json doc;
  doc["version"] = kReportSchemaVersion;
  ordered_json arr = ordered_json::array();
  for (const auto& d : graphs) {
    ordered_json j;
    put_invariants(j, d.graph6, d.invariants);
    j["ee"] = d.ee;
    j["energy"] = d.energy;
    j["spectrum"] = d.spectrum.values;
    j["classification"] = classification_json(d.invariants.classification);
    arr.push_back(std::move(j));
  }
  doc["graphs"] = std::move(arr);
  out << doc.dump() << '\n';
}

void write_descriptions_csv(const std::vector<GraphDescription>& graphs, std::ostream& out) {
  out << "graph6,n,m,delta_max,delta_min,diam,triangles,randic,randic_half,ee,energy,"
         "lambda_max,lambda_min\n";
  for (const auto& d : graphs) {
    const auto& inv = d.invariants;
    out << d.graph6 << ',' << inv.n << ',' << inv.m << ',' << inv.max_degree << ','
        << inv.min_degree << ',' << inv.diam.to_string() << ',' << inv.triangles << ','
        << format_real(inv.randic) << ',' << format_real(inv.randic_half) << ','
        << format_real(d.ee) << ',' << format_real(d.energy) << ','
        << format_real(d.spectrum.largest()) << ',' << format_real(d.spectrum.smallest()) << '\n';
  }
}

void write_descriptions_table(const std::vector<GraphDescription>& graphs, std::ostream& out) {
  for (const auto& d : graphs) {
    const auto& inv = d.invariants;
    const auto& c = inv.classification;
    out << "graph6      " << d.graph6 << '\n'
        << "n, m        " << inv.n << ", " << inv.m << '\n'
        << "degrees     max " << inv.max_degree << ", min " << inv.min_degree << '\n'
        << "diameter    " << inv.diam.to_string() << '\n'
        << "triangles   " << inv.triangles << '\n'
        << std::setprecision(12) << "randic      " << inv.randic << '\n'
        << "randic_1/2  " << inv.randic_half << '\n'
        << "estrada     " << d.ee << '\n'
        << "energy      " << d.energy << '\n'
        << "spectrum   ";
    for (double x : d.spectrum.values) out << ' ' << x;
    out << '\n' << "class      " << (c.connected ? " connected" : " disconnected")
        << (c.bipartite ? " bipartite" : "") << (c.unicyclic ? " unicyclic" : "")
        << (c.star ? " star" : "") << (c.path ? " path" : "") << (c.cycle ? " cycle" : "")
        << (c.complete ? " complete" : "") << (c.empty ? " empty" : "") << "\n\n";
  }
}

}  // namespace estrada
