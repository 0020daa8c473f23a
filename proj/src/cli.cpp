#include "estrada/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "estrada/errors.hpp"
#include "estrada/generators.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/harness.hpp"
#include "estrada/report.hpp"

namespace estrada::cli {

namespace {

enum class OutputFormat { table, csv, json };

struct Config {
  OutputFormat format = OutputFormat::table;
  double tol = kDefaultTolerance;
  unsigned jobs = 0;
  bool jobs_given = false;

  std::string graph6;
  std::string file;
  std::string input_format;

  std::string family;
  std::vector<std::string> params;

  std::size_t n_max = 5;
  std::string mode = "all";

  std::string model = "er";
  std::string n_range = "20";
  double prob = 0.3;
  std::size_t left = 8;
  std::size_t right = 8;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;

  std::vector<std::string> bound_ids;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"table", OutputFormat::table}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

void add_common(CLI::App* cmd, Config& cfg, bool with_jobs) {
  cmd->add_option("--format", cfg.format, "Output format: table, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--tol", cfg.tol, "Equality/violation tolerance")
      ->check(CLI::PositiveNumber);
  if (with_jobs) {
    cmd->add_option("--jobs", cfg.jobs, "Worker threads (default: ESTRADA_JOBS or all cores)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { cfg.jobs_given = true; });
  }
}

void add_input(CLI::App* cmd, Config& cfg) {
  auto* g6 = cmd->add_option("--graph6", cfg.graph6, "Inline graph6 string");
  auto* file = cmd->add_option("--file", cfg.file,
                               "Graph file: .g6 (one graph per line) or .el (0-based edge list)");
  g6->excludes(file);
  cmd->add_option("--input-format", cfg.input_format, "Override file format sniffing")
      ->check(CLI::IsMember({"g6", "el"}));
}

unsigned resolve_jobs(const Config& cfg) {
  if (cfg.jobs_given) return cfg.jobs;
  if (const char* env = std::getenv("ESTRADA_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("ESTRADA_JOBS must be a positive integer, got '") + env +
                         "'");
  }
  return 0;
}

std::vector<GraphDocument> load_input(const Config& cfg) {
  if (cfg.graph6.empty() == cfg.file.empty()) {
    throw ParameterError("exactly one of --graph6 or --file is required");
  }
  if (!cfg.graph6.empty()) {
    return {GraphDocument{"--graph6", 0, parse_graph6(cfg.graph6)}};
  }
  InputFormat format;
  if (cfg.input_format == "g6") {
    format = InputFormat::graph6;
  } else if (cfg.input_format == "el") {
    format = InputFormat::edge_list;
  } else {
    format = sniff_input_format(cfg.file);
  }
  try {
    return read_graph_file(cfg.file, format);
  } catch (const ParseError& e) {
    throw ParseError(cfg.file + ": " + e.what(), e.line());
  }
}

std::unique_ptr<ReportSink> make_sink(OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv: return std::make_unique<CsvSink>(out);
    case OutputFormat::json: return std::make_unique<JsonSink>(out);
    case OutputFormat::table: break;
  }
  return std::make_unique<TableSink>(out);
}

int finish(const VerificationReport& report, std::ostream& err) {
  if (report.violations.empty()) return kExitOk;
  err << "counterexamples: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    err << "violation\t" << v.graph6 << '\t' << v.check << '\t' << format_real(v.gap) << '\n';
  }
  return kExitViolation;
}

RunOptions options_for(const Config& cfg, ReportSink& sink, bool keep_rows) {
  RunOptions o;
  o.tol = cfg.tol;
  o.jobs = resolve_jobs(cfg);
  o.sink = &sink;
  o.keep_rows = keep_rows;
  return o;
}

int cmd_compute(const Config& cfg, std::ostream& out) {
  std::vector<GraphDescription> described;
  for (const auto& doc : load_input(cfg)) described.push_back(describe_graph(doc.graph));
  switch (cfg.format) {
    case OutputFormat::json: write_descriptions_json(described, out); break;
    case OutputFormat::csv: write_descriptions_csv(described, out); break;
    case OutputFormat::table: write_descriptions_table(described, out); break;
  }
  return kExitOk;
}

int cmd_check_bounds(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto docs = load_input(cfg);
  auto sink = make_sink(cfg.format, out);
  return finish(verify_documents(docs, options_for(cfg, *sink, false)), err);
}

int cmd_sweep(const Config& cfg, std::ostream& out, std::ostream& err) {
  ParamGrid grid;
  for (const auto& p : cfg.params) grid.push_back(parse_param_range(p));
  auto sink = make_sink(cfg.format, out);
  return finish(family_sweep(cfg.family, grid, options_for(cfg, *sink, false)), err);
}

int cmd_exhaustive(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto mode = parse_exhaustive_mode(cfg.mode);
  if (!mode) throw ParameterError("unknown mode '" + cfg.mode + "'");
  auto sink = make_sink(cfg.format, out);
  return finish(exhaustive_verify(cfg.n_max, *mode, options_for(cfg, *sink, false)), err);
}

int cmd_random(const Config& cfg, std::ostream& out, std::ostream& err) {
  RandomModel model;
  model.p = cfg.prob;
  if (cfg.model == "er") {
    model.kind = RandomModel::Kind::er;
    const auto range = parse_param_range("n=" + cfg.n_range);
    model.n_min = static_cast<std::size_t>(range.lo);
    model.n_max = static_cast<std::size_t>(range.hi);
  } else {
    model.kind = RandomModel::Kind::bipartite;
    model.left = cfg.left;
    model.right = cfg.right;
  }
  auto sink = make_sink(cfg.format, out);
  return finish(random_campaign(model, cfg.trials, cfg.seed, options_for(cfg, *sink, false)), err);
}

int cmd_equality_cases(const Config& cfg, std::ostream& out) {
  std::vector<BoundId> ids;
  for (const auto& s : cfg.bound_ids) {
    const auto id = parse_bound_id(s);
    if (!id) throw ParameterError("unknown bound id '" + s + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) ids.assign(kAllBounds.begin(), kAllBounds.end());
  const auto cases = find_equality_cases(ids, cfg.n_max, cfg.tol, resolve_jobs(cfg));
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["version"] = kReportSchemaVersion;
      doc["n_max"] = cfg.n_max;
      doc["tol"] = cfg.tol;
      doc["cases"] = nlohmann::ordered_json::object();
      for (const auto& [id, list] : cases) doc["cases"][std::string(to_string(id))] = list;
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "bound,graph6\n";
      for (const auto& [id, list] : cases)
        for (const auto& g6 : list) out << to_string(id) << ',' << g6 << '\n';
      break;
    case OutputFormat::table:
      for (const auto& [id, list] : cases) {
        out << to_string(id) << " (" << list.size() << "):";
        for (const auto& g6 : list) out << ' ' << g6;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Estrada index, structural invariants and spectral lower-bound verification",
               "estrada"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Invariants, spectrum and Estrada index");
  add_input(compute, cfg);
  add_common(compute, cfg, false);

  auto* check = app.add_subcommand("check-bounds", "Evaluate all lower bounds on input graphs");
  add_input(check, cfg);
  add_common(check, cfg, true);

  auto* sweep = app.add_subcommand("sweep", "Evaluate bounds along a named graph family");
  sweep->add_option("--family", cfg.family, "Family id")
      ->required()
      ->check(CLI::IsMember(family_ids()));
  sweep->add_option("--param", cfg.params, "name=value or name=lo..hi (repeatable)");
  add_common(sweep, cfg, true);

  auto* exhaustive = app.add_subcommand("exhaustive", "Verify every labeled graph up to n-max");
  exhaustive->add_option("--n-max", cfg.n_max, "Largest order (<= 7)")->check(CLI::Range(1, 7));
  exhaustive->add_option("--mode", cfg.mode, "all, connected or bipartite-connected")
      ->check(CLI::IsMember({"all", "connected", "bipartite-connected"}));
  add_common(exhaustive, cfg, true);

  auto* random = app.add_subcommand("random", "Seeded random-graph campaign");
  random->add_option("--model", cfg.model, "er or bipartite")
      ->check(CLI::IsMember({"er", "bipartite"}));
  random->add_option("--n", cfg.n_range, "Order for er: N or LO..HI");
  random->add_option("--prob", cfg.prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  random->add_option("--left", cfg.left, "Left part size for bipartite");
  random->add_option("--right", cfg.right, "Right part size for bipartite");
  random->add_option("--trials", cfg.trials, "Number of graphs")->check(CLI::PositiveNumber);
  random->add_option("--seed", cfg.seed, "Campaign seed");
  add_common(random, cfg, true);

  auto* equality = app.add_subcommand("equality-cases", "Labeled graphs attaining bounds");
  equality->add_option("--bound", cfg.bound_ids, "Bound id G1..G7, B1..B7 (repeatable)");
  equality->add_option("--n-max", cfg.n_max, "Largest order (<= 7)")->check(CLI::Range(1, 7));
  add_common(equality, cfg, true);

  std::vector<std::string> argv_storage{"estrada"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (check->parsed()) return cmd_check_bounds(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
    if (exhaustive->parsed()) return cmd_exhaustive(cfg, out, err);
    if (random->parsed()) return cmd_random(cfg, out, err);
    if (equality->parsed()) return cmd_equality_cases(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace estrada::cli
