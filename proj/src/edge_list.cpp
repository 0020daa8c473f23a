#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "estrada/errors.hpp"
#include "estrada/graph_io.hpp"

namespace estrada {

namespace {

std::string_view strip(std::string_view s) {
  if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Exactly two non-negative integers separated by whitespace.
std::pair<std::size_t, std::size_t> parse_pair(std::string_view s, std::size_t line) {
  std::size_t values[2] = {0, 0};
  std::size_t pos = 0;
  for (int k = 0; k < 2; ++k) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, values[k]);
    if (ec != std::errc() || ptr == begin) {
      throw ParseError("expected two non-negative integers, got '" + std::string(s) + "'", line);
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    if (k == 0 && (pos >= s.size() || (s[pos] != ' ' && s[pos] != '\t'))) {
      throw ParseError("expected two non-negative integers, got '" + std::string(s) + "'", line);
    }
  }
  if (pos != s.size()) {
    throw ParseError("unexpected trailing text in '" + std::string(s) + "'", line);
  }
  return {values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto content = strip(raw);
    if (content.empty()) continue;
    const auto pair = parse_pair(content, line_no);
    if (!header) {
      header = pair;
      continue;
    }
    if (pair.first == pair.second) {
      throw ConstructionError("line " + std::to_string(line_no) + ": loop at vertex " +
                              std::to_string(pair.first));
    }
    if (pair.first >= header->first || pair.second >= header->first) {
      throw ConstructionError("line " + std::to_string(line_no) + ": endpoint outside 0.." +
                              std::to_string(header->first == 0 ? 0 : header->first - 1));
    }
    edges.emplace_back(pair.first, pair.second);
  }
  if (!header) throw ParseError("missing 'n m' header", line_no == 0 ? 1 : line_no);

  Graph g = Graph::build(header->first, edges);
  if (g.size() != header->second) {
    throw ConsistencyError("declared " + std::to_string(header->second) + " edges, found " +
                           std::to_string(g.size()) + " distinct");
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

InputFormat sniff_input_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".g6") return InputFormat::graph6;
  if (ext == ".el") return InputFormat::edge_list;
  throw ParameterError("cannot infer input format from '" + path.string() +
                       "'; use .g6/.el or --input-format");
}

std::vector<GraphDocument> read_graphs(std::istream& in, InputFormat format,
                                       const std::string& source_name) {
  std::vector<GraphDocument> docs;
  if (format == InputFormat::edge_list) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    docs.push_back({source_name, 0, parse_edge_list(buffer.str())});
    return docs;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      docs.push_back({source_name, docs.size(), parse_graph6(line)});
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return docs;
}

std::vector<GraphDocument> read_graph_file(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path.string() + "'");
  return read_graphs(in, format, path.string());
}

}  // namespace estrada
