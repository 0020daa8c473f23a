#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

/// Largest order representable by the 36-bit graph6 size prefix, plus one.
inline constexpr std::uint64_t kGraph6OrderLimit = std::uint64_t{1} << 36;

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// line terminators are ignored.
///
/// Throws EncodingError (with byte offset) for bytes outside 63..126,
/// LengthError when the payload does not match the size prefix and
/// CapacityError when the order cannot be represented.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding (no header, no newline).
std::string write_graph6(const Graph& g);

/// Parses the edge-list format:
///
///     # comment
///     n m
///     i j      (m lines, 0-based vertices)
///
/// Comments start with '#' and may trail data. Throws ParseError with a
/// line number for malformed lines, ConstructionError for loops or
/// out-of-range endpoints and ConsistencyError when the number of distinct
/// edges differs from the declared m.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

enum class InputFormat { graph6, edge_list };

/// .g6 -> graph6, .el -> edge_list; anything else is a ParameterError.
InputFormat sniff_input_format(const std::filesystem::path& path);

struct GraphDocument {
  std::string source_name;
  std::size_t index = 0;  // 0-based position within the source
  Graph graph;
};

/// One graph per non-blank line for graph6; one graph per stream for the
/// edge-list format. A bad graph6 line is reported as a ParseError carrying
/// its line number.
std::vector<GraphDocument> read_graphs(std::istream& in, InputFormat format,
                                       const std::string& source_name);
std::vector<GraphDocument> read_graph_file(const std::filesystem::path& path, InputFormat format);

}  // namespace estrada
