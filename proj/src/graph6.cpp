#include <string>

#include "estrada/errors.hpp"
#include "estrada/graph_io.hpp"

namespace estrada {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

class Reader {
 public:
  Reader(std::string_view data, std::size_t base) : data_(data), base_(base) {}

  bool done() const { return pos_ >= data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t offset() const { return base_ + pos_; }

  unsigned sextet() {
    if (done()) throw LengthError("graph6 line truncated at offset " + std::to_string(offset()));
    const auto byte = static_cast<unsigned char>(data_[pos_]);
    if (byte < kBias || byte > kMaxByte) {
      throw EncodingError("graph6 byte " + std::to_string(byte) + " outside 63..126", offset());
    }
    ++pos_;
    return byte - kBias;
  }

  unsigned char peek() const { return static_cast<unsigned char>(data_[pos_]); }

 private:
  std::string_view data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::uint64_t read_order(Reader& in) {
  if (in.done()) throw LengthError("empty graph6 line");
  if (in.peek() != kMaxByte) return in.sextet();
  in.sextet();
  std::size_t groups = 3;
  if (!in.done() && in.peek() == kMaxByte) {
    in.sextet();
    groups = 6;
  }
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | in.sextet();
  return n;
}

void append_order(std::string& out, std::uint64_t n) {
  auto put = [&](std::uint64_t v) { out.push_back(static_cast<char>(v + kBias)); };
  if (n < 63) {
    put(n);
  } else if (n < (std::uint64_t{1} << 18)) {
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 0x3F);
  } else {
    out.append(2, static_cast<char>(kMaxByte));
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 0x3F);
  }
}

std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_line(line);
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  Reader in(line, base);
  const std::uint64_t n = read_order(in);
  if (n >= kGraph6OrderLimit) throw CapacityError("graph6 order exceeds 2^36 - 1");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (pairs + 5) / 6;
  if (in.remaining() != expected) {
    throw LengthError("graph6 payload for n=" + std::to_string(n) + " needs " +
                      std::to_string(expected) + " bytes, found " +
                      std::to_string(in.remaining()));
  }

  std::vector<Edge> edges;
  unsigned current = 0;
  int bits_left = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (bits_left == 0) {
        current = in.sextet();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n >= kGraph6OrderLimit) throw CapacityError("graph6 cannot encode n >= 2^36");
  std::string out;
  append_order(out, n);
  unsigned current = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      current = (current << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
  return out;
}

}  // namespace estrada
