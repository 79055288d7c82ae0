#include "harmonic/graph6.hpp"

#include <vector>

namespace harmonic {

namespace {

constexpr int kOffset = 63;

std::size_t packed_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("long-form graph6 header (n > 62) is not supported", 0);
  if (header < kOffset || header > kOffset + kGraph6MaxOrder) {
    throw ParseError("malformed graph6 header byte", 0);
  }
  const int n = header - kOffset;
  const std::size_t body = packed_length(n);
  if (text.size() < 1 + body) throw ParseError("truncated graph6 bit-vector", text.size());
  if (text.size() > 1 + body) throw ParseError("trailing bytes after graph6 bit-vector", 1 + body);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto bit_at = [&](std::size_t k) {
    const std::size_t pos = 1 + k / 6;
    const int byte = static_cast<unsigned char>(text[pos]) - kOffset;
    return (byte >> (5 - k % 6)) & 1;
  };
  for (std::size_t pos = 1; pos <= body; ++pos) {
    const int byte = static_cast<unsigned char>(text[pos]);
    if (byte < kOffset || byte > 126) throw ParseError("byte outside graph6 range", pos);
  }
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit_at(bit)) edges.push_back({i, j});
    }
  }
  for (std::size_t k = bit; k < body * 6; ++k) {
    if (bit_at(k)) throw ParseError("nonzero padding bit", 1 + k / 6);
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw GraphError("graph6 short form supports n <= 62, got n=" + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + packed_length(n));
  out.push_back(static_cast<char>(n + kOffset));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    auto nb = g.neighbors(j);
    auto it = nb.begin();
    for (Vertex i = 0; i < j; ++i) {
      while (it != nb.end() && *it < i) ++it;
      const bool present = it != nb.end() && *it == i;
      acc = (acc << 1) | (present ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace harmonic
