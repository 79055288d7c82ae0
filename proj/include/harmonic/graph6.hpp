#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "harmonic/graph.hpp"

namespace harmonic {

/// Largest order representable by the short (single header byte) form.
inline constexpr int kGraph6MaxOrder = 62;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6, short form only: one header byte n + 63, then the upper triangle
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian 6 bits per byte, each
// byte offset by 63, padded with zero bits.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace harmonic
