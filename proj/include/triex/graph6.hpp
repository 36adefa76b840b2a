#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triex/graph.hpp"

namespace triex {

// graph6 line format, bit-exact for 0..62 vertices:
//   byte 0:    vertex count + 63
//   remainder: upper-triangle bits in pair_index order, packed big-endian
//              into 6-bit groups, zero-padded, each group emitted as
//              group value + 63 (printable ASCII 63..126).
inline std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int nbits = n * (n - 1) / 2;
  for (int base = 0; base < nbits; base += 6) {
    int group = 0;
    for (int k = 0; k < 6; ++k) {
      const int idx = base + k;
      group <<= 1;
      if (idx < nbits && g.pair_bits()[idx]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

// Accepts one graph6 line, with an optional ">>graph6<<" header and trailing
// CR/LF tolerated. Throws std::invalid_argument with a reason on anything
// malformed: bad characters, wrong length, nonzero padding, or a long-form
// size field (graphs beyond 62 vertices are outside this library's domain).
inline Graph graph6_decode(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");

  const unsigned char size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126)
    throw std::invalid_argument("graph6: long-form size field (more than 62 vertices)");
  if (size_byte < 63 || size_byte > 125)
    throw std::invalid_argument("graph6: invalid size byte");
  const int n = size_byte - 63;

  const int nbits = n * (n - 1) / 2;
  const int ngroups = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + ngroups)
    throw std::invalid_argument("graph6: expected " + std::to_string(1 + ngroups) +
                                " characters for " + std::to_string(n) + " vertices, got " +
                                std::to_string(line.size()));

  std::vector<std::pair<int, int>> es;
  for (int gi = 0; gi < ngroups; ++gi) {
    const unsigned char c = static_cast<unsigned char>(line[1 + gi]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid data byte");
    const int group = c - 63;
    for (int k = 0; k < 6; ++k) {
      const int idx = gi * 6 + k;
      const bool bit = (group >> (5 - k)) & 1;
      if (!bit) continue;
      if (idx >= nbits) throw std::invalid_argument("graph6: nonzero padding bits");
      const auto [i, j] = pair_at(idx);
      es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

}  // namespace triex
