#pragma once

#include <string>
#include <string_view>

#include "errors.hpp"
#include "graph.hpp"

namespace ramseylab {

// graph6 codec. Short form for n <= 62, four-byte form up to 258047,
// eight-byte form beyond. Bits are the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six per byte, offset by 63.

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range 63..126");
  }

  std::size_t pos = 0;
  auto sextet = [&]() -> long long {
    if (pos >= text.size()) throw ParseError("graph6: truncated size field");
    return static_cast<long long>(text[pos++]) - 63;
  };
  long long n = sextet();
  if (n == 63) {
    int width = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | sextet();
  }
  if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace ramseylab
