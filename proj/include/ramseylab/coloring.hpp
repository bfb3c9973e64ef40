#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace ramseylab {

enum class Color : unsigned char { Red = 0, Blue = 1 };

constexpr Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_letter(Color c) { return c == Color::Red ? 'R' : 'B'; }

// Total red/blue assignment on a graph's edges, indexed by edge id.
//
// The host is not stored; every operation that pairs a coloring with a graph
// checks that the sizes agree (edge ids are canonical, so that suffices).
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(const Graph& host, Color fill = Color::Red) : colors_(host.size(), fill) {}
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }

  Color operator[](EdgeId id) const { return colors_[id]; }
  Color at(EdgeId id) const { return colors_.at(id); }
  void set(EdgeId id, Color c) { colors_.at(id) = c; }
  void toggle(EdgeId id) { colors_.at(id) = flip(colors_.at(id)); }

  bool is(EdgeId id, Color c) const { return colors_[id] == c; }

  int count(Color c) const {
    int k = 0;
    for (Color x : colors_) k += (x == c);
    return k;
  }

  const std::vector<Color>& values() const { return colors_; }

  // Red↔blue swap of every edge.
  EdgeColoring swapped() const {
    EdgeColoring out = *this;
    for (Color& c : out.colors_) c = flip(c);
    return out;
  }

  void require_host(const Graph& host) const {
    if (size() != host.size()) {
      throw DomainMismatch("coloring has " + std::to_string(size()) + " edges, host has " +
                           std::to_string(host.size()));
    }
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

// Spanning subgraph of the edges with color `c`.
inline Graph color_class(const Graph& host, const EdgeColoring& c, Color which) {
  c.require_host(host);
  return host.spanning_subgraph([&](EdgeId id) { return c[id] == which; });
}

// Coloring text format: "n m", then one "u v R" or "u v B" line per edge.
inline void write_coloring(std::ostream& os, const Graph& host, const EdgeColoring& c) {
  c.require_host(host);
  os << host.order() << ' ' << host.size() << '\n';
  for (EdgeId id = 0; id < host.size(); ++id) {
    const Edge& e = host.edge(id);
    os << e.u << ' ' << e.v << ' ' << color_letter(c[id]) << '\n';
  }
}

inline std::string coloring_to_string(const Graph& host, const EdgeColoring& c) {
  std::ostringstream os;
  write_coloring(os, host, c);
  return os.str();
}

// Parses the text format against `host`. Edge lines may come in any order
// but must cover every host edge exactly once.
inline EdgeColoring read_coloring(std::istream& is, const Graph& host) {
  long long n = -1, m = -1;
  if (!(is >> n >> m)) throw ParseError("coloring: missing 'n m' header");
  if (n != host.order() || m != host.size()) {
    throw DomainMismatch("coloring header " + std::to_string(n) + " " + std::to_string(m) +
                         " does not match graph with " + std::to_string(host.order()) +
                         " vertices and " + std::to_string(host.size()) + " edges");
  }
  std::vector<Color> colors(host.size(), Color::Red);
  std::vector<bool> seen(host.size(), false);
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    std::string letter;
    if (!(is >> u >> v >> letter)) throw ParseError("coloring: truncated at edge line " + std::to_string(i + 1));
    if (letter != "R" && letter != "B") throw ParseError("coloring: color must be R or B, got '" + letter + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainMismatch("coloring: vertex out of range");
    auto id = host.edge_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!id) throw DomainMismatch("coloring: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    if (seen[*id]) throw DomainMismatch("coloring: edge colored twice");
    seen[*id] = true;
    colors[*id] = letter == "R" ? Color::Red : Color::Blue;
  }
  std::string extra;
  if (is >> extra) throw ParseError("coloring: trailing content '" + extra + "'");
  return EdgeColoring(std::move(colors));
}

inline EdgeColoring coloring_from_string(const std::string& text, const Graph& host) {
  std::istringstream is(text);
  return read_coloring(is, host);
}

}  // namespace ramseylab
