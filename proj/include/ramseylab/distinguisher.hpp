#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrowing.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "properties.hpp"
#include "subgraph.hpp"
#include "trees.hpp"

namespace ramseylab {

inline constexpr int kFolkmanVertexCap = 20;

// Every vertex 2-coloring of J has a monochromatic K_{t−1}, and J has no K_t.
// Exhaustive over 2^|V(J)| colorings.
inline bool folkman_vertex_property(const Graph& j, int t) {
  if (t < 2) throw InvalidArgument("folkman_vertex_property: t must be >= 2");
  if (j.order() > kFolkmanVertexCap) throw InvalidArgument("folkman_vertex_property: J has more than 20 vertices");
  if (clique_number(j) >= t) return false;
  std::vector<std::uint32_t> cliques;
  for_each_clique(j, t - 1, {}, [&](std::span<const Vertex> vs) {
    std::uint32_t m = 0;
    for (Vertex v : vs) m |= std::uint32_t{1} << v;
    cliques.push_back(m);
    return true;
  });
  const std::uint32_t all = j.order() == 32 ? ~0u : (std::uint32_t{1} << j.order()) - 1;
  for (std::uint32_t red = 0;; ++red) {
    const std::uint32_t blue = all & ~red;
    bool mono = false;
    for (std::uint32_t c : cliques)
      if ((c & red) == c || (c & blue) == c) {
        mono = true;
        break;
      }
    if (!mono) return false;
    if (red == all) break;
  }
  return true;
}

struct DistinguisherDefaults {
  Graph gamma;
  Graph j;
};

// For t = 3: Γ = T (no triangle, and any coloring has a blue edge or a red T)
// and J = C_5 (no triangle, and any vertex 2-coloring repeats a color on
// some edge).
inline DistinguisherDefaults distinguisher_defaults(const Graph& tree, int t) {
  if (t != 3) throw InvalidArgument("distinguisher_defaults: only t = 3 has built-in defaults");
  if (!is_tree(tree)) throw InvalidArgument("distinguisher_defaults: T is not a tree");
  return {tree, cycle_graph(5)};
}

struct DistinguisherResult {
  Graph graph;
  EdgeColoring coloring;  // (T, K_t·K_2)-free
  std::vector<Vertex> clique;
  bool odd_diameter = true;
  int r = 0;  // diam(T) = 2r+1 or 2r
  int a = 0;  // even case: C gadgets per clique vertex
};

namespace detail {

struct ColoredBuilder {
  GraphBuilder gb;
  std::vector<std::pair<Edge, Color>> colors;

  void edge(Vertex u, Vertex v, Color c) {
    gb.add_edge(u, v);
    colors.emplace_back(Edge(u, v), c);
  }

  std::vector<Vertex> rooted(const RootedGadget& g, Vertex at) {
    std::vector<Vertex> map = gb.add_rooted_copy(g.graph, g.root, at);
    for (EdgeId id = 0; id < g.graph.size(); ++id) {
      const Edge& e = g.graph.edge(id);
      colors.emplace_back(Edge(map[e.u], map[e.v]), (*g.witness_coloring)[id]);
    }
    return map;
  }

  std::pair<Graph, EdgeColoring> finish() const {
    Graph g = gb.build();
    EdgeColoring c(g, Color::Red);
    for (const auto& [e, col] : colors) c.set(g.edge_id(e.u, e.v), col);
    return {std::move(g), std::move(c)};
  }
};

// Throws when `host` is known not to arrow (g, h); gives up silently when the
// search is too large to settle.
inline void check_ramsey_if_feasible(const Graph& host, const Graph& g, const Graph& h, const std::string& what) {
  ArrowingOptions opt;
  opt.budget = 2'000'000;
  try {
    if (arrows(host, g, h, opt).refuted()) throw InvalidArgument("diameter_distinguisher: " + what);
  } catch (const BudgetExhausted&) {
  }
}

}  // namespace detail

// A graph F with F → (T, K_t) and F ↛ (T, K_t·K_2), with the explicit free
// coloring. Odd diameter 2r+1: K_t with Λ_r(T, Γ) hung at every clique
// vertex. Even diameter 2r: K_t, and at every clique vertex a copies of C(Γ′)
// and one Λ_{r−1}; each C carries Λ_{r−2} at its co-root (Λ_0 is a single
// vertex).
inline DistinguisherResult diameter_distinguisher(const Graph& tree, int t, const Graph& gamma,
                                                  const std::optional<Graph>& gamma_prime = std::nullopt,
                                                  const std::optional<Graph>& j = std::nullopt) {
  if (t < 3) throw InvalidArgument("diameter_distinguisher: t must be >= 3");
  TreeProfile prof = tree_classify(tree);
  if (!prof.in_Tprime) throw InvalidArgument("diameter_distinguisher: T is not in class 𝒯′");
  if (clique_number(gamma) >= t) throw InvalidArgument("diameter_distinguisher: Γ contains K_t");
  detail::check_ramsey_if_feasible(gamma, tree, complete_graph(t - 1), "Γ does not arrow (T, K_{t-1})");

  DistinguisherResult out;
  out.odd_diameter = prof.diameter % 2 == 1;
  out.r = prof.diameter / 2;
  detail::ColoredBuilder cb;
  cb.gb = GraphBuilder(t);
  for (Vertex u = 0; u < t; ++u) {
    out.clique.push_back(u);
    for (Vertex v = u + 1; v < t; ++v) cb.edge(u, v, Color::Blue);
  }

  if (out.odd_diameter) {
    RootedGadget lam = lambda_gadget(tree, gamma, out.r);
    for (Vertex u = 0; u < t; ++u) cb.rooted(lam, u);
  } else {
    if (!gamma_prime) throw InvalidArgument("diameter_distinguisher: even diameter needs Γ′");
    Graph jj = j ? *j : (t == 3 ? cycle_graph(5) : throw InvalidArgument("diameter_distinguisher: even diameter needs J"));
    if (jj.order() > kFolkmanVertexCap) throw InvalidArgument("diameter_distinguisher: J has more than 20 vertices");
    if (!folkman_vertex_property(jj, t)) throw InvalidArgument("diameter_distinguisher: J fails its vertex-coloring check");
    if (clique_number(*gamma_prime) >= t) throw InvalidArgument("diameter_distinguisher: Γ′ contains K_t");
    detail::check_ramsey_if_feasible(*gamma_prime, tree, jj, "Γ′ does not arrow (T, J)");

    out.a = static_cast<int>(prof.long_branch_neighbors.size()) - 1;
    RootedGadget c = c_gadget(*gamma_prime);
    RootedGadget outer = lambda_gadget(tree, gamma, out.r - 1);
    RootedGadget inner = lambda_gadget(tree, gamma, out.r - 2);
    for (Vertex u = 0; u < t; ++u) {
      for (int i = 0; i < out.a; ++i) {
        std::vector<Vertex> map = cb.rooted(c, u);
        cb.rooted(inner, map[*c.co_root]);
      }
      cb.rooted(outer, u);
    }
  }

  auto [g, col] = cb.finish();
  out.graph = std::move(g);
  out.coloring = std::move(col);
  if (!coloring_is_free(out.graph, out.coloring, tree, clique_with_pendants(t, 1, 2)))
    throw InvariantViolation("diameter_distinguisher: witness coloring is not (T, K_t·K_2)-free");
  return out;
}

}  // namespace ramseylab
