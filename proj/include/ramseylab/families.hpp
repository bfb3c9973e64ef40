#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace ramseylab {

// ---- basic families -------------------------------------------------------

inline Graph complete_graph(int t) {
  if (t < 0) throw InvalidArgument("complete_graph: negative order");
  GraphBuilder gb(t);
  std::vector<Vertex> vs(t);
  std::iota(vs.begin(), vs.end(), 0);
  gb.add_clique(vs);
  return gb.build();
}

// K_{1,s}: center 0, leaves 1..s.
inline Graph star_graph(int s) {
  if (s < 1) throw InvalidArgument("star: needs at least one edge");
  GraphBuilder gb(s + 1);
  for (int i = 1; i <= s; ++i) gb.add_edge(0, i);
  return gb.build();
}

// Path on n vertices 0-1-...-(n-1).
inline Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path: needs at least one vertex");
  GraphBuilder gb(n);
  for (int i = 0; i + 1 < n; ++i) gb.add_edge(i, i + 1);
  return gb.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle: needs at least three vertices");
  GraphBuilder gb(n);
  for (int i = 0; i < n; ++i) gb.add_edge(i, (i + 1) % n);
  return gb.build();
}

inline Graph petersen_graph() {
  GraphBuilder gb(10);
  for (int i = 0; i < 5; ++i) {
    gb.add_edge(i, (i + 1) % 5);
    gb.add_edge(i, i + 5);
    gb.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return gb.build();
}

enum class BasicKind { Star, Path, Clique, Cycle };

inline Graph basic_family(BasicKind kind, int param) {
  switch (kind) {
    case BasicKind::Star: return star_graph(param);
    case BasicKind::Path: return path_graph(param);
    case BasicKind::Clique:
      if (param < 1) throw InvalidArgument("clique: needs at least one vertex");
      return complete_graph(param);
    case BasicKind::Cycle: return cycle_graph(param);
  }
  throw InvalidArgument("basic_family: unknown kind");
}

// K_t·aK_b: K_t on 0..t-1; the i-th K_b (i < a) shares vertex i with it and
// owns vertices t + i(b-1) .. t + (i+1)(b-1) - 1.
inline Graph clique_with_pendants(int t, int a, int b) {
  if (t < 3) throw InvalidArgument("clique_with_pendants: t must be >= 3");
  if (a < 1 || a > t) throw InvalidArgument("clique_with_pendants: need 1 <= a <= t");
  if (b < 2) throw InvalidArgument("clique_with_pendants: b must be >= 2");
  GraphBuilder gb(t);
  std::vector<Vertex> k(t);
  std::iota(k.begin(), k.end(), 0);
  gb.add_clique(k);
  for (int i = 0; i < a; ++i) {
    std::vector<Vertex> block{i};
    Vertex first = gb.add_vertices(b - 1);
    for (int j = 0; j < b - 1; ++j) block.push_back(first + j);
    gb.add_clique(block);
  }
  return gb.build();
}

// s-suitable caterpillar: spine a=0, b=1, c=2; s leaves at a, s leaves at c,
// then `mid` leaves at b.
inline Graph suitable_caterpillar(int s, int leaves_a, int mid, int leaves_c) {
  if (s < 1) throw InvalidArgument("suitable_caterpillar: s must be >= 1");
  if (leaves_a != s || leaves_c != s)
    throw InvalidArgument("suitable_caterpillar: spine endpoints need exactly s leaves (degree s+1)");
  if (mid < 0 || mid > s - 1) throw InvalidArgument("suitable_caterpillar: middle vertex takes 0..s-1 leaves");
  GraphBuilder gb(3);
  gb.add_edge(0, 1);
  gb.add_edge(1, 2);
  for (int i = 0; i < s; ++i) gb.add_edge(0, gb.add_vertices(1));
  for (int i = 0; i < s; ++i) gb.add_edge(2, gb.add_vertices(1));
  for (int i = 0; i < mid; ++i) gb.add_edge(1, gb.add_vertices(1));
  return gb.build();
}

inline Graph suitable_caterpillar(int s, int mid) { return suitable_caterpillar(s, s, mid, s); }

// If t is an s-suitable caterpillar, returns s.
inline std::optional<int> suitable_caterpillar_parameter(const Graph& t) {
  if (!is_tree(t) || t.order() < 5) return std::nullopt;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 2) inner.push_back(v);
  if (inner.size() != 3) return std::nullopt;
  Vertex mid = -1;
  for (Vertex v : inner) {
    int inner_nbrs = 0;
    for (Vertex w : t.neighbors(v)) inner_nbrs += t.degree(w) >= 2;
    if (inner_nbrs == 2) mid = v;
  }
  if (mid < 0) return std::nullopt;
  std::vector<Vertex> ends;
  for (Vertex v : inner)
    if (v != mid) ends.push_back(v);
  const int s = t.degree(ends[0]) - 1;
  if (s < 1 || t.degree(ends[1]) != s + 1 || t.degree(mid) > s + 1) return std::nullopt;
  return s;
}

inline bool is_star(const Graph& t) {
  if (!is_tree(t) || t.order() < 2) return false;
  return t.max_degree() == t.order() - 1;
}

// ---- rooted gadgets -------------------------------------------------------

struct RootedGadget {
  Graph graph;
  Vertex root = 0;
  std::optional<Vertex> co_root;
  std::optional<EdgeColoring> witness_coloring;
};

// U_{k,i}: complete k-ary tree of depth i, labeled breadth first from root 0.
inline RootedGadget uniform_tree(int k, int i) {
  if (k < 1) throw InvalidArgument("uniform_tree: k must be >= 1");
  if (i < 0) throw InvalidArgument("uniform_tree: depth must be >= 0");
  GraphBuilder gb(1);
  std::vector<Vertex> level{0};
  for (int d = 0; d < i; ++d) {
    std::vector<Vertex> next;
    for (Vertex p : level) {
      Vertex first = gb.add_vertices(k);
      for (int c = 0; c < k; ++c) {
        gb.add_edge(p, first + c);
        next.push_back(first + c);
      }
    }
    level = std::move(next);
  }
  return RootedGadget{gb.build(), 0, std::nullopt, std::nullopt};
}

// Λ_i(T, Γ): U_{k,i} with k = Δ(T)·|V(Γ)|, where the children of every inner
// vertex carry Δ(T) disjoint copies of Γ. Witness coloring Φ_i: tree edges
// red, Γ edges blue.
inline RootedGadget lambda_gadget(const Graph& tree, const Graph& gamma, int i) {
  if (!is_tree(tree)) throw InvalidArgument("lambda_gadget: T is not a tree");
  if (gamma.order() < 1) throw InvalidArgument("lambda_gadget: Γ must have a vertex");
  if (i < 0) throw InvalidArgument("lambda_gadget: depth must be >= 0");
  const int d = tree.max_degree();
  const int k = d * gamma.order();
  if (k < 1) throw InvalidArgument("lambda_gadget: T needs an edge");
  RootedGadget skeleton = uniform_tree(k, i);
  GraphBuilder gb(skeleton.graph.order());
  std::vector<Edge> red = skeleton.graph.edges();
  for (const Edge& e : red) gb.add_edge(e.u, e.v);
  // breadth-first labels: the children of inner vertex p are 1 + p*k .. p*k + k
  const int inner = static_cast<int>((skeleton.graph.order() - 1) / k);
  std::vector<Edge> blue;
  for (Vertex p = 0; p < inner; ++p) {
    const Vertex first = 1 + p * k;
    for (int block = 0; block < d; ++block) {
      const Vertex base = first + block * gamma.order();
      for (const Edge& e : gamma.edges()) {
        gb.add_edge(base + e.u, base + e.v);
        blue.emplace_back(base + e.u, base + e.v);
      }
    }
  }
  Graph g = gb.build();
  EdgeColoring phi(g, Color::Red);
  for (const Edge& e : blue) phi.set(g.edge_id(e.u, e.v), Color::Blue);
  return RootedGadget{std::move(g), 0, std::nullopt, std::move(phi)};
}

// C(Γ′): root r = 0 and co-root r′ = 1, non-adjacent, both joined to every
// vertex of a copy of Γ′ on 2..|Γ′|+1. Witness: Γ′ edges blue, the rest red.
inline RootedGadget c_gadget(const Graph& gamma_prime) {
  if (gamma_prime.order() < 1) throw InvalidArgument("c_gadget: Γ′ must be nonempty");
  GraphBuilder gb(2);
  std::vector<Vertex> map = gb.add_disjoint_copy(gamma_prime);
  for (Vertex v : map) {
    gb.add_edge(0, v);
    gb.add_edge(1, v);
  }
  Graph g = gb.build();
  EdgeColoring phi(g, Color::Red);
  for (const Edge& e : gamma_prime.edges()) phi.set(g.edge_id(map[e.u], map[e.v]), Color::Blue);
  return RootedGadget{std::move(g), 0, Vertex{1}, std::move(phi)};
}

// ---- determiners ----------------------------------------------------------

struct DeterminerGadget {
  Graph graph;
  Edge beta;

  DeterminerGadget(Graph g, Edge b) : graph(std::move(g)), beta(b) {
    if (!graph.edge_index(beta.u, beta.v)) throw InvalidArgument("determiner: β is not an edge of the gadget");
  }
};

// A copy T_0 of `tree` on 0..|T|-1; each tree edge (in edge-id order) gets a
// fresh copy of the determiner glued along β, β.u ↦ the smaller endpoint.
inline Graph determiner_chain(const Graph& tree, const DeterminerGadget& det) {
  if (!is_tree(tree) || tree.size() < 1) throw InvalidArgument("determiner_chain: needs a tree with an edge");
  GraphBuilder gb(tree.order());
  for (const Edge& e : tree.edges()) gb.add_edge(e.u, e.v);
  const Graph& d = det.graph;
  const EdgeId beta_id = d.edge_id(det.beta.u, det.beta.v);
  for (const Edge& e : tree.edges()) {
    std::vector<Vertex> map(d.order(), -1);
    map[det.beta.u] = e.u;
    map[det.beta.v] = e.v;
    for (Vertex x = 0; x < d.order(); ++x)
      if (map[x] < 0) map[x] = gb.add_vertices(1);
    for (EdgeId id = 0; id < d.size(); ++id) {
      if (id == beta_id) continue;
      gb.add_edge(map[d.edge(id).u], map[d.edge(id).v]);
    }
  }
  return gb.build();
}

}  // namespace ramseylab
