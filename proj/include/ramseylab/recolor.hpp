#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
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

namespace ramseylab {

namespace detail {

inline std::vector<std::vector<Vertex>> blue_cliques(const Graph& f, const EdgeColoring& c, int t) {
  std::vector<std::vector<Vertex>> out;
  for_each_clique(f, t, [&](EdgeId id) { return c[id] == Color::Blue; }, [&](std::span<const Vertex> vs) {
    out.emplace_back(vs.begin(), vs.end());
    return true;
  });
  return out;
}

inline int max_red_degree(const Graph& f, const EdgeColoring& c) {
  int best = 0;
  for (Vertex v = 0; v < f.order(); ++v) {
    int d = 0;
    for (EdgeId id : f.incident_edges(v)) d += c[id] == Color::Red;
    best = std::max(best, d);
  }
  return best;
}

inline std::string edge_list(const Graph& f, const std::vector<EdgeId>& ids) {
  std::string s;
  for (EdgeId id : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(f.edge(id).u) + "-" + std::to_string(f.edge(id).v);
  }
  return s;
}

}  // namespace detail

// ---- alternating walk ------------------------------------------------------

struct WalkTrace {
  std::vector<EdgeId> edges;  // in walk order
  std::vector<Color> colors_before;
  EdgeId start_edge = -1;
};

// One switch along a greedy alternating walk. The seed is the lowest-index
// edge of a blue K_t; the walk is extended first from the seed's smaller
// endpoint, then from the other, always taking the lowest-index unused red
// edge and, on entering a new blue K_t, the lowest-index blue edge of that
// clique at the entry vertex. A direction stops when no unused red edge
// remains, or after a red edge that ends outside every blue K_t or in a
// blue K_t the walk already used.
inline std::pair<EdgeColoring, WalkTrace> alternating_walk_step(const Graph& f, const EdgeColoring& c, int s, int t) {
  c.require_host(f);
  if (s < 1 || t < 3) throw InvalidArgument("alternating_walk_step: needs s >= 1 and t >= 3");
  if (detail::max_red_degree(f, c) >= s) throw InvalidArgument("alternating_walk_step: input has a red K_{1,s}");
  const Graph ktk2 = clique_with_pendants(t, 1, 2);
  if (contains_copy(f, ktk2, [&](EdgeId id) { return c[id] == Color::Blue; }))
    throw InvalidArgument("alternating_walk_step: input has a blue K_t·K_2");
  auto cliques = detail::blue_cliques(f, c, t);
  if (cliques.empty()) throw InvalidArgument("alternating_walk_step: no blue K_t");

  std::vector<int> clique_of(f.order(), -1);
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
    for (Vertex v : cliques[i]) {
      if (clique_of[v] >= 0) throw InvariantViolation("alternating_walk_step: blue K_t copies overlap");
      clique_of[v] = i;
    }
  auto in_clique_edge = [&](EdgeId id) {
    const Edge& e = f.edge(id);
    return clique_of[e.u] >= 0 && clique_of[e.u] == clique_of[e.v] && c[id] == Color::Blue;
  };

  EdgeId seed = -1;
  for (EdgeId id = 0; id < f.size() && seed < 0; ++id)
    if (in_clique_edge(id)) seed = id;

  std::vector<bool> used(f.size(), false);
  std::vector<bool> clique_used(cliques.size(), false);
  used[seed] = true;
  clique_used[clique_of[f.edge(seed).u]] = true;

  auto extend = [&](Vertex p) {
    std::vector<EdgeId> path;
    for (;;) {
      EdgeId red = -1;
      for (EdgeId id : f.incident_edges(p))
        if (!used[id] && c[id] == Color::Red) {
          red = id;
          break;
        }
      if (red < 0) break;
      used[red] = true;
      path.push_back(red);
      Vertex q = f.edge(red).u == p ? f.edge(red).v : f.edge(red).u;
      const int k = clique_of[q];
      if (k < 0 || clique_used[k]) break;
      EdgeId blue = -1;
      for (EdgeId id : f.incident_edges(q))
        if (!used[id] && in_clique_edge(id) && clique_of[f.edge(id).u] == k) {
          blue = id;
          break;
        }
      if (blue < 0) throw InvariantViolation("alternating_walk_step: clique without a free blue edge");
      used[blue] = true;
      clique_used[k] = true;
      path.push_back(blue);
      p = f.edge(blue).u == q ? f.edge(blue).v : f.edge(blue).u;
    }
    return path;
  };
  std::vector<EdgeId> left = extend(f.edge(seed).u);
  std::vector<EdgeId> right = extend(f.edge(seed).v);

  WalkTrace tr;
  tr.start_edge = seed;
  tr.edges.assign(left.rbegin(), left.rend());
  tr.edges.push_back(seed);
  tr.edges.insert(tr.edges.end(), right.begin(), right.end());
  EdgeColoring out = c;
  for (EdgeId id : tr.edges) {
    tr.colors_before.push_back(c[id]);
    out.toggle(id);
  }

  std::vector<EdgeId> sorted = tr.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvariantViolation("alternating_walk_step: walk repeats an edge");
  std::vector<int> blue_per_clique(cliques.size(), 0);
  for (EdgeId id : tr.edges)
    if (c[id] == Color::Blue && ++blue_per_clique[clique_of[f.edge(id).u]] > 1)
      throw InvariantViolation("alternating_walk_step: two walk edges in one blue K_t");

  if (detail::max_red_degree(f, out) >= s)
    throw InvariantViolation("alternating_walk_step: switch created a red K_{1,s}");
  if (detail::blue_cliques(f, out, t).size() >= cliques.size())
    throw InvariantViolation("alternating_walk_step: blue K_t count did not drop");
  if (auto emb = contains_copy(f, ktk2, [&](EdgeId id) { return out[id] == Color::Blue; }))
    throw InvariantViolation("alternating_walk_step: switch created a blue K_t·K_2 on " +
                             detail::edge_list(f, emb->host_edges(f, ktk2)));
  return {std::move(out), std::move(tr)};
}

// Repeats the walk switch until no blue K_t is left. Every step removes at
// least one blue K_t.
inline EdgeColoring star_clique_recolor(const Graph& f, const EdgeColoring& c, int s, int t,
                                        std::vector<WalkTrace>* traces = nullptr) {
  c.require_host(f);
  EdgeColoring cur = c;
  std::size_t count = detail::blue_cliques(f, cur, t).size();
  const std::size_t initial = count;
  if (count == 0) {
    if (detail::max_red_degree(f, cur) >= s) throw InvalidArgument("star_clique_recolor: input has a red K_{1,s}");
    return cur;
  }
  std::size_t steps = 0;
  while (count > 0) {
    auto [next, tr] = alternating_walk_step(f, cur, s, t);
    std::size_t after = detail::blue_cliques(f, next, t).size();
    if (after >= count) throw InvariantViolation("star_clique_recolor: blue K_t count did not drop");
    if (++steps > initial) throw InvariantViolation("star_clique_recolor: more steps than initial blue K_t copies");
    if (traces) traces->push_back(std::move(tr));
    cur = std::move(next);
    count = after;
  }
  return cur;
}

// ---- woven certificates ----------------------------------------------------

struct WovenCertificate {
  Edge uv;
  std::vector<EdgeId> Y;  // host edge ids, sorted
  int k = 0;
  int at_u = 0, at_v = 0;
};

namespace detail {

inline bool pattern_free(const Graph& f, const Graph& p, const std::vector<bool>& removed) {
  return !contains_copy(f, p, [&](EdgeId id) { return !removed[id]; }).has_value();
}

}  // namespace detail

// Y_uv for a host f in which every copy of T uses uv. T must be a star with
// at least two edges (k = 1) or an s-suitable caterpillar (k = 2(s+1)²).
//
// Star: the lowest-index edge at u and at v other than uv.
// Caterpillar: if some copy has u (or v) as a leaf, all edges of f − uv at
// the other end, widened to both ends when that misses a copy; otherwise
// the edges from u and v to their neighbors of degree >= s+1 in f − uv.
inline WovenCertificate yuv_certificate(const Graph& f, Edge uv, const Graph& tree) {
  auto uv_id = f.edge_index(uv.u, uv.v);
  if (!uv_id) throw InvalidArgument("yuv_certificate: uv is not an edge of the host");
  const Vertex u = uv.u, v = uv.v;
  std::vector<bool> removed(f.size(), false);
  removed[*uv_id] = true;
  if (!detail::pattern_free(f, tree, removed))
    throw InvalidArgument("yuv_certificate: some copy of T avoids uv");

  WovenCertificate cert{uv, {}, 0};
  auto edges_at = [&](Vertex x) {
    std::vector<EdgeId> out;
    for (EdgeId id : f.incident_edges(x))
      if (id != *uv_id) out.push_back(id);
    return out;
  };

  if (is_star(tree) && tree.size() >= 2) {
    cert.k = 1;
    for (Vertex x : {u, v}) {
      auto at = edges_at(x);
      if (!at.empty()) cert.Y.push_back(at.front());
    }
  } else if (auto s = suitable_caterpillar_parameter(tree)) {
    cert.k = 2 * (*s + 1) * (*s + 1);
    auto leaf_copy_at = [&](Vertex leaf_end, Vertex other) {
      for (Vertex l = 0; l < tree.order(); ++l) {
        if (tree.degree(l) != 1) continue;
        SubgraphMatcher m(f, tree, {}, {{l, leaf_end}, {tree.neighbors(l).front(), other}});
        if (m.first()) return true;
      }
      return false;
    };
    auto hits_all = [&](const std::vector<EdgeId>& y) {
      std::vector<bool> gone(f.size(), false);
      for (EdgeId id : y) gone[id] = true;
      return detail::pattern_free(f, tree, gone);
    };
    std::optional<Vertex> leaf;
    if (leaf_copy_at(u, v)) leaf = u;
    else if (leaf_copy_at(v, u)) leaf = v;
    if (leaf) {
      const Vertex other = *leaf == u ? v : u;
      cert.Y = edges_at(other);
      if (!hits_all(cert.Y)) {
        cert.Y = edges_at(u);
        auto at_v = edges_at(v);
        cert.Y.insert(cert.Y.end(), at_v.begin(), at_v.end());
      }
    } else {
      Graph rest = f.without_edge(*uv_id);
      for (Vertex x : {u, v})
        for (EdgeId id : edges_at(x)) {
          Vertex w = f.edge(id).u == x ? f.edge(id).v : f.edge(id).u;
          if (rest.degree(w) >= *s + 1) cert.Y.push_back(id);
        }
    }
  } else {
    throw InvalidArgument("yuv_certificate: T must be a star with >= 2 edges or a suitable caterpillar");
  }

  std::sort(cert.Y.begin(), cert.Y.end());
  cert.Y.erase(std::unique(cert.Y.begin(), cert.Y.end()), cert.Y.end());
  for (EdgeId id : cert.Y) {
    if (id == *uv_id) throw InvariantViolation("yuv_certificate: Y contains uv");
    const Edge& e = f.edge(id);
    cert.at_u += (e.u == u || e.v == u);
    cert.at_v += (e.u == v || e.v == v);
  }
  if (cert.at_u > cert.k || cert.at_v > cert.k)
    throw InvariantViolation("yuv_certificate: Y exceeds the wovenness bound");
  std::vector<bool> gone(f.size(), false);
  for (EdgeId id : cert.Y) gone[id] = true;
  if (!detail::pattern_free(f, tree, gone)) throw InvariantViolation("yuv_certificate: Y misses a copy of T");
  return cert;
}

// ---- woven pipeline --------------------------------------------------------

struct RecolorTrace {
  std::vector<std::vector<Vertex>> family_B;  // lexicographic order
  std::vector<std::vector<Vertex>> U_K_sets;  // parallel to family_B
  std::vector<Edge> matching_M;
  std::vector<std::vector<EdgeId>> Y_sets;  // parallel to matching_M
  EdgeColoring phi1, phi2, phi3;
  int r = 0;  // r(G, K_{b−1})
};

// Smallest t the woven pipeline accepts.
inline int woven_t_bound(int k, int a, int b, int r) { return 4 * k + 2 * (r + (a - 1) * (b - 1)) + (a - 1); }

// Turns a (G, K_t·aK_b)-free coloring into a (G, K_t)-free one.
inline std::pair<EdgeColoring, RecolorTrace> woven_recolor(const Graph& f, const EdgeColoring& phi1, const Graph& g,
                                                           int k, int a, int b, int t) {
  phi1.require_host(f);
  if (a < 1 || b < 2 || k < 1) throw InvalidArgument("woven_recolor: needs k >= 1, a >= 1, b >= 2");
  if (!(is_star(g) && g.size() >= 2) && !suitable_caterpillar_parameter(g))
    throw InvalidArgument("woven_recolor: G must be a star with >= 2 edges or a suitable caterpillar");
  RecolorTrace tr;
  tr.r = ramsey_number(g, complete_graph(b - 1), 64);
  if (t < woven_t_bound(k, a, b, tr.r))
    throw InvalidArgument("woven_recolor: t = " + std::to_string(t) + " is below the bound " +
                          std::to_string(woven_t_bound(k, a, b, tr.r)));
  const Graph forbidden = clique_with_pendants(t, a, b);
  if (!coloring_is_free(f, phi1, g, forbidden)) throw InvalidArgument("woven_recolor: φ1 is not (G, K_t·aK_b)-free");
  tr.phi1 = phi1;

  auto is_blue1 = [&](EdgeId id) { return phi1[id] == Color::Blue; };
  const int threshold = tr.r + (a - 1) * (b - 1);
  auto blue = detail::blue_cliques(f, phi1, t);

  // maximal family with pairwise intersections below a
  for (const auto& K : blue) {
    bool ok = true;
    for (const auto& K2 : tr.family_B) {
      std::vector<Vertex> common;
      std::set_intersection(K.begin(), K.end(), K2.begin(), K2.end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) >= a) {
        ok = false;
        break;
      }
    }
    if (ok) tr.family_B.push_back(K);
  }

  for (const auto& K : tr.family_B) {
    std::vector<bool> in_k(f.order(), false);
    for (Vertex x : K) in_k[x] = true;
    std::vector<Vertex> uk;
    for (Vertex x : K) {
      std::vector<Vertex> nb;
      for (EdgeId id : f.incident_edges(x)) {
        Vertex w = f.edge(id).u == x ? f.edge(id).v : f.edge(id).u;
        if (!in_k[w] && is_blue1(id)) nb.push_back(w);
      }
      std::sort(nb.begin(), nb.end());
      if (static_cast<int>(nb.size()) >= threshold && clique_number(f.induced(nb)) >= threshold) uk.push_back(x);
    }
    if (static_cast<int>(uk.size()) > a - 1) throw InvariantViolation("woven_recolor: |U_K| > a−1");
    tr.U_K_sets.push_back(std::move(uk));
  }
  for (std::size_t i = 0; i < tr.family_B.size(); ++i)
    for (std::size_t j = i + 1; j < tr.family_B.size(); ++j) {
      const auto& K = tr.family_B[i];
      const auto& K2 = tr.family_B[j];
      std::vector<Vertex> common;
      std::set_intersection(K.begin(), K.end(), K2.begin(), K2.end(), std::back_inserter(common));
      for (Vertex x : common) {
        if (!std::count(tr.U_K_sets[i].begin(), tr.U_K_sets[i].end(), x) ||
            !std::count(tr.U_K_sets[j].begin(), tr.U_K_sets[j].end(), x))
          throw InvariantViolation("woven_recolor: clique intersection outside U_K ∩ U_K′");
      }
    }

  std::vector<EdgeId> m_ids;
  for (std::size_t i = 0; i < tr.family_B.size(); ++i) {
    std::vector<Vertex> rest;
    for (Vertex x : tr.family_B[i])
      if (!std::count(tr.U_K_sets[i].begin(), tr.U_K_sets[i].end(), x)) rest.push_back(x);
    for (std::size_t p = 0; p + 1 < rest.size(); p += 2) {
      tr.matching_M.emplace_back(rest[p], rest[p + 1]);
      m_ids.push_back(f.edge_id(rest[p], rest[p + 1]));
    }
  }
  std::vector<int> m_touch(f.order(), 0);
  for (const Edge& e : tr.matching_M)
    if (++m_touch[e.u] > 1 || ++m_touch[e.v] > 1) throw InvariantViolation("woven_recolor: M is not a matching");

  EdgeColoring phi2 = phi1;
  for (EdgeId id : m_ids) phi2.set(id, Color::Red);
  tr.phi2 = phi2;

  std::vector<bool> in_y(f.size(), false);
  for (std::size_t i = 0; i < m_ids.size(); ++i) {
    std::vector<bool> later_m(f.size(), false);
    for (std::size_t j = i + 1; j < m_ids.size(); ++j) later_m[m_ids[j]] = true;
    auto copies = copy_edge_sets_through(f, g, m_ids[i], [&](EdgeId id) {
      return phi2[id] == Color::Red && !in_y[id] && !later_m[id];
    });
    std::vector<Edge> fi_edges;
    std::vector<bool> in_fi(f.size(), false);
    for (const auto& cp : copies)
      for (EdgeId id : cp) in_fi[id] = true;
    for (EdgeId id = 0; id < f.size(); ++id)
      if (in_fi[id]) fi_edges.push_back(f.edge(id));
    std::vector<EdgeId> y;
    if (!copies.empty()) {
      Graph fi(f.order(), fi_edges);
      WovenCertificate cert = yuv_certificate(fi, f.edge(m_ids[i]), g);
      if (cert.at_u > k || cert.at_v > k) throw InvariantViolation("woven_recolor: certificate exceeds k");
      for (EdgeId id : cert.Y) y.push_back(f.edge_id(fi.edge(id).u, fi.edge(id).v));
    }
    for (EdgeId id : y) {
      if (phi2[id] != Color::Red) throw InvariantViolation("woven_recolor: Y_i edge is not red under φ2");
      if (std::count(m_ids.begin(), m_ids.end(), id)) throw InvariantViolation("woven_recolor: Y_i meets M");
      in_y[id] = true;
    }
    tr.Y_sets.push_back(std::move(y));
  }

  EdgeColoring phi3 = phi2;
  for (EdgeId id = 0; id < f.size(); ++id)
    if (in_y[id]) phi3.set(id, Color::Blue);
  tr.phi3 = phi3;

  if (auto emb = contains_copy(f, g, [&](EdgeId id) { return phi3[id] == Color::Red; }))
    throw InvariantViolation("woven_recolor: φ3 has a red copy of G on " + detail::edge_list(f, emb->host_edges(f, g)));
  auto left = detail::blue_cliques(f, phi3, t);
  if (!left.empty()) {
    std::string vs;
    for (Vertex x : left.front()) vs += (vs.empty() ? "" : " ") + std::to_string(x);
    throw InvariantViolation("woven_recolor: φ3 has a blue K_t on vertices " + vs);
  }
  return {std::move(phi3), std::move(tr)};
}

}  // namespace ramseylab
