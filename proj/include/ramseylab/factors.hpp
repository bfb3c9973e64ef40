#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace ramseylab {

// Spanning k-regular subgraph, as host edge ids.
struct FactorWitness {
  int k = 0;
  std::vector<EdgeId> edges;

  bool valid_for(const Graph& host) const {
    std::vector<int> deg(host.order(), 0);
    std::vector<EdgeId> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (EdgeId id : edges) {
      if (id < 0 || id >= host.size()) return false;
      ++deg[host.edge(id).u];
      ++deg[host.edge(id).v];
    }
    return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k; });
  }
};

// A vertex set D with p|D| < q(D), q(D) the number of odd-order components
// of host − D. Its existence rules out a p-factor (p odd).
struct BelckCertificate {
  int p = 1;
  std::vector<Vertex> D;
  int odd_component_count = 0;
};

// Number of odd-order components of g − D.
inline int odd_components(const Graph& g, const std::vector<Vertex>& D) {
  std::vector<bool> removed(g.order(), false);
  for (Vertex d : D) removed.at(d) = true;
  int q = 0;
  for (const auto& comp : connected_components(g, removed)) q += comp.size() % 2;
  return q;
}

// k-factor search by reduction to perfect matching.
//
// Gadget: every edge e = uv becomes two vertices e_u, e_v joined by an edge.
// Every vertex v with degree d(v) >= k gets d(v) − k inner vertices, each
// joined to all e_v for edges e at v. In a perfect matching the inner
// vertices absorb d(v) − k of the e_v, so exactly k of the e_u–e_v edges at v
// are matched; those edges form the k-factor.
inline std::optional<FactorWitness> has_k_factor(const Graph& g, int k) {
  if (k < 0) throw InvalidArgument("has_k_factor: k must be nonnegative");
  if (k == 0) return FactorWitness{0, {}};
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) return std::nullopt;
  if ((static_cast<long long>(g.order()) * k) % 2 != 0) return std::nullopt;

  const int m = g.size();
  GraphBuilder gb(2 * m);
  // e_u = 2*id, e_v = 2*id + 1 for edge id = {u < v}
  auto end_at = [&](EdgeId id, Vertex v) { return 2 * id + (g.edge(id).u == v ? 0 : 1); };
  for (EdgeId id = 0; id < m; ++id) gb.add_edge(2 * id, 2 * id + 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    const int extra = g.degree(v) - k;
    Vertex first = gb.add_vertices(extra);
    for (int i = 0; i < extra; ++i)
      for (EdgeId id : g.incident_edges(v)) gb.add_edge(first + i, end_at(id, v));
  }
  Graph gadget = gb.build();
  BlossomMatching mm(gadget);
  if (!mm.perfect()) return std::nullopt;

  FactorWitness w{k, {}};
  for (EdgeId id = 0; id < m; ++id)
    if (mm.mate()[2 * id] == 2 * id + 1) w.edges.push_back(id);
  if (!w.valid_for(g)) throw InvariantViolation("has_k_factor: matching did not decode to a k-factor");
  return w;
}

inline std::optional<BelckCertificate> belck_check(const Graph& g, const std::vector<Vertex>& D, int p) {
  if (p < 1 || p % 2 == 0) throw InvalidArgument("belck_check: p must be an odd positive integer");
  std::vector<bool> in_d(g.order(), false);
  for (Vertex d : D) {
    if (d < 0 || d >= g.order()) throw InvalidArgument("belck_check: vertex " + std::to_string(d) + " not in graph");
    if (in_d[d]) throw InvalidArgument("belck_check: vertex " + std::to_string(d) + " repeated in D");
    in_d[d] = true;
  }
  int q = odd_components(g, D);
  if (static_cast<long long>(p) * static_cast<long long>(D.size()) < q) {
    std::vector<Vertex> sorted = D;
    std::sort(sorted.begin(), sorted.end());
    return BelckCertificate{p, sorted, q};
  }
  return std::nullopt;
}

// Best-effort certificate search: every D with |D| <= max_exhaustive (while
// the subset count stays under a cap), then greedy growth from the empty set
// by the vertex that most increases q(D) − p|D|. Not complete.
inline std::optional<BelckCertificate> find_belck(const Graph& g, int p, int max_exhaustive = 3) {
  const int n = g.order();
  std::vector<Vertex> D;
  std::optional<BelckCertificate> found;
  long long budget = 2'000'000;
  std::function<bool(Vertex, int)> rec = [&](Vertex from, int left) -> bool {
    if (--budget < 0) return true;
    if ((found = belck_check(g, D, p))) return true;
    if (left == 0) return false;
    for (Vertex v = from; v < n; ++v) {
      D.push_back(v);
      bool stop = rec(v + 1, left - 1);
      D.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(0, max_exhaustive);
  if (found) return found;

  D.clear();
  std::vector<bool> in_d(n, false);
  for (int round = 0; round < n; ++round) {
    Vertex best = -1;
    long long best_score = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in_d[v]) continue;
      D.push_back(v);
      long long score = odd_components(g, D) - static_cast<long long>(p) * static_cast<long long>(D.size());
      D.pop_back();
      if (best < 0 || score > best_score) {
        best = v;
        best_score = score;
      }
    }
    if (best < 0) break;
    D.push_back(best);
    in_d[best] = true;
    if ((found = belck_check(g, D, p))) return found;
  }
  return std::nullopt;
}

// For an (a+b−2)-regular f: f → (K_{1,a}, K_{1,b}) iff E(f) does not split
// into an (a−1)-factor and a (b−1)-factor, i.e. iff f has no (a−1)-factor.
inline bool star_pair_regular_arrows(const Graph& f, int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("star_pair_regular_arrows: a, b must be >= 1");
  if (!f.is_regular(a + b - 2)) {
    throw InvalidArgument("star_pair_regular_arrows: host is not " + std::to_string(a + b - 2) + "-regular");
  }
  return !has_k_factor(f, a - 1).has_value();
}

}  // namespace ramseylab
