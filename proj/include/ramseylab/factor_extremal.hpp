#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factors.hpp"
#include "graph.hpp"

namespace ramseylab {

struct ConstructionTrace {
  int p = 0, q = 0, r = 0, t = 0;
  bool odd_case = true;
  // "G", "G_q", "H", "H_q"
  std::vector<std::pair<std::string, Graph>> stage_graphs;
  std::vector<Edge> M_G;  // in G's labels
  std::vector<Edge> M_q;  // M_G ∩ E(G_q)
  // Q_{i,j} vertex blocks of G, ordered by i then j
  std::vector<std::vector<Vertex>> blocks;
  Vertex u = -1;  // the added vertex of H
  // the rest is in F's labels
  std::vector<Vertex> D;
  std::vector<std::vector<Vertex>> U;
  std::vector<Vertex> h_offsets;  // first vertex of each copy H^i
  std::vector<EdgeId> q_factor;

  const Graph& stage(const std::string& name) const {
    for (const auto& [n, g] : stage_graphs)
      if (n == name) return g;
    throw InvalidArgument("ConstructionTrace: no stage " + name);
  }
};

// An r-regular graph with a q-factor and no p-factor (p, q odd, p < q, q <= r
// for odd r and q <= r/2 for even r).
//
// Labels: D first, then the copies H^1, H^2, ... in order. Inside H the G
// vertices come block by block (Q_{1,1}, Q_{1,2}, ..., Q_{2,1}, ...) and u is
// last.
//
// For even r with r = 2q the hub would be a single vertex wired to U_1 twice,
// which is not a simple graph. There D is two non-adjacent vertices over
// U_1, U_2, each joined to U_1 ∪ U_2.
inline std::tuple<Graph, ConstructionTrace, BelckCertificate> factor_extremal_graph(int p, int q, int r) {
  if (p < 1 || p % 2 == 0 || q % 2 == 0) throw InvalidArgument("factor_extremal_graph: p and q must be odd and positive");
  if (p >= q) throw InvalidArgument("factor_extremal_graph: requires p < q");
  if (r % 2 == 1 && q > r) throw InvalidArgument("factor_extremal_graph: odd r requires q <= r");
  if (r % 2 == 0 && 2 * q > r) throw InvalidArgument("factor_extremal_graph: even r requires q <= r/2");

  ConstructionTrace tr;
  tr.p = p;
  tr.q = q;
  tr.r = r;
  tr.odd_case = r % 2 == 1;

  // stage 1: G and G_q
  const int rows = r - q + 1;
  const int cols = 2 * r;
  auto block_start = [&](int i, int j) { return ((i - 1) * cols + (j - 1)) * (q + 1); };
  const int g_order = rows * cols * (q + 1);
  GraphBuilder gb(g_order), gqb(g_order);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      std::vector<Vertex> blk(q + 1);
      for (int x = 0; x <= q; ++x) blk[x] = block_start(i, j) + x;
      gb.add_clique(blk);
      gqb.add_clique(blk);
      tr.blocks.push_back(std::move(blk));
    }
  }
  for (int j = 1; j <= cols; ++j)
    for (int i1 = 1; i1 <= rows; ++i1)
      for (int i2 = i1 + 1; i2 <= rows; ++i2)
        for (int x = 0; x <= q; ++x) gb.add_edge(block_start(i1, j) + x, block_start(i2, j) + x);
  Graph G = gb.build();
  Graph Gq = gqb.build();

  for (int x = 0; x + 1 < q; x += 2) tr.M_G.emplace_back(block_start(1, 1) + x, block_start(1, 1) + x + 1);
  tr.M_q = tr.M_G;
  for (int j = 2; j <= (r - q + 2) / 2; ++j) tr.M_G.emplace_back(block_start(1, j), block_start(2, j));
  if (static_cast<int>(tr.M_G.size()) != (r - 1) / 2)
    throw InvariantViolation("factor_extremal_graph: M_G has the wrong size");

  // stage 2: H and H_q
  tr.u = g_order;
  auto splice = [&](const Graph& base, const std::vector<Edge>& matching) {
    GraphBuilder b(g_order + 1);
    for (const Edge& e : base.edges()) {
      bool replaced = false;
      for (const Edge& m : matching) replaced |= (m.u == e.u && m.v == e.v);
      if (!replaced) b.add_edge(e.u, e.v);
    }
    for (const Edge& m : matching) {
      b.add_edge(tr.u, m.u);
      b.add_edge(tr.u, m.v);
    }
    return b.build();
  };
  Graph H = splice(G, tr.M_G);
  Graph Hq = splice(Gq, tr.M_q);
  tr.stage_graphs = {{"G", G}, {"G_q", Gq}, {"H", H}, {"H_q", Hq}};

  // stage 3: F
  int t = tr.odd_case ? r - q + 1 : r - 2 * q + 1;
  const bool split_hub = !tr.odd_case && t == 1;
  const int hubs = split_hub ? 2 : t;
  tr.t = t;
  const int copies = q * hubs;
  GraphBuilder fb(hubs);
  for (int j = 0; j < hubs; ++j) tr.D.push_back(j);
  if (!split_hub) fb.add_clique(tr.D);
  for (int i = 0; i < copies; ++i) tr.h_offsets.push_back(fb.add_disjoint_copy(H).front());
  tr.U.assign(hubs, {});
  for (int i = 0; i < copies; ++i) tr.U[i / q].push_back(tr.h_offsets[i] + tr.u);
  for (int j = 0; j < hubs; ++j) {
    for (Vertex x : tr.U[j]) fb.add_edge(tr.D[j], x);
    if (!tr.odd_case)
      for (Vertex x : tr.U[(j + 1) % hubs]) fb.add_edge(tr.D[j], x);
  }
  Graph F = fb.build();

  for (Vertex off : tr.h_offsets)
    for (const Edge& e : Hq.edges()) tr.q_factor.push_back(F.edge_id(off + e.u, off + e.v));
  for (int j = 0; j < hubs; ++j)
    for (Vertex x : tr.U[j]) tr.q_factor.push_back(F.edge_id(tr.D[j], x));
  std::sort(tr.q_factor.begin(), tr.q_factor.end());

  if (!F.is_regular(r)) throw InvariantViolation("factor_extremal_graph: F is not regular");
  if (!FactorWitness{q, tr.q_factor}.valid_for(F))
    throw InvariantViolation("factor_extremal_graph: traced q-factor is not a q-factor");
  auto cert = belck_check(F, tr.D, p);
  if (!cert) throw InvariantViolation("factor_extremal_graph: hub set is not a Belck certificate");
  return {std::move(F), std::move(tr), std::move(*cert)};
}

}  // namespace ramseylab
