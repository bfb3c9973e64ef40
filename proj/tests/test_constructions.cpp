#include <gtest/gtest.h>

#include <climits>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ramseylab/ramseylab.hpp"

using namespace ramseylab;

namespace {

struct Params {
  int p, q, r;
};

std::vector<Params> valid_params(int max_r) {
  std::vector<Params> out;
  for (int r = 3; r <= max_r; ++r)
    for (int q = 3; q <= r; q += 2)
      for (int p = 1; p < q; p += 2) {
        if (r % 2 == 0 && 2 * q > r) continue;
        out.push_back({p, q, r});
      }
  return out;
}

bool is_matching_in(const Graph& g, const std::vector<Edge>& m) {
  std::set<Vertex> seen;
  for (const Edge& e : m) {
    if (!g.adjacent(e.u, e.v)) return false;
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return true;
}

// Shortest cycle e_1,v_1,...,e_s,v_s with distinct hyperedges and distinct
// vertices, v_j in e_j ∩ e_{j+1} (indices mod s); INT_MAX if none has length
// <= limit.
int naive_girth(const Hypergraph& h, int limit) {
  const int m = static_cast<int>(h.hyperedges.size());
  auto in = [&](int e, Vertex v) { return std::binary_search(h.hyperedges[e].begin(), h.hyperedges[e].end(), v); };
  int best = INT_MAX;
  std::vector<int> es;
  std::vector<Vertex> vs;
  std::function<void()> rec = [&]() {
    const int s = static_cast<int>(es.size());
    // try to close: v_s in e_s ∩ e_1
    if (s >= 2) {
      for (Vertex v : h.hyperedges[es.back()])
        if (in(es.front(), v) && std::find(vs.begin(), vs.end(), v) == vs.end()) best = std::min(best, s);
    }
    if (s >= limit || s + 1 >= best) return;
    for (Vertex v : h.hyperedges[es.back()]) {
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
      for (int e = es.front() + 1; e < m; ++e) {
        if (std::find(es.begin(), es.end(), e) != es.end() || !in(e, v)) continue;
        es.push_back(e);
        vs.push_back(v);
        rec();
        es.pop_back();
        vs.pop_back();
      }
    }
  };
  // the first hyperedge of a cycle is taken to be its smallest index
  for (int e = 0; e < m; ++e) {
    es = {e};
    vs.clear();
    rec();
  }
  return best;
}

}  // namespace

TEST(FactorExtremal, SmallestInstance) {
  auto [f, tr, cert] = factor_extremal_graph(1, 3, 3);
  EXPECT_EQ(f.order(), 76);
  EXPECT_TRUE(f.is_regular(3));
  EXPECT_EQ(tr.stage("H").order(), 25);
  EXPECT_EQ(tr.h_offsets.size(), 3u);
  EXPECT_EQ(cert.D.size(), 1u);
  EXPECT_EQ(cert.odd_component_count, 3);
  EXPECT_TRUE(has_k_factor(f, 3));
  EXPECT_FALSE(has_k_factor(f, 1));
  EXPECT_EQ(BlossomMatching(f).size() * 2 < f.order(), true);
  EXPECT_THROW(factor_extremal_graph(3, 3, 3), InvalidArgument);
  EXPECT_THROW(factor_extremal_graph(1, 2, 3), InvalidArgument);
  EXPECT_THROW(factor_extremal_graph(1, 5, 3), InvalidArgument);
  EXPECT_THROW(factor_extremal_graph(1, 3, 4), InvalidArgument);
}

TEST(FactorExtremal, AllValidParametersUpToSeven) {
  auto params = valid_params(7);
  ASSERT_EQ(params.size(), 11u);
  for (auto [p, q, r] : params) {
    SCOPED_TRACE(::testing::Message() << "p=" << p << " q=" << q << " r=" << r);
    auto [f, tr, cert] = factor_extremal_graph(p, q, r);
    ASSERT_TRUE(f.is_regular(r));
    // stage graphs
    const Graph& g = tr.stage("G");
    ASSERT_TRUE(g.is_regular(r));
    ASSERT_EQ(static_cast<int>(tr.blocks.size()), 2 * r * (r - q + 1));
    for (const auto& blk : tr.blocks) ASSERT_TRUE(is_complete(g.induced(blk)));
    ASSERT_TRUE(is_matching_in(g, tr.M_G));
    ASSERT_EQ(static_cast<int>(tr.M_G.size()), (r - 1) / 2);
    ASSERT_TRUE(is_matching_in(tr.stage("G_q"), tr.M_q));
    ASSERT_TRUE(tr.stage("G_q").is_regular(q));
    const Graph& h = tr.stage("H");
    ASSERT_EQ(h.degree(tr.u), 2 * static_cast<int>(tr.M_G.size()));
    // q-factor from the trace
    std::vector<int> deg(f.order(), 0);
    for (EdgeId id : tr.q_factor) {
      ++deg[f.edge(id).u];
      ++deg[f.edge(id).v];
    }
    ASSERT_TRUE(std::all_of(deg.begin(), deg.end(), [&](int d) { return d == q; }));
    // Belck certificate, recounted independently
    std::vector<bool> removed(f.order(), false);
    for (Vertex d : cert.D) removed[d] = true;
    int odd = 0;
    for (const auto& comp : connected_components(f, removed)) odd += comp.size() % 2;
    ASSERT_EQ(odd, cert.odd_component_count);
    ASSERT_LT(p * static_cast<int>(cert.D.size()), odd);
    ASSERT_FALSE(has_k_factor(f, p));
    // hubs are joined only to the u copies
    for (Vertex d : tr.D)
      for (Vertex w : f.neighbors(d))
        ASSERT_TRUE(std::count(tr.D.begin(), tr.D.end(), w) ||
                    std::any_of(tr.U.begin(), tr.U.end(),
                                [&](const auto& part) { return std::count(part.begin(), part.end(), w) > 0; }));
  }
}

TEST(FactorExtremal, IsDeterministic) {
  auto a = std::get<0>(factor_extremal_graph(1, 3, 5));
  auto b = std::get<0>(factor_extremal_graph(1, 3, 5));
  EXPECT_EQ(to_graph6(a), to_graph6(b));
}

TEST(Hypergraph, GirthAgreesWithCycleEnumeration) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 6 + rep % 5, t = 3, m = 2 + rep % 5;
    std::vector<std::vector<Vertex>> es;
    for (int i = 0; i < m; ++i) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(t);
      es.push_back(all);
    }
    Hypergraph h(n, es);
    const int got = hypergraph_girth(h);
    const int want = naive_girth(h, m);
    ASSERT_EQ(got, want) << rep;
  }
}

TEST(Hypergraph, Examples) {
  Hypergraph disjoint(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  EXPECT_EQ(hypergraph_girth(disjoint), INT_MAX);
  Graph f = hypergraph_blowup_graph(disjoint);
  EXPECT_EQ(f.size(), 9);
  EXPECT_EQ(connected_components(f).size(), 3u);
  Hypergraph two(4, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(hypergraph_girth(two), 2);
  Hypergraph tri(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  EXPECT_EQ(hypergraph_girth(tri), 3);
  EXPECT_THROW(Hypergraph(4, {{0, 1, 2}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(Hypergraph(3, {{0, 1, 3}}), InvalidArgument);
}

TEST(Hypergraph, BlowupSearch) {
  auto [h, f] = hypergraph_blowup(3, 3, 1, 9, 1000, 1);
  EXPECT_GE(h.min_degree(), 1);
  EXPECT_GT(hypergraph_girth(h), 3);

  auto [h2, f2] = hypergraph_blowup(3, 3, 2, 15, 100000, 7);
  EXPECT_GE(h2.min_degree(), 2);
  EXPECT_EQ(naive_girth(h2, 3), INT_MAX);
  EXPECT_GT(hypergraph_girth(h2), 3);
  // girth >= 3 means two triangles of the blow-up share at most a vertex
  EXPECT_EQ(f2.size(), 3 * static_cast<int>(h2.hyperedges.size()));
  EXPECT_EQ(clique_number(f2), 3);

  auto [h3, f3] = hypergraph_blowup(3, 3, 2, 15, 100000, 7);
  EXPECT_EQ(h3.hyperedges, h2.hyperedges);
  EXPECT_THROW(hypergraph_blowup(3, 3, 5, 6, 200, 1), HypergraphSearchFailed);
  EXPECT_THROW(hypergraph_blowup(2, 3, 1, 6, 10, 1), InvalidArgument);
}

TEST(Distinguisher, OddDiameterP4) {
  auto res = diameter_distinguisher(path_graph(4), 3, path_graph(4));
  EXPECT_EQ(res.graph.order(), 27);
  EXPECT_EQ(res.graph.size(), 45);
  EXPECT_TRUE(res.odd_diameter);
  EXPECT_EQ(res.r, 1);
  EXPECT_TRUE(coloring_is_free(res.graph, res.coloring, path_graph(4), clique_with_pendants(3, 1, 2)));
  // K_3 on the clique vertices is blue
  for (Vertex u : res.clique)
    for (Vertex v : res.clique)
      if (u < v) { EXPECT_EQ(res.coloring[res.graph.edge_id(u, v)], Color::Blue); }
  auto def = distinguisher_defaults(path_graph(4), 3);
  EXPECT_EQ(def.gamma, path_graph(4));
  EXPECT_EQ(def.j, cycle_graph(5));
}

TEST(Distinguisher, OtherOddTrees) {
  const Graph double_star(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  for (const Graph& tree : {double_star, path_graph(6)}) {
    auto prof = tree_classify(tree);
    ASSERT_TRUE(prof.in_Tprime);
    ASSERT_EQ(prof.diameter % 2, 1);
    auto res = diameter_distinguisher(tree, 3, tree);
    EXPECT_TRUE(coloring_is_free(res.graph, res.coloring, tree, clique_with_pendants(3, 1, 2)));
    EXPECT_EQ(clique_number(res.graph), 3);
  }
}

TEST(Distinguisher, Rejections) {
  EXPECT_THROW(diameter_distinguisher(path_graph(5), 3, path_graph(5)), InvalidArgument);
  EXPECT_THROW(diameter_distinguisher(path_graph(4), 3, complete_graph(3)), InvalidArgument);
  // Γ = K_2 does not arrow (P_4, K_2): color its edge red
  EXPECT_THROW(diameter_distinguisher(path_graph(4), 3, complete_graph(2)), InvalidArgument);
  EXPECT_THROW(diameter_distinguisher(path_graph(4), 2, path_graph(4)), InvalidArgument);
}

TEST(Distinguisher, EvenDiameterNeedsValidInputs) {
  GraphBuilder gb(1);
  for (int l = 0; l < 3; ++l) {
    Vertex a = gb.add_vertices(1), b = gb.add_vertices(1);
    gb.add_edge(0, a);
    gb.add_edge(a, b);
  }
  Graph spider = gb.build();
  ASSERT_TRUE(tree_classify(spider).in_Tprime);
  EXPECT_THROW(diameter_distinguisher(spider, 3, spider), InvalidArgument);
  // Γ′ = C_5 cannot force a blue C_5 against a red spider
  EXPECT_THROW(diameter_distinguisher(spider, 3, spider, cycle_graph(5)), InvalidArgument);
  EXPECT_THROW(diameter_distinguisher(spider, 3, spider, complete_graph(3)), InvalidArgument);
  EXPECT_THROW(diameter_distinguisher(spider, 3, spider, cycle_graph(5), cycle_graph(4)), InvalidArgument);
}

TEST(Folkman, VertexProperty) {
  EXPECT_TRUE(folkman_vertex_property(cycle_graph(5), 3));
  EXPECT_FALSE(folkman_vertex_property(cycle_graph(4), 3));
  EXPECT_FALSE(folkman_vertex_property(complete_graph(3), 3));
  EXPECT_TRUE(folkman_vertex_property(cycle_graph(7), 3));
  EXPECT_THROW(folkman_vertex_property(cycle_graph(21), 3), InvalidArgument);
  // oracle: vertex 2-colorings with a monochromatic edge, over all graphs on <= 6 vertices
  for (const Graph& j : graphs_up_to(6)) {
    bool want = clique_number(j) < 3 && chromatic_number(j) > 2;
    ASSERT_EQ(folkman_vertex_property(j, 3), want) << to_graph6(j);
  }
}

namespace {

struct NaiveDeterminer {
  bool not_ramsey = false, beta_forced = true, well_behaved = false;
};

NaiveDeterminer naive_determiner(const Graph& d, Edge beta, const Graph& tree, int t) {
  const auto red_copies = oracle::copy_masks(d, tree);
  const auto blue_copies = oracle::copy_masks(d, complete_graph(t));
  const EdgeId b = d.edge_id(beta.u, beta.v);
  std::uint64_t around = 0;
  for (Vertex end : {beta.u, beta.v})
    for (EdgeId id : d.incident_edges(end))
      if (id != b) around |= std::uint64_t{1} << id;
  NaiveDeterminer out;
  const std::uint64_t all = oracle::all_edges(d);
  for (std::uint64_t red = 0;; ++red) {
    bool free = true;
    for (auto m : red_copies) free = free && (m & red) != m;
    for (auto m : blue_copies) free = free && (m & ~red & all) != m;
    if (free) {
      out.not_ramsey = true;
      if (!(red >> b & 1)) out.beta_forced = false;
      if ((red & around) == 0) out.well_behaved = true;
    }
    if (red == all) break;
  }
  return out;
}

}  // namespace

TEST(Determiner, VerifyAgreesWithEnumeration) {
  auto rep = verify_determiner(complete_graph(3), Edge(0, 1), path_graph(3), 3);
  ASSERT_TRUE(rep.not_ramsey && rep.beta_forced && rep.well_behaved);
  EXPECT_TRUE(*rep.not_ramsey);
  EXPECT_FALSE(*rep.beta_forced);
  EXPECT_TRUE(*rep.well_behaved);
  EXPECT_TRUE(rep.clique_closure);
  EXPECT_FALSE(rep.all_hold());
  EXPECT_THROW(verify_determiner(complete_graph(3), Edge(0, 3), path_graph(3), 3), InvalidArgument);

  std::mt19937_64 rng(71);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Graph d = oracle::random_sparse_graph(6, 12, rng);
    if (d.size() == 0) continue;
    Edge beta = d.edge(static_cast<EdgeId>(rng() % d.size()));
    for (const Graph& tree : {path_graph(3), path_graph(4)}) {
      auto got = verify_determiner(d, beta, tree, 3);
      auto want = naive_determiner(d, beta, tree, 3);
      ASSERT_EQ(*got.not_ramsey, want.not_ramsey) << to_graph6(d);
      ASSERT_EQ(*got.beta_forced, want.beta_forced) << to_graph6(d);
      ASSERT_EQ(*got.well_behaved, want.well_behaved) << to_graph6(d);
      if (got.well_behaved_witness) {
        ASSERT_TRUE(coloring_is_free(d, *got.well_behaved_witness, tree, complete_graph(3)));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}
