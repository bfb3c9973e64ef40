// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ramseylab/ramseylab.hpp"

using namespace ramseylab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool run_criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

std::vector<std::uint64_t> masks_of(const std::vector<std::vector<EdgeId>>& sets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (EdgeId id : s) m |= std::uint64_t{1} << id;
    out.push_back(m);
  }
  return out;
}

EdgeColoring from_red_mask(const Graph& f, std::uint64_t red) {
  std::vector<Color> cs(f.size());
  for (EdgeId id = 0; id < f.size(); ++id) cs[id] = (red >> id & 1) ? Color::Red : Color::Blue;
  return EdgeColoring(cs);
}

Outcome chvatal() {
  std::vector<Graph> trees{Graph(1)};
  for (const Graph& g : connected_graphs_up_to_edges(4))
    if (is_tree(g)) trees.push_back(g);
  for (const Graph& t : trees) {
    const int want = 2 * (t.order() - 1) + 1;
    const int got = ramsey_number(t, complete_graph(3), 12);
    if (got != want) return {false, to_graph6(t) + " gave " + std::to_string(got) + ", want " + std::to_string(want)};
  }
  return {true, std::to_string(trees.size()) + " trees on <= 5 vertices match 2(|V(T)|-1)+1"};
}

Outcome odd_star_minimality() {
  const Graph k11 = star_graph(1), k13 = star_graph(3);
  if (!arrows(k13, k11, k13).arrows()) return {false, "K_{1,3} does not arrow"};
  if (!minimal_ramsey_check(k13, k11, k13)) return {false, "K_{1,3} is not minimal"};
  int minimal = 0, scanned = 0;
  for (const Graph& f : graphs_up_to(5)) {
    ++scanned;
    if (!minimal_ramsey_check(f, k11, k13)) continue;
    ++minimal;
    if (!is_isomorphic(f, k13)) return {false, "unexpected minimal graph " + to_graph6(f)};
  }
  if (minimal != 1) return {false, "found " + std::to_string(minimal) + " minimal graphs"};
  return {true, "K_{1,3} is the only minimal graph among " + std::to_string(scanned) + " graphs on <= 5 vertices"};
}

Outcome c5_distinguishes() {
  const Graph c5 = cycle_graph(5);
  auto a = arrows(c5, star_graph(2), star_graph(2));
  auto b = arrows(c5, star_graph(1), star_graph(3));
  if (!a.arrows()) return {false, "C_5 does not arrow (K_{1,2}, K_{1,2})"};
  if (!b.refuted() || !coloring_is_free(c5, *b.witness, star_graph(1), star_graph(3)))
    return {false, "no valid (K_{1,1}, K_{1,3})-free witness on C_5"};
  return {true, "C_5 -> (K_{1,2},K_{1,2}) and C_5 -/-> (K_{1,1},K_{1,3}), witness checked"};
}

Outcome factor_extremal() {
  auto [f, tr, cert] = factor_extremal_graph(1, 3, 3);
  if (f.order() != 76) return {false, "order " + std::to_string(f.order())};
  if (!f.is_regular(3)) return {false, "not 3-regular"};
  auto three = has_k_factor(f, 3);
  if (!three || !three->valid_for(f)) return {false, "no 3-factor"};
  if (has_k_factor(f, 1)) return {false, "a 1-factor exists"};
  auto c = belck_check(f, tr.D, 1);
  if (!c) return {false, "hub does not certify"};
  if (odd_components(f, c->D) != c->odd_component_count || !(static_cast<int>(c->D.size()) < c->odd_component_count))
    return {false, "certificate arithmetic is wrong"};
  std::ostringstream os;
  os << "76 vertices, 3-regular, 3-factor found, no 1-factor, |D| = " << c->D.size() << " < "
     << c->odd_component_count << " odd components";
  return {true, os.str()};
}

Outcome clique_pendant_equivalence() {
  const Graph s2 = star_graph(2), k3 = complete_graph(3), k3k2 = clique_with_pendants(3, 1, 2);
  auto scan = equivalence_scan(s2, k3, s2, k3k2, 6);
  if (scan.kind != ScanResult::Kind::NoDistinguisherFound) return {false, "scan reported a distinguisher"};
  if (!scan.indeterminate.empty()) return {false, "scan left hosts undecided"};

  std::vector<Graph> corpus = connected_graphs_up_to_edges(9);
  for (const Graph& g : graphs_up_to(6))
    if (g.size() <= 9) corpus.push_back(g);
  long long colorings = 0, with_blue_k3 = 0, steps = 0;
  for (const Graph& f : corpus) {
    const auto red_bad = masks_of(copy_edge_sets(f, s2));
    const auto blue_bad = masks_of(copy_edge_sets(f, k3k2));
    const std::uint64_t all = oracle::all_edges(f);
    for (std::uint64_t red = 0;; ++red) {
      bool free = true;
      for (auto m : red_bad) free = free && (m & red) != m;
      for (auto m : blue_bad) free = free && (m & ~red & all) != m;
      if (free) {
        ++colorings;
        EdgeColoring c = from_red_mask(f, red);
        std::vector<WalkTrace> traces;
        EdgeColoring out = star_clique_recolor(f, c, 2, 3, &traces);  // postconditions checked per step
        if (!coloring_is_free(f, out, s2, k3)) return {false, "not (K_{1,2},K_3)-free on " + to_graph6(f)};
        with_blue_k3 += !traces.empty();
        steps += traces.size();
      }
      if (red == all) break;
    }
  }
  std::ostringstream os;
  os << "scan of " << scan.graphs_checked << " graphs found no distinguisher; " << colorings << " free colorings of "
     << corpus.size() << " graphs recolored (" << with_blue_k3 << " needed walks, " << steps << " steps)";
  return {true, os.str()};
}

Outcome witness_colorings() {
  const Graph p4 = path_graph(4), k3 = complete_graph(3);
  auto d = diameter_distinguisher(p4, 3, distinguisher_defaults(p4, 3).gamma);
  if (d.graph.order() != 27) return {false, "distinguisher has " + std::to_string(d.graph.order()) + " vertices"};
  if (!coloring_is_free(d.graph, d.coloring, p4, clique_with_pendants(3, 1, 2)))
    return {false, "returned coloring is not (P_4, K_3·K_2)-free"};
  auto sampled = arrows_sampled(d.graph, p4, k3, 1'000'000, 1);
  if (sampled.witness) return {false, "sampling found a (P_4, K_3)-free coloring"};
  if (sampled.nodes_explored != 1'000'000) return {false, "sampler drew " + std::to_string(sampled.nodes_explored)};

  // Λ_1(P_4, P_4): every coloring has a red P_4, a blue K_3, or red degree >= 2 at the root
  auto lam = lambda_gadget(p4, p4, 1);
  const Graph& g = lam.graph;
  const auto red_p4 = oracle::copy_masks(g, p4);
  const auto blue_k3 = oracle::copy_masks(g, k3);
  std::uint64_t at_root = 0;
  for (EdgeId id = 0; id < g.size(); ++id)
    if (g.edge(id).touches(lam.root)) at_root |= std::uint64_t{1} << id;
  const std::uint64_t all = oracle::all_edges(g);
  for (std::uint64_t red = 0;; ++red) {
    bool ok = __builtin_popcountll(red & at_root) >= p4.max_degree();
    for (auto m : red_p4) ok = ok || (m & red) == m;
    for (auto m : blue_k3) ok = ok || (m & ~red & all) == m;
    if (!ok) return {false, "Λ_1 coloring with none of the three outcomes"};
    if (red == all) break;
  }
  std::ostringstream os;
  os << "27-vertex F with free coloring verified; 10^6 samples found no (P_4,K_3)-free coloring; all 2^"
     << g.size() << " colorings of Λ_1(P_4,P_4) checked";
  return {true, os.str()};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2024);
  std::vector<Graph> corpus;
  for (int i = 0; i < 500; ++i) corpus.push_back(oracle::random_sparse_graph(5 + i % 5, 16, rng));
  for (const Graph& g : graphs_up_to(5)) corpus.push_back(g);
  const std::vector<std::pair<Graph, Graph>> pairs{
      {star_graph(2), complete_graph(3)}, {path_graph(4), complete_graph(3)}, {complete_graph(3), complete_graph(3)}};
  int arrowing = 0, checked = 0;
  for (const auto& [g, h] : pairs)
    for (const Graph& f : corpus) {
      auto v = arrows(f, g, h);
      auto want = oracle::arrows(f, g, h);
      if (v.arrows() != want.arrows) return {false, "disagreement on " + to_graph6(f)};
      if (v.refuted() && !coloring_is_free(f, *v.witness, g, h)) return {false, "bad witness on " + to_graph6(f)};
      arrowing += want.arrows;
      ++checked;
    }
  return {true, std::to_string(checked) + " instances agree (" + std::to_string(arrowing) + " arrowing)"};
}

// Random host in which every copy of `tree` uses uv: a planted copy through
// uv plus random edges, then one non-planted edge deleted from each stray
// copy. A stray copy avoids uv, so it always has an edge outside the planted
// copy, and the planted copy survives.
std::pair<Graph, Edge> forced_host(const Graph& tree, int n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> planted, es;
  for (const Edge& e : tree.edges()) planted.insert(Edge(perm[e.u], perm[e.v]));
  es = planted;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.insert(Edge(u, v));
  const Edge& pick = tree.edge(static_cast<EdgeId>(rng() % tree.size()));
  const Edge uv(perm[pick.u], perm[pick.v]);
  Graph f(n, std::vector<Edge>(es.begin(), es.end()));
  for (;;) {
    const EdgeId id = f.edge_id(uv.u, uv.v);
    auto emb = contains_copy(f, tree, [&](EdgeId e) { return e != id; });
    if (!emb) return {f, uv};
    std::vector<EdgeId> loose;
    for (EdgeId e : emb->host_edges(f, tree))
      if (!planted.count(f.edge(e))) loose.push_back(e);
    f = f.without_edge(loose.at(rng() % loose.size()));
  }
}

Outcome woven_certificates() {
  struct Case {
    Graph tree;
    int k;
    int n;
  };
  const std::vector<Case> cases{{star_graph(2), 1, 9},
                                {star_graph(3), 1, 9},
                                {suitable_caterpillar(1, 0), 2 * 2 * 2, 9},
                                {suitable_caterpillar(2, 0), 2 * 3 * 3, 10},
                                {suitable_caterpillar(2, 1), 2 * 3 * 3, 10}};
  std::mt19937_64 rng(77);
  int hosts = 0, copies_total = 0, max_side = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const Case& c = cases[rep % cases.size()];
    auto [f, uv] = forced_host(c.tree, c.n, 0.3, rng);
    auto cert = yuv_certificate(f, uv, c.tree);
    if (cert.k != c.k) return {false, "k = " + std::to_string(cert.k) + " on " + to_graph6(f)};
    int at_u = 0, at_v = 0;
    std::uint64_t y = 0;
    for (EdgeId id : cert.Y) {
      const Edge& e = f.edge(id);
      if (e == uv) return {false, "Y contains uv"};
      if (!e.touches(uv.u) && !e.touches(uv.v)) return {false, "Y edge not at u or v"};
      at_u += e.touches(uv.u);
      at_v += e.touches(uv.v);
      y |= std::uint64_t{1} << id;
    }
    if (at_u > c.k || at_v > c.k) return {false, "size bound exceeded on " + to_graph6(f)};
    max_side = std::max({max_side, at_u, at_v});
    auto copies = oracle::copy_masks(f, c.tree);
    if (copies.empty()) return {false, "planted copy lost on " + to_graph6(f)};
    for (auto m : copies)
      if ((m & y) == 0) return {false, "a copy avoids Y on " + to_graph6(f)};
    copies_total += copies.size();
    ++hosts;
  }
  std::ostringstream os;
  os << hosts << " hosts, " << copies_total << " copies hit, largest side of Y = " << max_side;
  return {true, os.str()};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "Chvatal numbers for small trees", 300, chvatal);
  ok &= run_criterion(2, "odd-star minimality", 600, odd_star_minimality);
  ok &= run_criterion(3, "C_5 separates {2,2} from {1,3}", 60, c5_distinguishes);
  ok &= run_criterion(4, "factor-extremal graph (1,3,3)", 10, factor_extremal);
  ok &= run_criterion(5, "K_3 versus K_3·K_2 with K_{1,2}", 1800, clique_pendant_equivalence);
  ok &= run_criterion(6, "distinguisher witness colorings", 1800, witness_colorings);
  ok &= run_criterion(7, "pruned arrowing against brute force", 1200, oracle_equivalence);
  ok &= run_criterion(8, "woven certificates", 300, woven_certificates);
  return ok ? 0 : 1;
}
