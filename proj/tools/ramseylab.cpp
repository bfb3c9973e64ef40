// ramseylab command line: every subcommand prints one JSON report on stdout.
//
// Exit codes: 0 ok, 2 usage, 3 indeterminate (budget/cap/search exhausted),
// 4 internal invariant violation, 5 malformed input text, 6 coloring or
// certificate does not fit the graph.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseylab/ramseylab.hpp"

namespace rl = ramseylab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitParse = 5;
constexpr int kExitMismatch = 6;

constexpr int kInlineWitnessCap = 62;

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rl::InvalidArgument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

struct Context {
  std::string command;
  json inputs = json::object();
  std::optional<std::uint64_t> seed;
  long long nodes = 0;
  std::string witness_out = "ramseylab-witness.txt";
};

// A graph argument is a path to a graph6 file, or else graph6 text itself.
rl::Graph load_graph(Context& ctx, const std::string& name, const std::string& arg) {
  std::string text;
  if (std::filesystem::is_regular_file(arg)) {
    text = trim(slurp(arg));
    if (auto nl = text.find('\n'); nl != std::string::npos) text = trim(text.substr(0, nl));
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  } else {
    text = arg;
  }
  rl::Graph g = rl::from_graph6(text);
  ctx.inputs[name] = {{"graph6", text}, {"digest", fnv1a(text)}, {"n", g.order()}, {"m", g.size()}};
  return g;
}

rl::EdgeColoring load_coloring(Context& ctx, const std::string& name, const std::string& path, const rl::Graph& host) {
  std::string text = slurp(path);
  ctx.inputs[name] = {{"path", path}, {"digest", fnv1a(text)}};
  return rl::coloring_from_string(text, host);
}

json edges_json(const rl::Graph& g, const std::vector<rl::EdgeId>& ids) {
  json arr = json::array();
  for (rl::EdgeId id : ids) arr.push_back({g.edge(id).u, g.edge(id).v});
  return arr;
}

json vertices_json(const std::vector<rl::Vertex>& vs) {
  json arr = json::array();
  for (rl::Vertex v : vs) arr.push_back(v);
  return arr;
}

// Inline text for small hosts, a file reference beyond.
json coloring_json(Context& ctx, const rl::Graph& host, const rl::EdgeColoring& c, const std::string& out_path = "") {
  std::string text = rl::coloring_to_string(host, c);
  if (!out_path.empty()) {
    std::ofstream(out_path) << text;
    return {{"file", out_path}};
  }
  if (host.order() <= kInlineWitnessCap) return text;
  std::ofstream(ctx.witness_out) << text;
  return {{"file", ctx.witness_out}};
}

json verdict_json(Context& ctx, const rl::Graph& f, const rl::ArrowingVerdict& v) {
  json out;
  if (v.outcome == rl::Outcome::Unknown) out["arrows"] = nullptr;
  else out["arrows"] = v.arrows();
  out["method"] = rl::to_string(v.method);
  out["nodes"] = v.nodes_explored;
  if (v.witness) out["witness"] = coloring_json(ctx, f, *v.witness);
  ctx.nodes += v.nodes_explored;
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw rl::InvalidArgument("not an integer: '" + tok + "'");
    }
  }
  return out;
}

rl::Edge parse_edge(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 2 || v[0] == v[1]) throw rl::InvalidArgument("an edge is written u,v with u != v");
  return rl::Edge(v[0], v[1]);
}

void emit(const Context& ctx, json verdict, std::chrono::steady_clock::time_point start) {
  json report;
  report["schema"] = 1;
  report["command"] = ctx.command;
  report["inputs"] = ctx.inputs;
  report["verdict"] = std::move(verdict);
  report["nodes_explored"] = ctx.nodes;
  report["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (ctx.seed) report["seed"] = *ctx.seed;
  else report["seed"] = nullptr;
  std::cout << report.dump(2) << '\n';
}

int fail(int code, const std::string& kind, const std::string& what) {
  json err{{"schema", 1}, {"error", kind}, {"message", what}, {"exit_code", code}};
  std::cout << err.dump(2) << '\n';
  std::cerr << "ramseylab: " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey arrowing and equivalence toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "print help");  // -h is taken by the H graph
  std::uint64_t seed_opt = 0;
  app.add_option("--seed", seed_opt, "seed for randomized modes (RAMSEYLAB_SEED overrides)");

  Context ctx;
  std::function<json()> action;
  rl::ArrowingOptions aopt;

  // ---- construct
  auto* construct = app.add_subcommand("construct", "build a named graph or gadget");
  construct->require_subcommand(1);
  std::string out_path, coloring_out;
  construct->add_option("--out", out_path, "also write the graph6 line to this file");
  construct->add_option("--coloring-out", coloring_out, "write the witness coloring to this file");
  int p_s = 0, p_n = 0, p_t = 0, p_a = 0, p_b = 0, p_mid = 0, p_k = 0, p_i = 0, p_p = 0, p_q = 0, p_r = 0, p_g = 0,
      p_min_deg = 0;
  long long p_trials = 100000;
  std::string f_tree, f_gamma, f_gamma_prime, f_j, f_det, s_beta;

  auto graph_result = [&](const rl::Graph& g, const rl::EdgeColoring* c) {
    json v;
    v["graph6"] = rl::to_graph6(g);
    v["n"] = g.order();
    v["m"] = g.size();
    if (!out_path.empty()) std::ofstream(out_path) << v["graph6"].get<std::string>() << '\n';
    if (c) v["coloring"] = coloring_json(ctx, g, *c, coloring_out);
    return v;
  };
  auto gadget_result = [&](const rl::RootedGadget& rg) {
    json v = graph_result(rg.graph, rg.witness_coloring ? &*rg.witness_coloring : nullptr);
    v["root"] = rg.root;
    if (rg.co_root) v["co_root"] = *rg.co_root;
    return v;
  };

  auto add_basic = [&](const char* name, const char* opt, int& var, rl::BasicKind kind) {
    auto* sc = construct->add_subcommand(name);
    sc->add_option(opt, var)->required();
    int* param = &var;
    sc->callback([&, kind, name, param] {
      ctx.command = std::string("construct ") + name;
      action = [&, kind, param] { return graph_result(rl::basic_family(kind, *param), nullptr); };
    });
  };
  add_basic("star", "--s", p_s, rl::BasicKind::Star);
  add_basic("path", "--n", p_n, rl::BasicKind::Path);
  add_basic("clique", "--t", p_t, rl::BasicKind::Clique);
  add_basic("cycle", "--n", p_n, rl::BasicKind::Cycle);

  auto* c_pend = construct->add_subcommand("clique-pendants", "K_t·aK_b");
  c_pend->add_option("--t", p_t)->required();
  c_pend->add_option("--a", p_a)->required();
  c_pend->add_option("--b", p_b)->required();
  c_pend->callback([&] {
    ctx.command = "construct clique-pendants";
    action = [&] { return graph_result(rl::clique_with_pendants(p_t, p_a, p_b), nullptr); };
  });

  auto* c_cat = construct->add_subcommand("caterpillar", "s-suitable caterpillar");
  c_cat->add_option("--s", p_s)->required();
  c_cat->add_option("--mid", p_mid, "leaves at the middle spine vertex")->required();
  c_cat->callback([&] {
    ctx.command = "construct caterpillar";
    action = [&] { return graph_result(rl::suitable_caterpillar(p_s, p_mid), nullptr); };
  });

  auto* c_pet = construct->add_subcommand("petersen");
  c_pet->callback([&] {
    ctx.command = "construct petersen";
    action = [&] { return graph_result(rl::petersen_graph(), nullptr); };
  });

  auto* c_unif = construct->add_subcommand("uniform-tree", "U_{k,i}");
  c_unif->add_option("--k", p_k)->required();
  c_unif->add_option("--i", p_i)->required();
  c_unif->callback([&] {
    ctx.command = "construct uniform-tree";
    action = [&] { return gadget_result(rl::uniform_tree(p_k, p_i)); };
  });

  auto* c_lam = construct->add_subcommand("lambda", "Λ_i(T, Γ) with its witness coloring");
  c_lam->add_option("--tree", f_tree)->required();
  c_lam->add_option("--gamma", f_gamma)->required();
  c_lam->add_option("--i", p_i)->required();
  c_lam->callback([&] {
    ctx.command = "construct lambda";
    action = [&] {
      return gadget_result(rl::lambda_gadget(load_graph(ctx, "tree", f_tree), load_graph(ctx, "gamma", f_gamma), p_i));
    };
  });

  auto* c_c = construct->add_subcommand("c-gadget", "C(Γ′) with its witness coloring");
  c_c->add_option("--gamma-prime", f_gamma_prime)->required();
  c_c->callback([&] {
    ctx.command = "construct c-gadget";
    action = [&] { return gadget_result(rl::c_gadget(load_graph(ctx, "gamma_prime", f_gamma_prime))); };
  });

  auto* c_dist = construct->add_subcommand("distinguisher", "diameter distinguisher F with its free coloring");
  c_dist->add_option("--tree", f_tree)->required();
  c_dist->add_option("--t", p_t)->required();
  c_dist->add_option("--gamma", f_gamma, "defaults to T when t = 3");
  c_dist->add_option("--gamma-prime", f_gamma_prime, "needed for even diameter");
  c_dist->add_option("--j", f_j, "defaults to C_5 when t = 3");
  c_dist->callback([&] {
    ctx.command = "construct distinguisher";
    action = [&] {
      rl::Graph tree = load_graph(ctx, "tree", f_tree);
      std::optional<rl::Graph> gamma, gp, j;
      if (!f_gamma.empty()) gamma = load_graph(ctx, "gamma", f_gamma);
      else if (p_t == 3) gamma = rl::distinguisher_defaults(tree, 3).gamma;
      else throw rl::InvalidArgument("--gamma is required for t != 3");
      if (!f_gamma_prime.empty()) gp = load_graph(ctx, "gamma_prime", f_gamma_prime);
      if (!f_j.empty()) j = load_graph(ctx, "j", f_j);
      auto d = rl::diameter_distinguisher(tree, p_t, *gamma, gp, j);
      json v = graph_result(d.graph, &d.coloring);
      v["odd_diameter"] = d.odd_diameter;
      v["clique"] = vertices_json(d.clique);
      return v;
    };
  });

  auto* c_fx = construct->add_subcommand("factor-extremal", "r-regular graph with a q-factor and no p-factor");
  c_fx->add_option("--p", p_p)->required();
  c_fx->add_option("--q", p_q)->required();
  c_fx->add_option("--r", p_r)->required();
  c_fx->callback([&] {
    ctx.command = "construct factor-extremal";
    action = [&] {
      auto [f, tr, cert] = rl::factor_extremal_graph(p_p, p_q, p_r);
      json v = graph_result(f, nullptr);
      v["parameters"] = {{"p", tr.p}, {"q", tr.q}, {"r", tr.r}, {"t", tr.t}};
      json stages = json::object();
      for (const auto& [name, g] : tr.stage_graphs) stages[name] = {{"n", g.order()}, {"m", g.size()}};
      v["stages"] = stages;
      v["hub"] = vertices_json(tr.D);
      v["belck"] = {{"p", cert.p}, {"D", vertices_json(cert.D)}, {"odd_components", cert.odd_component_count}};
      return v;
    };
  });

  auto* c_hyp = construct->add_subcommand("hypergraph", "K_t blow-up of a random high-girth hypergraph");
  c_hyp->add_option("--t", p_t)->required();
  c_hyp->add_option("--g", p_g)->required();
  c_hyp->add_option("--min-degree", p_min_deg)->required();
  c_hyp->add_option("--n", p_n)->required();
  c_hyp->add_option("--trials", p_trials);
  c_hyp->callback([&] {
    ctx.command = "construct hypergraph";
    action = [&] {
      if (!ctx.seed) ctx.seed = 1;
      auto [h, f] = rl::hypergraph_blowup(p_t, p_g, p_min_deg, p_n, p_trials, *ctx.seed);
      json v = graph_result(f, nullptr);
      json hs = json::array();
      for (const auto& e : h.hyperedges) hs.push_back(vertices_json(e));
      v["hyperedges"] = hs;
      v["girth"] = rl::hypergraph_girth(h) == std::numeric_limits<int>::max() ? json(nullptr) : json(rl::hypergraph_girth(h));
      v["min_degree"] = h.min_degree();
      return v;
    };
  });

  auto* c_chain = construct->add_subcommand("determiner-chain", "T with a determiner glued on every edge");
  c_chain->add_option("--tree", f_tree)->required();
  c_chain->add_option("--det", f_det)->required();
  c_chain->add_option("--beta", s_beta, "u,v")->required();
  c_chain->callback([&] {
    ctx.command = "construct determiner-chain";
    action = [&] {
      rl::DeterminerGadget d(load_graph(ctx, "det", f_det), parse_edge(s_beta));
      return graph_result(rl::determiner_chain(load_graph(ctx, "tree", f_tree), d), nullptr);
    };
  });

  // ---- arrows
  auto* arrows = app.add_subcommand("arrows", "decide F → (G, H)");
  std::string f_g, f_h, f_f, witness_file;
  std::vector<std::string> positional;
  long long sampled = 0;
  bool exhaustive = false;
  arrows->add_option("--g", f_g);
  arrows->add_option("--h", f_h);
  arrows->add_option("--f", f_f);
  arrows->add_option("graphs", positional, "g h f, when not given as options")->expected(0, 3);
  arrows->add_option("--budget", aopt.budget);
  arrows->add_option("--jobs", aopt.jobs);
  arrows->add_option("--sampled", sampled, "random colorings only; can only refute");
  arrows->add_flag("--exhaustive", exhaustive, "plain 2^|E| enumeration");
  arrows->add_option("--witness-out", witness_file);
  arrows->callback([&] {
    ctx.command = "arrows";
    action = [&] {
      std::string sg = f_g, sh = f_h, sf = f_f;
      std::size_t k = 0;
      for (std::string* slot : {&sg, &sh, &sf})
        if (slot->empty() && k < positional.size()) *slot = positional[k++];
      if (sg.empty() || sh.empty() || sf.empty()) throw rl::InvalidArgument("arrows needs G, H and F");
      rl::Graph g = load_graph(ctx, "g", sg), h = load_graph(ctx, "h", sh), f = load_graph(ctx, "f", sf);
      rl::ArrowingVerdict v;
      if (sampled > 0) {
        if (!ctx.seed) ctx.seed = 1;
        v = rl::arrows_sampled(f, g, h, sampled, *ctx.seed);
      } else if (exhaustive) {
        v = rl::arrows_exhaustive(f, g, h);
      } else {
        v = rl::arrows(f, g, h, aopt);
      }
      json out = verdict_json(ctx, f, v);
      if (v.witness && !witness_file.empty()) out["witness"] = coloring_json(ctx, f, *v.witness, witness_file);
      if (v.method == rl::SearchMethod::Sampled && !v.witness)
        out["note"] = "sampling found no free coloring; this is not a proof of arrowing";
      return out;
    };
  });

  // ---- ramsey-number
  auto* rn = app.add_subcommand("ramsey-number", "least n with K_n → (G, H)");
  int cap = 12;
  rn->add_option("--g", f_g)->required();
  rn->add_option("--h", f_h)->required();
  rn->add_option("--cap", cap);
  rn->add_option("--budget", aopt.budget);
  rn->add_option("--jobs", aopt.jobs);
  rn->callback([&] {
    ctx.command = "ramsey-number";
    action = [&] {
      rl::Graph g = load_graph(ctx, "g", f_g), h = load_graph(ctx, "h", f_h);
      long long nodes = 0;
      int r = rl::ramsey_number(g, h, cap, aopt, &nodes);
      ctx.nodes += nodes;
      return json{{"ramsey_number", r}};
    };
  });

  // ---- minimal
  auto* mn = app.add_subcommand("minimal", "is F Ramsey-minimal for (G, H)");
  mn->add_option("--f", f_f)->required();
  mn->add_option("--g", f_g)->required();
  mn->add_option("--h", f_h)->required();
  mn->add_option("--budget", aopt.budget);
  mn->callback([&] {
    ctx.command = "minimal";
    action = [&] {
      rl::Graph f = load_graph(ctx, "f", f_f), g = load_graph(ctx, "g", f_g), h = load_graph(ctx, "h", f_h);
      auto v = rl::arrows(f, g, h, aopt);
      ctx.nodes += v.nodes_explored;
      bool minimal = v.arrows() && rl::minimal_ramsey_check(f, g, h, aopt);
      return json{{"arrows", v.arrows()}, {"minimal", minimal}};
    };
  });

  // ---- equiv-scan
  auto* es = app.add_subcommand("equiv-scan", "look for a host separating two pairs");
  std::string f_g1, f_h1, f_g2, f_h2;
  int max_vertices = 6;
  es->add_option("--g1", f_g1)->required();
  es->add_option("--h1", f_h1)->required();
  es->add_option("--g2", f_g2)->required();
  es->add_option("--h2", f_h2)->required();
  es->add_option("--max-vertices", max_vertices);
  es->add_option("--budget", aopt.budget);
  es->callback([&] {
    ctx.command = "equiv-scan";
    action = [&] {
      rl::Graph g1 = load_graph(ctx, "g1", f_g1), h1 = load_graph(ctx, "h1", f_h1);
      rl::Graph g2 = load_graph(ctx, "g2", f_g2), h2 = load_graph(ctx, "h2", f_h2);
      auto res = rl::equivalence_scan(g1, h1, g2, h2, max_vertices, aopt);
      json out;
      out["graphs_checked"] = res.graphs_checked;
      out["indeterminate"] = res.indeterminate;
      switch (res.kind) {
        case rl::ScanResult::Kind::NoDistinguisherFound:
          out["result"] = "no-distinguisher-found";
          out["note"] = "a finite scan cannot prove equivalence";
          break;
        case rl::ScanResult::Kind::SymbolicDistinguisher:
          out["result"] = "distinguisher-exists";
          out["reason"] = res.reason;
          break;
        case rl::ScanResult::Kind::Distinguisher:
          out["result"] = "distinguisher";
          out["graph6"] = rl::to_graph6(*res.distinguisher);
          out["first"] = verdict_json(ctx, *res.distinguisher, *res.first);
          out["second"] = verdict_json(ctx, *res.distinguisher, *res.second);
          break;
      }
      return out;
    };
  });

  // ---- factor / belck
  auto* fac = app.add_subcommand("factor", "find a k-factor");
  int k_factor = 1;
  std::string f_graph;
  fac->add_option("--k", k_factor)->required();
  fac->add_option("graph", f_graph)->required();
  fac->callback([&] {
    ctx.command = "factor";
    action = [&] {
      rl::Graph g = load_graph(ctx, "graph", f_graph);
      auto w = rl::has_k_factor(g, k_factor);
      if (!w) return json{{"k", k_factor}, {"factor", "NONE"}};
      return json{{"k", k_factor}, {"factor", edges_json(g, w->edges)}};
    };
  });

  auto* bel = app.add_subcommand("belck", "check p|D| < q(D)");
  int p_odd = 1;
  std::string s_d;
  bel->add_option("--p", p_odd)->required();
  bel->add_option("--d", s_d, "comma separated vertices; empty for D = ∅");
  bel->add_option("graph", f_graph)->required();
  bel->callback([&] {
    ctx.command = "belck";
    action = [&] {
      rl::Graph g = load_graph(ctx, "graph", f_graph);
      std::vector<rl::Vertex> D;
      for (int v : parse_int_list(s_d)) D.push_back(v);
      for (rl::Vertex v : D)
        if (v < 0 || v >= g.order()) throw rl::DomainMismatch("belck: vertex " + std::to_string(v) + " not in graph");
      auto cert = rl::belck_check(g, D, p_odd);
      json out{{"p", p_odd}, {"D", vertices_json(D)}, {"odd_components", rl::odd_components(g, D)},
               {"certificate", cert.has_value()}};
      return out;
    };
  });

  // ---- recolor
  auto* rec = app.add_subcommand("recolor", "coloring transformations");
  rec->require_subcommand(1);
  int r_s = 2, r_t = 3, r_k = 1, r_a = 1, r_b = 2;
  std::string f_col, col_out;
  auto* walk = rec->add_subcommand("walk", "(K_{1,s}, K_t·K_2)-free to (K_{1,s}, K_t)-free");
  auto* woven = rec->add_subcommand("woven", "(G, K_t·aK_b)-free to (G, K_t)-free");
  for (auto* sc : {walk, woven}) {
    sc->add_option("--s", r_s, "star size (G = K_{1,s} for woven unless --g)");
    sc->add_option("--t", r_t)->required();
    sc->add_option("--out", col_out, "write the new coloring here");
    sc->add_option("graph", f_graph)->required();
    sc->add_option("coloring", f_col)->required();
  }
  woven->add_option("--g", f_g, "woven graph G");
  woven->add_option("--k", r_k);
  woven->add_option("--a", r_a);
  woven->add_option("--b", r_b);
  walk->callback([&] {
    ctx.command = "recolor walk";
    action = [&] {
      rl::Graph f = load_graph(ctx, "graph", f_graph);
      rl::EdgeColoring c = load_coloring(ctx, "coloring", f_col, f);
      std::vector<rl::WalkTrace> traces;
      rl::EdgeColoring out = rl::star_clique_recolor(f, c, r_s, r_t, &traces);
      json steps = json::array();
      for (const auto& tr : traces) steps.push_back({{"walk", edges_json(f, tr.edges)}, {"seed", edges_json(f, {tr.start_edge})}});
      return json{{"steps", steps}, {"coloring", coloring_json(ctx, f, out, col_out)}};
    };
  });
  woven->callback([&] {
    ctx.command = "recolor woven";
    action = [&] {
      rl::Graph f = load_graph(ctx, "graph", f_graph);
      rl::EdgeColoring c = load_coloring(ctx, "coloring", f_col, f);
      rl::Graph g = f_g.empty() ? rl::star_graph(r_s) : load_graph(ctx, "g", f_g);
      auto [out, tr] = rl::woven_recolor(f, c, g, r_k, r_a, r_b, r_t);
      json fam = json::array(), uks = json::array(), ys = json::array(), m = json::array();
      for (const auto& K : tr.family_B) fam.push_back(vertices_json(K));
      for (const auto& U : tr.U_K_sets) uks.push_back(vertices_json(U));
      for (const auto& e : tr.matching_M) m.push_back({e.u, e.v});
      for (const auto& y : tr.Y_sets) ys.push_back(edges_json(f, y));
      return json{{"r", tr.r}, {"family_B", fam}, {"U_K", uks}, {"M", m}, {"Y", ys},
                  {"coloring", coloring_json(ctx, f, out, col_out)}};
    };
  });

  // ---- verify-determiner
  auto* vd = app.add_subcommand("verify-determiner", "check the determiner axioms exhaustively");
  vd->add_option("--d", f_det)->required();
  vd->add_option("--beta", s_beta, "u,v")->required();
  vd->add_option("--tree", f_tree)->required();
  vd->add_option("--t", p_t)->required();
  vd->add_option("--budget", aopt.budget);
  vd->callback([&] {
    ctx.command = "verify-determiner";
    action = [&] {
      rl::Graph d = load_graph(ctx, "d", f_det);
      rl::Graph tree = load_graph(ctx, "tree", f_tree);
      auto rep = rl::verify_determiner(d, parse_edge(s_beta), tree, p_t, aopt);
      ctx.nodes += rep.nodes_explored;
      auto opt_json = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
      json out{{"not_ramsey", opt_json(rep.not_ramsey)},
               {"beta_forced", opt_json(rep.beta_forced)},
               {"well_behaved", opt_json(rep.well_behaved)},
               {"clique_closure", rep.clique_closure},
               {"all_hold", rep.all_hold()}};
      if (rep.well_behaved_witness) out["well_behaved_witness"] = coloring_json(ctx, d, *rep.well_behaved_witness);
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const rl::Error& e) {
    return fail(kExitUsage, "usage", e.what());
  }

  if (app.count("--seed")) ctx.seed = seed_opt;
  if (const char* env = std::getenv("RAMSEYLAB_SEED")) {
    try {
      ctx.seed = std::stoull(env);
    } catch (const std::exception&) {
      return fail(kExitUsage, "usage", "RAMSEYLAB_SEED is not an unsigned integer");
    }
  }
  if (!action) return fail(kExitUsage, "usage", "no subcommand selected");

  const auto start = std::chrono::steady_clock::now();
  try {
    json verdict = action();
    emit(ctx, std::move(verdict), start);
    return 0;
  } catch (const rl::BudgetExhausted& e) {
    return fail(kExitIndeterminate, "indeterminate", e.what());
  } catch (const rl::CapExceeded& e) {
    return fail(kExitIndeterminate, "indeterminate", e.what());
  } catch (const rl::HypergraphSearchFailed& e) {
    return fail(kExitIndeterminate, "indeterminate", e.what());
  } catch (const rl::InvariantViolation& e) {
    return fail(kExitInvariant, "invariant-violation", e.what());
  } catch (const rl::ParseError& e) {
    return fail(kExitParse, "parse-error", e.what());
  } catch (const rl::DomainMismatch& e) {
    return fail(kExitMismatch, "domain-mismatch", e.what());
  } catch (const rl::InvalidArgument& e) {
    return fail(kExitUsage, "usage", e.what());
  } catch (const rl::Error& e) {
    return fail(kExitUsage, "usage", e.what());
  }
}
