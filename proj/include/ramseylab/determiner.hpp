#pragma once

#include <optional>
#include <vector>

#include "arrowing.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "subgraph.hpp"

namespace ramseylab {

// Per-axiom result; nullopt means the search hit its budget.
struct DeterminerReport {
  std::optional<bool> not_ramsey;     // D ↛ (T, K_t)
  std::optional<bool> beta_forced;    // every free coloring has β red
  std::optional<bool> well_behaved;   // some free coloring has every edge at β blue
  bool clique_closure = false;        // {β ends} ∪ N(β ends) induces K_t
  std::optional<EdgeColoring> well_behaved_witness;
  long long nodes_explored = 0;

  bool all_hold() const {
    return not_ramsey.value_or(false) && beta_forced.value_or(false) && well_behaved.value_or(false) && clique_closure;
  }
};

inline DeterminerReport verify_determiner(const Graph& d, Edge beta, const Graph& tree, int t,
                                          const ArrowingOptions& base = {}) {
  auto bid = d.edge_index(beta.u, beta.v);
  if (!bid) throw InvalidArgument("verify_determiner: β is not an edge of D");
  if (t < 2) throw InvalidArgument("verify_determiner: t must be >= 2");
  const Graph kt = complete_graph(t);
  DeterminerReport rep;

  auto run = [&](std::vector<std::pair<EdgeId, Color>> fixed) -> std::optional<ArrowingVerdict> {
    ArrowingOptions opt = base;
    opt.fixed = std::move(fixed);
    try {
      auto v = arrows(d, tree, kt, opt);
      rep.nodes_explored += v.nodes_explored;
      return v;
    } catch (const BudgetExhausted& e) {
      rep.nodes_explored += e.nodes_explored;
      return std::nullopt;
    }
  };

  if (auto v = run({})) rep.not_ramsey = v->refuted();
  if (auto v = run({{*bid, Color::Blue}})) rep.beta_forced = v->arrows();

  std::vector<std::pair<EdgeId, Color>> around;
  for (Vertex end : {beta.u, beta.v})
    for (EdgeId id : d.incident_edges(end))
      if (id != *bid) around.emplace_back(id, Color::Blue);
  if (auto v = run(around)) {
    rep.well_behaved = v->refuted();
    if (v->refuted()) rep.well_behaved_witness = v->witness;
  }

  std::vector<Vertex> closure{beta.u, beta.v};
  for (Vertex end : {beta.u, beta.v})
    for (Vertex w : d.neighbors(end)) closure.push_back(w);
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  Graph ind = d.induced(closure);
  rep.clique_closure = ind.order() == t && is_complete(ind);
  return rep;
}

}  // namespace ramseylab
