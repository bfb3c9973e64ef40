#pragma once

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "properties.hpp"
#include "subgraph.hpp"

namespace ramseylab {

// True iff c has no red copy of g and no blue copy of h.
inline bool coloring_is_free(const Graph& f, const EdgeColoring& c, const Graph& g, const Graph& h) {
  c.require_host(f);
  if (contains_copy(f, g, [&](EdgeId id) { return c[id] == Color::Red; })) return false;
  if (contains_copy(f, h, [&](EdgeId id) { return c[id] == Color::Blue; })) return false;
  return true;
}

enum class Outcome { Arrows, NotArrows, Unknown };
enum class SearchMethod { Exhaustive, Pruned, Sampled };

inline const char* to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::Exhaustive: return "exhaustive";
    case SearchMethod::Pruned: return "pruned";
    case SearchMethod::Sampled: return "sampled";
  }
  return "?";
}

struct ArrowingVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<EdgeColoring> witness;  // a (g,h)-free coloring iff NotArrows
  long long nodes_explored = 0;
  SearchMethod method = SearchMethod::Pruned;

  bool arrows() const { return outcome == Outcome::Arrows; }
  bool refuted() const { return outcome == Outcome::NotArrows; }
};

struct ArrowingOptions {
  long long budget = 200'000'000;  // decision nodes
  int jobs = 1;
  // Colors fixed before the search starts (e.g. a determiner edge).
  std::vector<std::pair<EdgeId, Color>> fixed;
};

// F → (G,H) as a monotone satisfiability problem: every copy of G is a set of
// edges that may not be all red, every copy of H a set that may not be all blue.
struct ArrowingInstance {
  int num_edges = 0;
  std::vector<std::vector<EdgeId>> red_forbidden;   // copies of g
  std::vector<std::vector<EdgeId>> blue_forbidden;  // copies of h
  bool trivially_arrows = false;                    // some copy has no edges
  bool symmetric = false;                           // g ≅ h

  static std::vector<std::vector<EdgeId>> copies(const Graph& f, const Graph& p) {
    if (p.size() == 0) {
      if (p.order() <= f.order()) return {{}};
      return {};
    }
    return copy_edge_sets(f, p);
  }

  static ArrowingInstance build(const Graph& f, const Graph& g, const Graph& h) {
    ArrowingInstance inst;
    inst.num_edges = f.size();
    inst.red_forbidden = copies(f, g);
    inst.blue_forbidden = copies(f, h);
    for (const auto* list : {&inst.red_forbidden, &inst.blue_forbidden})
      for (const auto& c : *list)
        if (c.empty()) inst.trivially_arrows = true;
    inst.symmetric = is_isomorphic(g, h);
    return inst;
  }
};

namespace detail {

// DFS over edge colorings with unit propagation on the copy constraints.
// Branch order is fixed: edges by descending number of copies they lie in.
class ColoringSearch {
 public:
  ColoringSearch(const ArrowingInstance& inst, std::atomic<long long>& nodes, long long budget,
                 const std::atomic<bool>* cancel = nullptr)
      : inst_(inst), nodes_(nodes), budget_(budget), cancel_(cancel) {
    const int m = inst.num_edges;
    occ_.assign(m, {});
    auto add = [&](const std::vector<EdgeId>& edges, Color bad) {
      Clause c;
      c.begin = static_cast<int>(lits_.size());
      c.size = static_cast<int>(edges.size());
      c.bad = bad;
      lits_.insert(lits_.end(), edges.begin(), edges.end());
      int id = static_cast<int>(clauses_.size());
      clauses_.push_back(c);
      for (EdgeId e : edges) occ_[e].push_back(id);
    };
    red_weight_.assign(m, 0);
    blue_weight_.assign(m, 0);
    for (const auto& c : inst.red_forbidden) {
      add(c, Color::Red);
      for (EdgeId e : c) ++red_weight_[e];
    }
    for (const auto& c : inst.blue_forbidden) {
      add(c, Color::Blue);
      for (EdgeId e : c) ++blue_weight_[e];
    }
    order_.resize(m);
    for (int e = 0; e < m; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return red_weight_[a] + blue_weight_[a] > red_weight_[b] + blue_weight_[b];
    });
    value_.assign(m, -1);
  }

  const std::vector<EdgeId>& branch_order() const { return order_; }

  // Applies fixed colors; false if they already force a forbidden copy.
  bool assume(const std::vector<std::pair<EdgeId, Color>>& fixed) {
    for (auto [e, c] : fixed) {
      if (value_[e] >= 0) {
        if (value_[e] != static_cast<int>(c)) return false;
        continue;
      }
      if (!assign_and_propagate(e, c)) return false;
    }
    return true;
  }

  // Searches for a free completion. `first_red_only` drops the blue branch
  // at the first decision (color-swap symmetry).
  std::optional<EdgeColoring> run(bool first_red_only) {
    first_red_only_ = first_red_only;
    if (dfs(0, true)) {
      std::vector<Color> out(inst_.num_edges);
      for (int e = 0; e < inst_.num_edges; ++e) out[e] = static_cast<Color>(value_[e]);
      return EdgeColoring(std::move(out));
    }
    return std::nullopt;
  }

  bool cancelled() const { return cancelled_; }

 private:
  struct Clause {
    int begin = 0;
    int size = 0;
    Color bad = Color::Red;
    int bad_count = 0;
    int good_count = 0;
  };

  bool assign_and_propagate(EdgeId e0, Color c0) {
    std::size_t head = trail_.size();
    value_[e0] = static_cast<int>(c0);
    trail_.push_back(e0);
    bool ok = true;
    while (head < trail_.size()) {
      EdgeId e = trail_[head++];
      Color c = static_cast<Color>(value_[e]);
      for (int ci : occ_[e]) {
        Clause& cl = clauses_[ci];
        if (c == cl.bad)
          ++cl.bad_count;
        else
          ++cl.good_count;
      }
      if (!ok) continue;  // still count queued edges so undo stays symmetric
      for (int ci : occ_[e]) {
        Clause& cl = clauses_[ci];
        if (cl.good_count > 0) continue;
        if (cl.bad_count == cl.size) {
          ok = false;
          break;
        }
        if (cl.bad_count == cl.size - 1) {
          for (int k = 0; k < cl.size; ++k) {
            EdgeId x = lits_[cl.begin + k];
            if (value_[x] < 0) {
              value_[x] = static_cast<int>(flip(cl.bad));
              trail_.push_back(x);
              break;
            }
          }
        }
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      EdgeId e = trail_.back();
      trail_.pop_back();
      Color c = static_cast<Color>(value_[e]);
      for (int ci : occ_[e]) {
        Clause& cl = clauses_[ci];
        if (c == cl.bad)
          --cl.bad_count;
        else
          --cl.good_count;
      }
      value_[e] = -1;
    }
  }

  bool dfs(std::size_t pos, bool first_decision) {
    while (pos < order_.size() && value_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) return true;
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
      cancelled_ = true;
      return false;
    }
    const EdgeId e = order_[pos];
    // prefer the color that fewer copies forbid
    Color first = red_weight_[e] > blue_weight_[e] ? Color::Blue : Color::Red;
    if (first_decision && first_red_only_) first = Color::Red;
    for (int branch = 0; branch < 2; ++branch) {
      if (branch == 1 && first_decision && first_red_only_) break;
      Color c = branch == 0 ? first : flip(first);
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
        throw BudgetExhausted("arrowing search exceeded its node budget", nodes_.load());
      std::size_t mark = trail_.size();
      bool ok = assign_and_propagate(e, c);
      if (ok && dfs(pos + 1, false)) return true;
      undo_to(mark);
      if (cancelled_) return false;
    }
    return false;
  }

  const ArrowingInstance& inst_;
  std::atomic<long long>& nodes_;
  long long budget_;
  const std::atomic<bool>* cancel_;
  bool cancelled_ = false;
  bool first_red_only_ = false;
  std::vector<Clause> clauses_;
  std::vector<EdgeId> lits_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> red_weight_, blue_weight_;
  std::vector<EdgeId> order_;
  std::vector<int> value_;
  std::vector<EdgeId> trail_;
};

}  // namespace detail

// Decides f → (g, h). Returns Arrows, or NotArrows with a free coloring.
// Throws BudgetExhausted rather than guess.
inline ArrowingVerdict arrows(const Graph& f, const Graph& g, const Graph& h, const ArrowingOptions& opt = {}) {
  for (auto [e, c] : opt.fixed)
    if (e < 0 || e >= f.size()) throw InvalidArgument("arrows: fixed edge id out of range");
  ArrowingInstance inst = ArrowingInstance::build(f, g, h);
  ArrowingVerdict out;
  out.method = SearchMethod::Pruned;
  if (inst.trivially_arrows) {
    out.outcome = Outcome::Arrows;
    return out;
  }
  // color swap maps free colorings to free colorings only when g ≅ h and
  // nothing is pinned
  const bool symmetry = inst.symmetric && opt.fixed.empty();
  std::atomic<long long> nodes{0};

  if (opt.jobs <= 1 || f.size() < 8) {
    detail::ColoringSearch search(inst, nodes, opt.budget);
    std::optional<EdgeColoring> w;
    if (search.assume(opt.fixed)) w = search.run(symmetry);
    out.nodes_explored = nodes.load();
    out.outcome = w ? Outcome::NotArrows : Outcome::Arrows;
    out.witness = std::move(w);
  } else {
    // Disjoint prefixes over the first `depth` branch edges. The witness
    // reported is the one from the lowest-index prefix that has one.
    detail::ColoringSearch probe(inst, nodes, opt.budget);
    const auto& order = probe.branch_order();
    int depth = 1;
    while ((1 << depth) < 4 * opt.jobs && depth < 12 && depth < static_cast<int>(order.size())) ++depth;
    const int prefixes = 1 << depth;
    std::atomic<int> next{0};
    std::atomic<int> best{INT_MAX};
    std::vector<std::optional<EdgeColoring>> found(prefixes);
    std::vector<std::atomic<bool>> cancel(prefixes);
    std::mutex err_mu;
    std::exception_ptr err;

    auto worker = [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= prefixes) return;
        if (i > best.load()) continue;
        if (symmetry && ((i >> (depth - 1)) & 1)) continue;  // first edge blue
        std::vector<std::pair<EdgeId, Color>> fixed = opt.fixed;
        for (int b = 0; b < depth; ++b)
          fixed.emplace_back(order[b], ((i >> (depth - 1 - b)) & 1) ? Color::Blue : Color::Red);
        try {
          detail::ColoringSearch s(inst, nodes, opt.budget, &cancel[i]);
          if (!s.assume(fixed)) continue;
          auto w = s.run(false);
          if (w) {
            found[i] = std::move(w);
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            for (int j = i + 1; j < prefixes; ++j) cancel[j].store(true);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          for (int j = 0; j < prefixes; ++j) cancel[j].store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    out.nodes_explored = nodes.load();
    if (best.load() != INT_MAX) {
      out.outcome = Outcome::NotArrows;
      out.witness = std::move(found[best.load()]);
    } else {
      out.outcome = Outcome::Arrows;
    }
  }

  if (out.witness && !coloring_is_free(f, *out.witness, g, h))
    throw InvariantViolation("arrows: search returned a coloring that is not free");
  for (auto [e, c] : opt.fixed)
    if (out.witness && (*out.witness)[e] != c) throw InvariantViolation("arrows: witness ignores a fixed color");
  return out;
}

// Full 2^|E| enumeration; only for small hosts.
inline ArrowingVerdict arrows_exhaustive(const Graph& f, const Graph& g, const Graph& h, int max_edges = 30) {
  if (f.size() > max_edges) throw InvalidArgument("arrows_exhaustive: too many edges for full enumeration");
  ArrowingInstance inst = ArrowingInstance::build(f, g, h);
  ArrowingVerdict out;
  out.method = SearchMethod::Exhaustive;
  if (inst.trivially_arrows) {
    out.outcome = Outcome::Arrows;
    return out;
  }
  auto to_masks = [](const std::vector<std::vector<EdgeId>>& sets) {
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) {
      std::uint64_t m = 0;
      for (EdgeId e : s) m |= std::uint64_t{1} << e;
      masks.push_back(m);
    }
    return masks;
  };
  auto red = to_masks(inst.red_forbidden);
  auto blue = to_masks(inst.blue_forbidden);
  const std::uint64_t all = f.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.size()) - 1;
  for (std::uint64_t red_mask = 0;; ++red_mask) {
    ++out.nodes_explored;
    const std::uint64_t blue_mask = all & ~red_mask;
    bool bad = std::any_of(red.begin(), red.end(), [&](auto m) { return (m & red_mask) == m; }) ||
               std::any_of(blue.begin(), blue.end(), [&](auto m) { return (m & blue_mask) == m; });
    if (!bad) {
      std::vector<Color> cs(f.size());
      for (int e = 0; e < f.size(); ++e) cs[e] = (red_mask >> e & 1) ? Color::Red : Color::Blue;
      out.outcome = Outcome::NotArrows;
      out.witness = EdgeColoring(std::move(cs));
      return out;
    }
    if (red_mask == all) break;
  }
  out.outcome = Outcome::Arrows;
  return out;
}

// Uniformly random colorings. Can only ever find a witness; never reports
// Arrows.
inline ArrowingVerdict arrows_sampled(const Graph& f, const Graph& g, const Graph& h, long long samples,
                                      std::uint64_t seed) {
  ArrowingInstance inst = ArrowingInstance::build(f, g, h);
  ArrowingVerdict out;
  out.method = SearchMethod::Sampled;
  out.outcome = Outcome::Unknown;
  if (inst.trivially_arrows) return out;
  std::mt19937_64 rng(seed);
  std::vector<Color> cs(f.size());
  auto violated = [&](const std::vector<std::vector<EdgeId>>& sets, Color bad) {
    for (const auto& s : sets) {
      bool all_bad = true;
      for (EdgeId e : s)
        if (cs[e] != bad) {
          all_bad = false;
          break;
        }
      if (all_bad) return true;
    }
    return false;
  };
  for (long long i = 0; i < samples; ++i) {
    ++out.nodes_explored;
    for (int e = 0; e < f.size(); e += 64) {
      std::uint64_t bits = rng();
      for (int k = 0; k < 64 && e + k < f.size(); ++k) cs[e + k] = (bits >> k & 1) ? Color::Blue : Color::Red;
    }
    if (violated(inst.red_forbidden, Color::Red) || violated(inst.blue_forbidden, Color::Blue)) continue;
    EdgeColoring w(cs);
    if (!coloring_is_free(f, w, g, h)) throw InvariantViolation("arrows_sampled: clause check disagrees");
    out.outcome = Outcome::NotArrows;
    out.witness = std::move(w);
    return out;
  }
  return out;
}

struct CapExceeded : Error {
  using Error::Error;
};

// Least n <= cap with K_n → (g, h).
inline int ramsey_number(const Graph& g, const Graph& h, int cap, const ArrowingOptions& opt = {},
                         long long* nodes = nullptr) {
  if (cap < 1) throw InvalidArgument("ramsey_number: cap must be >= 1");
  for (int n = 1; n <= cap; ++n) {
    auto v = arrows(complete_graph(n), g, h, opt);
    if (nodes) *nodes += v.nodes_explored;
    if (v.arrows()) return n;
  }
  throw CapExceeded("ramsey_number: no K_n with n <= " + std::to_string(cap) + " arrows the pair");
}

// f is Ramsey-minimal: f arrows and neither f − e nor f − v does, for every
// edge e and vertex v.
inline bool minimal_ramsey_check(const Graph& f, const Graph& g, const Graph& h, const ArrowingOptions& opt = {}) {
  if (!arrows(f, g, h, opt).arrows()) return false;
  for (EdgeId e = 0; e < f.size(); ++e)
    if (arrows(f.without_edge(e), g, h, opt).arrows()) return false;
  for (Vertex v = 0; v < f.order(); ++v)
    if (arrows(f.without_vertex(v), g, h, opt).arrows()) return false;
  return true;
}

struct ScanResult {
  enum class Kind { NoDistinguisherFound, Distinguisher, SymbolicDistinguisher };
  Kind kind = Kind::NoDistinguisherFound;
  std::optional<Graph> distinguisher;
  std::optional<ArrowingVerdict> first;   // verdict for (g1, h1)
  std::optional<ArrowingVerdict> second;  // verdict for (g2, h2)
  std::string reason;
  int graphs_checked = 0;
  std::vector<std::string> indeterminate;  // graph6 of hosts that hit the budget
};

// One-sided refutation of Ramsey equivalence. Returns the first host on
// <= max_vertices vertices whose verdicts differ. Finding none proves nothing.
inline ScanResult equivalence_scan(const Graph& g1, const Graph& h1, const Graph& g2, const Graph& h2,
                                   int max_vertices, const ArrowingOptions& opt = {}) {
  if (max_vertices > 8) throw InvalidArgument("equivalence_scan: max_vertices must be <= 8");
  ScanResult out;
  const int w1 = std::max(clique_number(g1), clique_number(h1));
  const int w2 = std::max(clique_number(g2), clique_number(h2));
  if (w1 != w2) {
    out.kind = ScanResult::Kind::SymbolicDistinguisher;
    out.reason = "clique numbers differ (" + std::to_string(w1) + " vs " + std::to_string(w2) +
                 "): some Ramsey graph of one pair has clique number " + std::to_string(std::min(w1, w2));
    return out;
  }
  const int cap = kChromaticVertexCap;
  if (g1.order() <= cap && h1.order() <= cap && g2.order() <= cap && h2.order() <= cap) {
    const int s1 = chromatic_number(g1) + chromatic_number(h1);
    const int s2 = chromatic_number(g2) + chromatic_number(h2);
    if (s1 != s2) {
      out.kind = ScanResult::Kind::SymbolicDistinguisher;
      out.reason = "chromatic sums differ (" + std::to_string(s1) + " vs " + std::to_string(s2) + ")";
      return out;
    }
  }
  for (const Graph& f : graphs_up_to(max_vertices)) {
    ++out.graphs_checked;
    try {
      auto a = arrows(f, g1, h1, opt);
      auto b = arrows(f, g2, h2, opt);
      if (a.arrows() != b.arrows()) {
        out.kind = ScanResult::Kind::Distinguisher;
        out.distinguisher = f;
        out.first = std::move(a);
        out.second = std::move(b);
        return out;
      }
    } catch (const BudgetExhausted&) {
      out.indeterminate.push_back(to_graph6(f));
    }
  }
  return out;
}

}  // namespace ramseylab
