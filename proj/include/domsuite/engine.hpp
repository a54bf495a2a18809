// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"
#include "domsuite/vertex_set.hpp"

namespace domsuite {

/// Order cap for the exact (exponential) routines. The search kernels
/// address vertices as bits of one 64-bit word, so 64 is the hard ceiling.
struct EngineLimits {
  std::size_t max_n = 25;
};

inline constexpr std::size_t kEngineHardLimit = 64;

namespace detail {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

/// For equal-size sets: a precedes b lexicographically.
inline bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

/// (size, lexicographic) order.
inline bool size_lex_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa < pb : lex_less(a, b);
}

inline void check_cap(std::size_t n, const EngineLimits& limits, std::string_view op) {
  const std::size_t cap = std::min(limits.max_n, kEngineHardLimit);
  if (n > cap) {
    throw InstanceTooLargeError(std::string(op) + ": order " + std::to_string(n) +
                                " exceeds exact cap " + std::to_string(cap));
  }
}

struct MaskGraph {
  int n = 0;
  Mask all = 0;
  std::array<Mask, 64> open{};
  std::array<Mask, 64> closed{};
  int max_closed = 1;  // Δ + 1

  explicit MaskGraph(const Graph& g) : n(static_cast<int>(g.order())) {
    all = n == 64 ? ~Mask{0} : bit(n) - 1;
    for (int v = 0; v < n; ++v) {
      open[v] = g.neighbors(static_cast<Vertex>(v)).to_mask();
      closed[v] = open[v] | bit(v);
      max_closed = std::max(max_closed, popcount(closed[v]));
    }
  }

  Mask closed_union(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= closed[lowest(s)];
    return out;
  }

  bool dominates(Mask s) const { return closed_union(s) == all; }

  bool independent(Mask s) const {
    for (Mask r = s; r; r &= r - 1) {
      if (open[lowest(r)] & s) return false;
    }
    return true;
  }

  /// suffix[i] = union of N[v] over v >= i.
  std::array<Mask, 65> suffix_unions() const {
    std::array<Mask, 65> suffix{};
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | closed[i];
    return suffix;
  }
};

/// Enumerates every minimal dominating set exactly once. Vertices are
/// decided in index order; a branch dies as soon as some chosen vertex has
/// no vertex left that it alone covers, or some vertex can no longer be
/// covered. `visit(mask)` returns false to stop. `floor` prunes branches
/// that cannot reach that many members.
template <class Visit>
class MinimalDominatingEnumerator {
 public:
  MinimalDominatingEnumerator(const MaskGraph& g, Visit& visit)
      : g_(g), visit_(visit), suffix_(g.suffix_unions()) {}

  void run() { rec(0, 0, 0, 0); }

  /// Branches that cannot reach *floor members are cut; the caller may
  /// raise *floor while the walk runs.
  void set_floor(const int* floor) { floor_ = floor; }

 private:
  void rec(int i, Mask chosen, Mask once, Mask twice) {
    if ((once | suffix_[i]) != g_.all) return;
    if (floor_ && popcount(chosen) + (g_.n - i) < *floor_) return;
    if (i == g_.n) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    const Mask m = g_.closed[i];
    const Mask twice2 = twice | (once & m);
    const Mask once2 = once | m;
    const Mask exactly_once = once2 & ~twice2;
    bool ok = (m & exactly_once) != 0;
    for (Mask r = chosen & g_.closed_union(m); ok && r; r &= r - 1) {
      ok = (g_.closed[lowest(r)] & exactly_once) != 0;
    }
    if (ok) {
      rec(i + 1, chosen | bit(i), once2, twice2);
      if (stopped_) return;
    }
    rec(i + 1, chosen, once, twice);
  }

  const MaskGraph& g_;
  Visit& visit_;
  std::array<Mask, 65> suffix_;
  const int* floor_ = nullptr;
  bool stopped_ = false;
};

template <class Visit>
void for_each_minimal_dominating(const MaskGraph& g, Visit&& visit, int floor = 0) {
  MinimalDominatingEnumerator<std::remove_reference_t<Visit>> e(g, visit);
  e.set_floor(&floor);
  e.run();
}

/// Dominating sets with exactly k members, in lexicographic order.
/// Returns false if the visitor stopped the walk.
template <class Visit>
bool for_each_dominating_of_size(const MaskGraph& g, int k, Visit&& visit) {
  const auto suffix = g.suffix_unions();
  bool stopped = false;
  std::function<void(int, Mask, Mask, int)> rec = [&](int start, Mask chosen, Mask covered,
                                                      int left) {
    if (covered == g.all) {
      if (left == 0 && !visit(chosen)) stopped = true;
      return;
    }
    if (left == 0) return;
    if (left * g.max_closed < popcount(g.all & ~covered)) return;
    for (int v = start; v < g.n && !stopped; ++v) {
      if ((covered | suffix[v]) != g.all) break;
      rec(v + 1, chosen | bit(v), covered | g.closed[v], left - 1);
    }
  };
  rec(0, 0, 0, k);
  return !stopped;
}

/// Branch and bound over the closed neighborhood of the uncovered vertex
/// with the fewest remaining dominators, seeded by a greedy cover.
inline int domination_number_bb(const MaskGraph& g) {
  int best = 0;
  {
    Mask covered = 0;
    while (covered != g.all) {
      int pick = 0;
      int gain = -1;
      for (int v = 0; v < g.n; ++v) {
        const int c = popcount(g.closed[v] & ~covered);
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      covered |= g.closed[pick];
      ++best;
    }
  }
  std::function<void(Mask, Mask, int)> rec = [&](Mask covered, Mask allowed, int size) {
    if (covered == g.all) {
      best = size;
      return;
    }
    const Mask uncovered = g.all & ~covered;
    if (size + (popcount(uncovered) + g.max_closed - 1) / g.max_closed >= best) return;
    int target = -1;
    int options = 65;
    for (Mask r = uncovered; r; r &= r - 1) {
      const int x = lowest(r);
      const int c = popcount(g.closed[x] & allowed);
      if (c < options) {
        options = c;
        target = x;
      }
    }
    if (options == 0) return;
    Mask cand = g.closed[target] & allowed;
    std::vector<std::pair<int, int>> order;
    for (Mask r = cand; r; r &= r - 1) {
      const int v = lowest(r);
      order.emplace_back(-popcount(g.closed[v] & uncovered), v);
    }
    std::sort(order.begin(), order.end());
    for (auto [neg_gain, v] : order) {
      rec(covered | g.closed[v], allowed, size + 1);
      allowed &= ~bit(v);
    }
  };
  rec(0, g.all, 0);
  return best;
}

/// Lexicographically least dominating set of size gamma.
inline Mask least_minimum_dominating(const MaskGraph& g, int gamma) {
  Mask found = 0;
  for_each_dominating_of_size(g, gamma, [&](Mask m) {
    found = m;
    return false;
  });
  return found;
}

/// Bron-Kerbosch with pivoting, run on the complement so that cliques are
/// the maximal independent sets of g.
template <class Visit>
void for_each_maximal_independent(const MaskGraph& g, Visit&& visit) {
  std::function<void(Mask, Mask, Mask)> rec = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      visit(r);
      return;
    }
    int pivot = lowest(p | x);
    int best = -1;
    for (Mask s = p | x; s; s &= s - 1) {
      const int u = lowest(s);
      const int c = popcount(p & ~g.closed[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    // Non-neighbors of the pivot in the complement are its closed
    // neighborhood in g.
    for (Mask s = p & g.closed[pivot]; s; s &= s - 1) {
      const int v = lowest(s);
      const Mask keep = ~g.closed[v];
      rec(r | bit(v), p & keep, x & keep);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  rec(0, g.all, 0);
}

template <class Visit>
void for_each_independent(const MaskGraph& g, Visit&& visit) {
  std::function<void(int, Mask, Mask)> rec = [&](int i, Mask chosen, Mask blocked) {
    if (i == g.n) {
      visit(chosen);
      return;
    }
    if (!(blocked & bit(i))) rec(i + 1, chosen | bit(i), blocked | g.closed[i]);
    rec(i + 1, chosen, blocked);
  };
  rec(0, 0, 0);
}

inline bool is_isolatable(const MaskGraph& g, int x) {
  const Mask targets = g.open[x];
  if (targets == 0) return true;
  Mask reach = 0;
  for (Mask r = targets; r; r &= r - 1) reach |= g.open[lowest(r)];
  const Mask candidates = reach & ~g.closed[x];
  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const {
      return std::hash<Mask>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
  };
  std::unordered_set<std::pair<Mask, Mask>, PairHash> dead;
  std::function<bool(Mask, Mask)> rec = [&](Mask uncovered, Mask allowed) {
    if (uncovered == 0) return true;
    if (dead.contains({uncovered, allowed})) return false;
    const int y = lowest(uncovered);
    for (Mask opts = g.open[y] & allowed; opts; opts &= opts - 1) {
      const int c = lowest(opts);
      if (rec(uncovered & ~g.open[c], allowed & ~g.closed[c])) return true;
      allowed &= ~bit(c);
    }
    dead.insert({uncovered, allowed});
    return false;
  };
  return rec(targets, candidates);
}

inline VertexSet to_set(std::size_t order, Mask m) { return VertexSet::from_mask(order, m); }

inline Mask to_mask(const Graph& g, const VertexSet& s, std::string_view op) {
  if (s.host_order() != g.order()) {
    throw InvalidVertexError(std::string(op) + ": vertex set over order " +
                             std::to_string(s.host_order()) + " used with graph of order " +
                             std::to_string(g.order()));
  }
  return s.to_mask();
}

struct ComponentValue {
  int value;
  Mask witness;
};

/// Applies `fn(MaskGraph) -> ComponentValue` to each component and sums
/// the values, lifting witnesses back to g.
template <class Fn>
std::pair<std::size_t, VertexSet> sum_over_components(const Graph& g, Fn&& fn) {
  std::size_t total = 0;
  VertexSet witness(g.order());
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const ComponentValue cv = fn(MaskGraph(sub.graph));
    total += static_cast<std::size_t>(cv.value);
    witness |= sub.lift(to_set(sub.graph.order(), cv.witness), g.order());
  }
  return {total, witness};
}

inline ComponentValue component_gamma(const MaskGraph& mg) {
  const int gamma = domination_number_bb(mg);
  return {gamma, least_minimum_dominating(mg, gamma)};
}

inline ComponentValue component_upper_gamma(const MaskGraph& mg) {
  int best = 0;
  Mask witness = 0;
  auto visit = [&](Mask m) {
    const int s = popcount(m);
    if (s > best || (s == best && lex_less(m, witness))) {
      best = s;
      witness = m;
    }
    return true;
  };
  MinimalDominatingEnumerator<decltype(visit)> e(mg, visit);
  e.set_floor(&best);
  e.run();
  return {best, witness};
}

}  // namespace detail

inline bool is_dominating(const Graph& g, const VertexSet& d) {
  return neighborhood(g, d, true) == g.vertices();
}

/// Dominating and every member has a private neighbor.
inline bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  return is_dominating(g, d) && is_irredundant(g, d);
}

/// Scans `order` once and drops each vertex whose removal keeps the set
/// dominating. The result is a minimal dominating subset of d.
inline VertexSet greedy_minimalize(const Graph& g, const VertexSet& d, std::span<const Vertex> order) {
  if (!is_dominating(g, d)) {
    throw PreconditionError("greedy_minimalize: " + d.to_string() + " does not dominate");
  }
  VertexSet seen(g.order());
  for (Vertex v : order) {
    if (!d.contains(v) || seen.contains(v)) {
      throw PreconditionError("greedy_minimalize: order is not a permutation of " + d.to_string());
    }
    seen.insert(v);
  }
  if (seen != d) throw PreconditionError("greedy_minimalize: order misses members of " + d.to_string());
  VertexSet current = d;
  for (Vertex v : order) {
    current.erase(v);
    if (!is_dominating(g, current)) current.insert(v);
  }
  return current;
}

/// Every minimal dominating set, sorted by (size, lexicographic members).
inline std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g,
                                                                const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "enumerate_minimal_dominating_sets");
  const detail::MaskGraph mg(g);
  std::vector<detail::Mask> masks;
  detail::for_each_minimal_dominating(mg, [&](detail::Mask m) {
    masks.push_back(m);
    return true;
  });
  std::sort(masks.begin(), masks.end(), detail::size_lex_less);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(detail::to_set(g.order(), m));
  return out;
}

/// Every minimum dominating set in lexicographic order.
inline std::vector<VertexSet> minimum_dominating_sets(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "minimum_dominating_sets");
  const detail::MaskGraph mg(g);
  const int gamma = detail::domination_number_bb(mg);
  std::vector<VertexSet> out;
  detail::for_each_dominating_of_size(mg, gamma, [&](detail::Mask m) {
    out.push_back(detail::to_set(g.order(), m));
    return true;
  });
  return out;
}

/// Every independent set (the empty set included), in search order.
inline std::vector<VertexSet> independent_sets(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "independent_sets");
  const detail::MaskGraph mg(g);
  std::vector<VertexSet> out;
  detail::for_each_independent(mg, [&](detail::Mask m) { out.push_back(detail::to_set(g.order(), m)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// An invariant value together with the lexicographically least set
/// attaining it.
struct Attained {
  std::size_t value;
  VertexSet witness;
};

inline Attained domination_number(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "domination_number");
  auto [v, w] = detail::sum_over_components(g, detail::component_gamma);
  return {v, std::move(w)};
}

inline Attained upper_domination_number(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "upper_domination_number");
  auto [v, w] = detail::sum_over_components(g, detail::component_upper_gamma);
  return {v, std::move(w)};
}

struct IndependenceNumbers {
  Attained ind_dom;       // i(G)
  Attained independence;  // α(G)
};

inline IndependenceNumbers independence_numbers(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "independence_numbers");
  auto smallest = detail::sum_over_components(g, [](const detail::MaskGraph& mg) {
    detail::ComponentValue best{65, 0};
    detail::for_each_maximal_independent(mg, [&](detail::Mask m) {
      const int s = detail::popcount(m);
      if (s < best.value || (s == best.value && detail::lex_less(m, best.witness))) best = {s, m};
    });
    return best;
  });
  auto largest = detail::sum_over_components(g, [](const detail::MaskGraph& mg) {
    detail::ComponentValue best{0, 0};
    detail::for_each_maximal_independent(mg, [&](detail::Mask m) {
      const int s = detail::popcount(m);
      if (s > best.value || (s == best.value && detail::lex_less(m, best.witness))) best = {s, m};
    });
    return best;
  });
  return {{smallest.first, std::move(smallest.second)}, {largest.first, std::move(largest.second)}};
}

/// γ ≤ i ≤ α ≤ Γ with witnesses.
struct InvariantReport {
  std::size_t gamma = 0;
  std::size_t ind_dom = 0;
  std::size_t independence = 0;
  std::size_t upper_gamma = 0;
  VertexSet gamma_witness;
  VertexSet ind_dom_witness;
  VertexSet independence_witness;
  VertexSet upper_gamma_witness;
  bool well_dominated = false;
  bool well_covered = false;
};

inline InvariantReport domination_chain(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "domination_chain");
  Attained gamma = domination_number(g, limits);
  IndependenceNumbers ind = independence_numbers(g, limits);
  Attained upper = upper_domination_number(g, limits);
  InvariantReport r;
  r.gamma = gamma.value;
  r.ind_dom = ind.ind_dom.value;
  r.independence = ind.independence.value;
  r.upper_gamma = upper.value;
  r.gamma_witness = std::move(gamma.witness);
  r.ind_dom_witness = std::move(ind.ind_dom.witness);
  r.independence_witness = std::move(ind.independence.witness);
  r.upper_gamma_witness = std::move(upper.witness);
  r.well_dominated = r.gamma == r.upper_gamma;
  r.well_covered = r.ind_dom == r.independence;
  if (!(r.gamma <= r.ind_dom && r.ind_dom <= r.independence && r.independence <= r.upper_gamma)) {
    throw std::logic_error("domination chain violated: " + std::to_string(r.gamma) + "," +
                           std::to_string(r.ind_dom) + "," + std::to_string(r.independence) + "," +
                           std::to_string(r.upper_gamma));
  }
  return r;
}

/// γ(G) = Γ(G). Stops at the first minimal dominating set larger than γ.
inline bool is_well_dominated(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "is_well_dominated");
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const detail::MaskGraph mg(sub.graph);
    const int gamma = detail::domination_number_bb(mg);
    bool uniform = true;
    detail::for_each_minimal_dominating(
        mg,
        [&](detail::Mask m) {
          uniform = detail::popcount(m) == gamma;
          return uniform;
        },
        gamma + 1);
    if (!uniform) return false;
  }
  return true;
}

/// The empty remnant of G - N[M] counts as well-dominated.
inline bool is_well_dominated(const std::optional<InducedSubgraph>& remnant,
                              const EngineLimits& limits = {}) {
  return !remnant || is_well_dominated(remnant->graph, limits);
}

inline bool is_well_covered(const Graph& g, const EngineLimits& limits = {}) {
  const IndependenceNumbers ind = independence_numbers(g, limits);
  return ind.ind_dom.value == ind.independence.value;
}

/// Vertices x left isolated in G - N[I] by some independent set I.
inline VertexSet isolatable_vertices(const Graph& g, const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "isolatable_vertices");
  const detail::MaskGraph mg(g);
  VertexSet out(g.order());
  for (int x = 0; x < mg.n; ++x) {
    if (detail::is_isolatable(mg, x)) out.insert(static_cast<Vertex>(x));
  }
  return out;
}

/// c(D) = {x ∈ D : pn[x,D] = {x}}.
inline VertexSet c_set(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) throw PreconditionError("c_set: " + d.to_string() + " does not dominate");
  VertexSet out(g.order());
  d.for_each([&](Vertex x) {
    VertexSet pn = private_neighborhood(g, x, d);
    if (pn.size() == 1 && pn.contains(x)) out.insert(x);
  });
  return out;
}

/// Lexicographically least minimum dominating set in which every member
/// has an external private neighbor. Such a set exists whenever there are
/// no isolated vertices; failing to find one is an internal error.
inline VertexSet open_irredundant_minimum_dominating_set(const Graph& g,
                                                         const EngineLimits& limits = {}) {
  detail::check_cap(g.order(), limits, "open_irredundant_minimum_dominating_set");
  if (degree_bounds(g).min_degree == 0) {
    throw PreconditionError("open_irredundant_minimum_dominating_set: graph has an isolated vertex");
  }
  const detail::MaskGraph mg(g);
  const int gamma = static_cast<int>(domination_number(g, limits).value);
  std::optional<detail::Mask> found;
  detail::for_each_dominating_of_size(mg, gamma, [&](detail::Mask m) {
    for (detail::Mask r = m; r; r &= r - 1) {
      const int u = detail::lowest(r);
      if ((mg.open[u] & ~mg.closed_union(m & ~detail::bit(u))) == 0) return true;
    }
    found = m;
    return false;
  });
  if (!found) {
    throw std::logic_error("no open irredundant minimum dominating set found on an isolate-free graph");
  }
  return detail::to_set(g.order(), *found);
}

}  // namespace domsuite
