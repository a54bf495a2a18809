// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domsuite/engine.hpp"
#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"

namespace domsuite {

enum class StructureClass { complete, path, cycle, star, other };

inline std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::complete:
      return "complete";
    case StructureClass::path:
      return "path";
    case StructureClass::cycle:
      return "cycle";
    case StructureClass::star:
      return "star";
    case StructureClass::other:
      return "other";
  }
  return "?";
}

/// Overlaps resolve as complete > cycle > path > star (K3 is complete,
/// P3 is a path).
inline StructureClass classify_structure(const Graph& g) {
  const std::size_t n = g.order();
  const DegreeBounds b = degree_bounds(g);
  if (b.min_degree == n - 1) return StructureClass::complete;
  if (!is_connected(g)) return StructureClass::other;
  if (n >= 3 && b.min_degree == 2 && b.max_degree == 2) return StructureClass::cycle;
  if (b.max_degree <= 2 && g.size() == n - 1) return StructureClass::path;
  if (b.max_degree == n - 1 && g.size() == n - 1) return StructureClass::star;
  return StructureClass::other;
}

inline bool is_complete(const Graph& g) { return classify_structure(g) == StructureClass::complete; }

inline bool is_complete_of_order(const Graph& g, std::size_t n) {
  return g.order() == n && is_complete(g);
}

inline bool is_cycle_of_order(const Graph& g, std::size_t n) {
  return g.order() == n && classify_structure(g) == StructureClass::cycle;
}

inline bool is_path_of_order(const Graph& g, std::size_t n) {
  return g.order() == n && classify_structure(g) == StructureClass::path;
}

/// If H = F ⊙ K1 for a connected F, returns F (support vertices in
/// ascending order of their index in H). K2 yields F = K1.
inline std::optional<Graph> recognize_corona(const Graph& h) {
  const std::size_t n = h.order();
  if (n % 2 != 0) return std::nullopt;
  if (n == 2) {
    if (h.size() == 1) return make_named(GraphKind::complete, 1);
    return std::nullopt;
  }
  const std::size_t k = n / 2;
  VertexSet leaves(n);
  VertexSet supports(n);
  for (Vertex v = 0; v < n; ++v) {
    if (h.degree(v) == 1) {
      leaves.insert(v);
      supports |= h.neighbors(v);
    }
  }
  if (leaves.size() != k || supports.size() != k || leaves.intersects(supports)) return std::nullopt;
  bool one_leaf_each = true;
  supports.for_each([&](Vertex s) { one_leaf_each = one_leaf_each && (h.neighbors(s) & leaves).size() == 1; });
  if (!one_leaf_each) return std::nullopt;
  InducedSubgraph f = induced_subgraph(h, supports);
  if (!is_connected(f.graph)) return std::nullopt;
  return std::move(f.graph);
}

enum class Verdict { well_dominated, not_well_dominated, out_of_theorem_scope };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::well_dominated:
      return "WellDominated";
    case Verdict::not_well_dominated:
      return "NotWellDominated";
    case Verdict::out_of_theorem_scope:
      return "OutOfTheoremScope";
  }
  return "?";
}

struct RecognitionVerdict {
  Verdict verdict = Verdict::out_of_theorem_scope;
  std::string rule;                  // nonempty unless out of scope
  std::optional<Graph> corona_base;  // F when the K2 × (F ⊙ K1) case fired
  std::string note;
};

namespace detail {

inline bool connected_nontrivial(const Graph& g) { return g.order() >= 2 && is_connected(g); }

inline std::optional<RecognitionVerdict> direct_k2_case(const Graph& k2, const Graph& other) {
  if (!is_complete_of_order(k2, 2)) return std::nullopt;
  if (is_cycle_of_order(other, 4)) return RecognitionVerdict{Verdict::well_dominated, "K2 × C4", {}, {}};
  if (auto f = recognize_corona(other)) {
    RecognitionVerdict v{Verdict::well_dominated, "K2 × (F ⊙ K1), F connected", std::move(f), {}};
    if (v.corona_base->order() == 1) v.note = "corona base F = K1";
    return v;
  }
  return std::nullopt;
}

}  // namespace detail

/// G × H for connected G, H is well-dominated iff it is K3 × K3, K2 × C4,
/// or K2 × (F ⊙ K1) with F connected.
inline RecognitionVerdict direct_product_well_dominated(const Graph& g, const Graph& h) {
  if (!detail::connected_nontrivial(g) || !detail::connected_nontrivial(h)) {
    return {Verdict::out_of_theorem_scope, {}, {}, "factors must be connected and nontrivial"};
  }
  if (is_complete_of_order(g, 3) && is_complete_of_order(h, 3)) {
    return {Verdict::well_dominated, "K3 × K3", {}, {}};
  }
  if (auto v = detail::direct_k2_case(g, h)) return *v;
  if (auto v = detail::direct_k2_case(h, g)) return *v;
  return {Verdict::not_well_dominated, "not K3 × K3, K2 × C4, or K2 × (F ⊙ K1)", {}, {}};
}

/// K_m □ H for connected nontrivial H is well-dominated iff (m ≠ 3 and
/// H = K_m) or (m = 3 and H ∈ {K3, P3}).
inline RecognitionVerdict cartesian_with_complete_well_dominated(std::size_t m, const Graph& h) {
  if (m < 2) throw PreconditionError("cartesian_with_complete_well_dominated: m must be at least 2");
  if (!detail::connected_nontrivial(h)) {
    return {Verdict::out_of_theorem_scope, {}, {}, "H must be connected and nontrivial"};
  }
  if (m == 3) {
    const bool wd = is_complete_of_order(h, 3) || is_path_of_order(h, 3);
    return {wd ? Verdict::well_dominated : Verdict::not_well_dominated, "m=3 and H ∈ {K3,P3}", {}, {}};
  }
  const bool wd = is_complete_of_order(h, m);
  return {wd ? Verdict::well_dominated : Verdict::not_well_dominated, "m≠3 and H=K_m", {}, {}};
}

/// K_n ⊠ H is well-dominated iff H is. This is the one recognizer that
/// needs the exact engine.
inline RecognitionVerdict strong_with_complete_well_dominated(std::size_t n, const Graph& h,
                                                              const EngineLimits& limits = {}) {
  if (n < 1) throw PreconditionError("strong_with_complete_well_dominated: n must be at least 1");
  const bool wd = is_well_dominated(h, limits);
  RecognitionVerdict v{wd ? Verdict::well_dominated : Verdict::not_well_dominated,
                       "K_n ⊠ H well-dominated iff H well-dominated", {}, {}};
  if (n == 1 || h.order() == 1) v.note = "trivial factor admitted (order-1 graphs accepted)";
  return v;
}

enum class ConditionStatus { holds, violated, not_applicable };

inline std::string_view to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::holds:
      return "holds";
    case ConditionStatus::violated:
      return "violated";
    case ConditionStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

struct ConditionOutcome {
  std::string id;
  ConditionStatus status;
  std::string witness;
};

enum class AuditStatus { ruled_out, not_ruled_out };

/// Necessary conditions for G □ H to be well-dominated. A single violated
/// entry rules the product out; passing every entry decides nothing.
struct ConditionAudit {
  std::vector<ConditionOutcome> outcomes;

  AuditStatus overall() const {
    for (const auto& o : outcomes) {
      if (o.status == ConditionStatus::violated) return AuditStatus::ruled_out;
    }
    return AuditStatus::not_ruled_out;
  }

  const ConditionOutcome* first_violation() const {
    for (const auto& o : outcomes) {
      if (o.status == ConditionStatus::violated) return &o;
    }
    return nullptr;
  }
};

inline ConditionAudit cartesian_necessary_conditions(const Graph& g, const Graph& h,
                                                     const EngineLimits& limits = {}) {
  if (!detail::connected_nontrivial(g) || !detail::connected_nontrivial(h)) {
    throw PreconditionError("cartesian_necessary_conditions: factors must be connected and nontrivial");
  }
  struct Factor {
    const Graph& graph;
    const char* tag;
    bool wd;
    std::size_t gamma;
  };
  Factor fs[] = {{g, "G", is_well_dominated(g, limits), domination_number(g, limits).value},
                 {h, "H", is_well_dominated(h, limits), domination_number(h, limits).value}};
  ConditionAudit audit;
  using S = ConditionStatus;

  audit.outcomes.push_back({"one-factor-well-dominated", fs[0].wd || fs[1].wd ? S::holds : S::violated,
                            fs[0].wd || fs[1].wd ? "" : "neither factor is well-dominated"});

  const std::size_t lhs = fs[0].gamma * h.order();
  const std::size_t rhs = fs[1].gamma * g.order();
  audit.outcomes.push_back(
      {"gamma-balance", lhs == rhs ? S::holds : S::violated,
       lhs == rhs ? "" : "γ(G)·n(H)=" + std::to_string(lhs) + " ≠ " + std::to_string(rhs) + "=γ(H)·n(G)"});

  for (const Factor& f : fs) {
    std::string witness;
    for (const VertexSet& d : minimum_dominating_sets(f.graph, limits)) {
      const VertexSet c = c_set(f.graph, d);
      if (!c.empty()) {
        witness = "D=" + d.to_string() + " c(D)=" + c.to_string();
        break;
      }
    }
    audit.outcomes.push_back({std::string("min-dominating-c-empty:") + f.tag,
                              witness.empty() ? S::holds : S::violated, witness});
  }

  for (const Factor& f : fs) {
    const std::string id = std::string("no-isolatables-if-well-dominated:") + f.tag;
    if (!f.wd) {
      audit.outcomes.push_back({id, S::not_applicable, ""});
      continue;
    }
    const VertexSet iso = isolatable_vertices(f.graph, limits);
    audit.outcomes.push_back({id, iso.empty() ? S::holds : S::violated,
                              iso.empty() ? "" : "isolatable " + iso.to_string()});
  }

  for (const Factor& f : fs) {
    const std::string id = std::string("min-degree-2-if-well-dominated:") + f.tag;
    if (!f.wd || f.graph.order() < 3) {
      audit.outcomes.push_back({id, S::not_applicable, ""});
      continue;
    }
    const std::size_t delta = degree_bounds(f.graph).min_degree;
    audit.outcomes.push_back({id, delta >= 2 ? S::holds : S::violated,
                              delta >= 2 ? "" : "δ=" + std::to_string(delta)});
  }
  return audit;
}

}  // namespace domsuite
