// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "domsuite/check_record.hpp"
#include "domsuite/engine.hpp"
#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"
#include "domsuite/graph_io.hpp"
#include "domsuite/isomorphism.hpp"
#include "domsuite/products.hpp"
#include "domsuite/recognizers.hpp"

namespace domsuite {

struct HarnessLimits {
  EngineLimits engine;
  IsomorphismOptions isomorphism;
  ProductLimits product;
};

/// "K3", "P4", "C5", "K1,3", or the graph6 string for anything else.
inline std::string structure_label(const Graph& g) {
  const std::string n = std::to_string(g.order());
  switch (classify_structure(g)) {
    case StructureClass::complete:
      return "K" + n;
    case StructureClass::cycle:
      return "C" + n;
    case StructureClass::path:
      return "P" + n;
    case StructureClass::star:
      return "K1," + std::to_string(g.order() - 1);
    case StructureClass::other:
      break;
  }
  return emit_graph6(g);
}

namespace detail {

inline std::string pair_instance(const Graph& g, const Graph& h) {
  return "G=" + emit_graph6(g) + " H=" + emit_graph6(h);
}

/// D × V(H) in the row-major product numbering.
inline VertexSet lift_left(const VertexSet& d, std::size_t right_order) {
  VertexSet out(d.host_order() * right_order);
  d.for_each([&](Vertex g) {
    for (Vertex h = 0; h < right_order; ++h) out.insert(pair_index(g, h, right_order));
  });
  return out;
}

/// Stable 64-bit FNV-1a, used for reproducible sampling.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string values(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  std::string out;
  for (auto [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace detail

/// For a well-dominated G, every G - N[M] with M independent must be
/// well-dominated. Other inputs yield one vacuous pass.
inline std::vector<CheckRecord> check_hereditary(const Graph& g, const HarnessLimits& limits = {}) {
  const std::string base = "G=" + emit_graph6(g);
  if (!is_well_dominated(g, limits.engine)) return {CheckRecord::ok("obs-hereditary", base)};
  std::vector<CheckRecord> out;
  for (const VertexSet& m : independent_sets(g, limits.engine)) {
    const auto remnant = remove_closed_neighborhood(g, m);
    const std::string inst = base + " M=" + m.to_string() + (remnant ? "" : " remnant=empty");
    if (is_well_dominated(remnant, limits.engine)) {
      out.push_back(CheckRecord::ok("obs-hereditary", inst));
    } else {
      const Attained gamma = domination_number(remnant->graph, limits.engine);
      const Attained upper = upper_domination_number(remnant->graph, limits.engine);
      out.push_back(CheckRecord::fail(
          "obs-hereditary", inst,
          "G-N[M]=" + emit_graph6(remnant->graph) + " " +
              detail::values({{"γ", gamma.value}, {"Γ", upper.value}})));
    }
  }
  return out;
}

/// γ(G⊠H) ≤ γ(G)γ(H), Γ(G⊠H) ≥ Γ(G)Γ(H), γ(G⊠H) ≥ max{γ(G),γ(H)}, and a
/// well-dominated G⊠H has well-dominated factors.
inline CheckRecord check_strong_bounds(const Graph& g, const Graph& h, const HarnessLimits& limits = {}) {
  const Graph p = strong_product(g, h, limits.product);
  const std::size_t gg = domination_number(g, limits.engine).value;
  const std::size_t gh = domination_number(h, limits.engine).value;
  const std::size_t gp = domination_number(p, limits.engine).value;
  const std::size_t ug = upper_domination_number(g, limits.engine).value;
  const std::size_t uh = upper_domination_number(h, limits.engine).value;
  const std::size_t up = upper_domination_number(p, limits.engine).value;
  std::string why;
  if (gp > gg * gh) why += "γ(G⊠H)>γ(G)γ(H);";
  if (up < ug * uh) why += "Γ(G⊠H)<Γ(G)Γ(H);";
  if (gp < std::max(gg, gh)) why += "γ(G⊠H)<max(γ(G),γ(H));";
  if (gp == up && (gg != ug || gh != uh)) why += "well-dominated product with a non-well-dominated factor;";
  const std::string inst = detail::pair_instance(g, h);
  if (why.empty()) return CheckRecord::ok("strong-bounds", inst);
  return CheckRecord::fail("strong-bounds", inst,
                           why + " " +
                               detail::values({{"γG", gg}, {"γH", gh}, {"γP", gp}, {"ΓG", ug}, {"ΓH", uh}, {"ΓP", up}}));
}

/// Direct-product lemmas for connected factors of order at least 3.
inline std::vector<CheckRecord> check_direct_lemmas(const Graph& g, const Graph& h,
                                                    const HarnessLimits& limits = {}) {
  if (g.order() < 3 || h.order() < 3 || !is_connected(g) || !is_connected(h)) {
    throw PreconditionError("check_direct_lemmas: factors must be connected of order at least 3");
  }
  const std::string inst = detail::pair_instance(g, h);
  const Graph p = direct_product(g, h, limits.product);
  std::vector<CheckRecord> out;

  if (is_well_dominated(p, limits.engine)) {
    const std::size_t gp = domination_number(p, limits.engine).value;
    const std::size_t gg = domination_number(g, limits.engine).value;
    const std::size_t gh = domination_number(h, limits.engine).value;
    const std::size_t ag = independence_numbers(g, limits.engine).independence.value;
    const std::size_t ah = independence_numbers(h, limits.engine).independence.value;
    const bool ok = gp == gg * h.order() && gp == gh * g.order() && gg == ag && gh == ah;
    out.push_back(ok ? CheckRecord::ok("lem-direct-gamma", inst)
                     : CheckRecord::fail("lem-direct-gamma", inst,
                                         detail::values({{"γP", gp}, {"γG", gg}, {"γH", gh}, {"αG", ag}, {"αH", ah}})));
    std::string bad;
    for (const Graph* f : {&g, &h}) {
      for (const VertexSet& d : minimum_dominating_sets(*f, limits.engine)) {
        if (!is_independent(*f, d)) {
          bad = (f == &g ? "G:" : "H:") + d.to_string();
          break;
        }
      }
      if (!bad.empty()) break;
    }
    out.push_back(bad.empty() ? CheckRecord::ok("cor-direct-minimum-independent", inst)
                              : CheckRecord::fail("cor-direct-minimum-independent", inst,
                                                  "dependent minimum dominating set " + bad));
  } else {
    out.push_back(CheckRecord::ok("lem-direct-gamma", inst));
    out.push_back(CheckRecord::ok("cor-direct-minimum-independent", inst));
  }

  for (const VertexSet& d : enumerate_minimal_dominating_sets(g, limits.engine)) {
    const VertexSet lifted = detail::lift_left(d, h.order());
    const bool minimal = is_minimal_dominating(p, lifted);
    const bool independent = is_independent(g, d);
    const std::string di = inst + " D=" + d.to_string();
    if (minimal == independent) {
      out.push_back(CheckRecord::ok("lem-direct-minimality", di));
    } else {
      out.push_back(CheckRecord::fail("lem-direct-minimality", di,
                                      std::string("D×V(H) minimal=") + (minimal ? "yes" : "no") +
                                          " D independent=" + (independent ? "yes" : "no")));
    }
  }
  return out;
}

/// Minimal dominating sets of G □ H built from open irredundant and c(D)
/// structure in G.
inline std::vector<CheckRecord> check_cartesian_constructions(const Graph& g, const Graph& h,
                                                              const HarnessLimits& limits = {}) {
  if (g.order() < 2 || h.order() < 2 || !is_connected(g) || !is_connected(h)) {
    throw PreconditionError("check_cartesian_constructions: factors must be connected and nontrivial");
  }
  const std::string inst = detail::pair_instance(g, h);
  const Graph p = cartesian_product(g, h, limits.product);
  const std::size_t nh = h.order();
  const auto g_minimal = enumerate_minimal_dominating_sets(g, limits.engine);
  const auto h_minimal = enumerate_minimal_dominating_sets(h, limits.engine);
  std::vector<CheckRecord> out;

  for (const VertexSet& d : g_minimal) {
    if (!is_open_irredundant(g, d)) continue;
    const VertexSet lifted = detail::lift_left(d, nh);
    const std::string di = inst + " D=" + d.to_string();
    const bool minimal = is_minimal_dominating(p, lifted);
    const bool open = is_open_irredundant(p, lifted);
    out.push_back(minimal && open
                      ? CheckRecord::ok("lem-minimal-construction", di)
                      : CheckRecord::fail("lem-minimal-construction", di,
                                          std::string("minimal=") + (minimal ? "yes" : "no") +
                                              " open-irredundant=" + (open ? "yes" : "no")));
  }

  for (const VertexSet& d : g_minimal) {
    const VertexSet c = c_set(g, d);
    if (c.empty()) continue;
    c.for_each([&](Vertex u) {
      VertexSet rest = d;
      rest.erase(u);
      const VertexSet base = detail::lift_left(rest, nh);
      for (const VertexSet& s : h_minimal) {
        VertexSet a = base;
        s.for_each([&](Vertex y) { a.insert(pair_index(u, y, nh)); });
        const std::string di = inst + " D=" + d.to_string() + " u=" + std::to_string(u) + " S=" + s.to_string();
        const bool dominating = is_dominating(p, a);
        const bool need_minimal = c.size() == 1;
        const bool minimal = !need_minimal || is_minimal_dominating(p, a);
        out.push_back(dominating && minimal
                          ? CheckRecord::ok("lem-c-construction", di)
                          : CheckRecord::fail("lem-c-construction", di,
                                              std::string("dominating=") + (dominating ? "yes" : "no") +
                                                  (need_minimal ? std::string(" minimal=") + (minimal ? "yes" : "no") : "")));
      }
    });
  }
  return out;
}

/// (F ⊙ K1) × K2 ≅ (F × K2) ⊙ K1.
inline CheckRecord check_corona_direct_identity(const Graph& f, const HarnessLimits& limits = {}) {
  const Graph k2 = make_named(GraphKind::complete, 2);
  const Graph left = direct_product(corona(f, limits.product), k2, limits.product);
  const Graph right = corona(direct_product(f, k2, limits.product), limits.product);
  const std::string inst = "F=" + emit_graph6(f);
  if (are_isomorphic(left, right, limits.isomorphism)) return CheckRecord::ok("corona-direct-identity", inst);
  return CheckRecord::fail("corona-direct-identity", inst,
                           "(F⊙K1)×K2=" + emit_graph6(left) + " (F×K2)⊙K1=" + emit_graph6(right));
}

/// Soundness of the Cartesian necessary-condition filter on one pair: a
/// ruled-out product must not be well-dominated.
inline CheckRecord check_cartesian_filter(const Graph& g, const Graph& h, const HarnessLimits& limits = {}) {
  const ConditionAudit audit = cartesian_necessary_conditions(g, h, limits.engine);
  const std::string inst = detail::pair_instance(g, h);
  if (audit.overall() == AuditStatus::not_ruled_out) return CheckRecord::ok("cartesian-filter", inst);
  if (!is_well_dominated(cartesian_product(g, h, limits.product), limits.engine)) {
    return CheckRecord::ok("cartesian-filter", inst);
  }
  return CheckRecord::fail("cartesian-filter", inst,
                           "ruled out by " + audit.first_violation()->id + " yet well-dominated");
}

// ---------------------------------------------------------------------------
// Recognizer cross-validation

struct CrossValidationParams {
  /// m (Cartesian) or n (strong) values for the complete factor.
  std::vector<std::size_t> complete_orders;
  std::size_t min_factor_order = 2;
  std::size_t max_factor_order = 4;
  std::size_t max_product_order = 25;
  /// Direct only: pairs checked in addition to the corpus sweep.
  std::vector<std::pair<Graph, Graph>> extra_pairs;
};

struct CrossValidation {
  std::vector<CheckRecord> records;
  /// Instances the exact engine found well-dominated, e.g. "K3□P3".
  std::vector<std::string> well_dominated;
};

namespace detail {

inline CheckRecord compare_verdict(std::string check, std::string inst, const RecognitionVerdict& v,
                                   bool exact) {
  const bool claimed = v.verdict == Verdict::well_dominated;
  if (claimed == exact) return CheckRecord::ok(std::move(check), std::move(inst));
  return CheckRecord::fail(std::move(check), std::move(inst),
                           "recognizer=" + std::string(to_string(v.verdict)) + " (" + v.rule +
                               ") exact=" + (exact ? "WellDominated" : "NotWellDominated"));
}

template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, std::size_t workers, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  if (items.empty()) return results;
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace detail

inline CrossValidation cross_validate_recognizers(const Corpus& corpus, ProductKind kind,
                                                  const CrossValidationParams& params,
                                                  const HarnessLimits& limits = {},
                                                  std::size_t workers = 1) {
  struct Item {
    std::string check;
    std::string instance;
    std::string label;
    std::function<RecognitionVerdict()> recognize;
    std::function<Graph()> build;
  };
  std::vector<Item> items;
  std::vector<const Graph*> factors;
  for (const auto& e : corpus) {
    if (e.graph.order() >= params.min_factor_order && e.graph.order() <= params.max_factor_order &&
        is_connected(e.graph)) {
      factors.push_back(&e.graph);
    }
  }
  const ProductLimits plim = limits.product;
  const EngineLimits elim = limits.engine;
  switch (kind) {
    case ProductKind::direct: {
      auto add = [&](const Graph& g, const Graph& h) {
        if (g.order() * h.order() > params.max_product_order) return;
        items.push_back({"xval-direct", detail::pair_instance(g, h),
                         structure_label(g) + "×" + structure_label(h),
                         [g, h] { return direct_product_well_dominated(g, h); },
                         [g, h, plim] { return direct_product(g, h, plim); }});
      };
      // Ordered pairs: the recognizer must not depend on factor order.
      for (const Graph* g : factors)
        for (const Graph* h : factors) add(*g, *h);
      for (const auto& [g, h] : params.extra_pairs) add(g, h);
      break;
    }
    case ProductKind::cartesian:
      for (std::size_t m : params.complete_orders) {
        const Graph km = make_named(GraphKind::complete, m);
        for (const Graph* h : factors) {
          if (m * h->order() > params.max_product_order) continue;
          items.push_back({"xval-cartesian-complete", "m=" + std::to_string(m) + " H=" + emit_graph6(*h),
                           "K" + std::to_string(m) + "□" + structure_label(*h),
                           [m, h = *h] { return cartesian_with_complete_well_dominated(m, h); },
                           [km, h = *h, plim] { return cartesian_product(km, h, plim); }});
        }
      }
      break;
    case ProductKind::strong:
      for (std::size_t n : params.complete_orders) {
        const Graph kn = make_named(GraphKind::complete, n);
        for (const Graph* h : factors) {
          if (n * h->order() > params.max_product_order) continue;
          items.push_back({"xval-strong-complete", "n=" + std::to_string(n) + " H=" + emit_graph6(*h),
                           "K" + std::to_string(n) + "⊠" + structure_label(*h),
                           [n, h = *h, elim] { return strong_with_complete_well_dominated(n, h, elim); },
                           [kn, h = *h, plim] { return strong_product(kn, h, plim); }});
        }
      }
      break;
  }
  std::set<std::string> seen;
  std::erase_if(items, [&](const Item& it) { return !seen.insert(it.check + it.instance).second; });
  auto outcomes = detail::parallel_map(items, workers, [&](const Item& it) {
    const RecognitionVerdict v = it.recognize();
    if (v.verdict == Verdict::out_of_theorem_scope) return std::pair<std::optional<CheckRecord>, bool>{};
    const bool exact = is_well_dominated(it.build(), elim);
    return std::pair<std::optional<CheckRecord>, bool>{detail::compare_verdict(it.check, it.instance, v, exact),
                                                       exact};
  });
  CrossValidation out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!outcomes[i].first) continue;
    out.records.push_back(*outcomes[i].first);
    if (outcomes[i].second) out.well_dominated.push_back(items[i].label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture hunt

struct HuntOptions {
  std::size_t max_order = 4;
  std::optional<std::filesystem::path> resume_log;
  std::size_t workers = 1;
  /// Every pair whose id hashes to 0 modulo this is re-checked exactly
  /// when the filter prunes it (5% by default).
  std::uint64_t audit_modulus = 20;
};

/// Searches connected nontrivial pairs (G, H) with G □ H well-dominated
/// and neither factor complete. Pairs that produce no record are appended
/// to the resume log and skipped on the next run, so an interrupted hunt
/// resumes to the same report.
inline std::vector<CheckRecord> hunt_conjecture(const Corpus& corpus, const HuntOptions& opts,
                                                const HarnessLimits& limits = {}) {
  std::vector<const CorpusEntry*> graphs;
  for (const auto& e : corpus) {
    if (e.graph.order() >= 2 && e.graph.order() <= opts.max_order && is_connected(e.graph)) {
      graphs.push_back(&e);
    }
  }
  if (graphs.empty()) return {};
  std::set<std::string> done;
  if (opts.resume_log && std::filesystem::exists(*opts.resume_log)) {
    std::ifstream in(*opts.resume_log);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) done.insert(line);
    }
  }
  struct Pair {
    const Graph* g;
    const Graph* h;
    std::string id;
  };
  std::vector<Pair> pairs;
  std::size_t skipped_over_cap = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      const Graph& g = graphs[i]->graph;
      const Graph& h = graphs[j]->graph;
      if (g.order() * h.order() > std::min(limits.engine.max_n, kEngineHardLimit)) {
        ++skipped_over_cap;
        continue;
      }
      pairs.push_back({&g, &h, detail::pair_instance(g, h)});
    }
  }
  const std::size_t total = pairs.size();
  std::erase_if(pairs, [&](const Pair& p) { return done.contains(p.id); });

  std::ofstream log;
  if (opts.resume_log) log.open(*opts.resume_log, std::ios::app);
  std::mutex log_mutex;

  auto results = detail::parallel_map(pairs, opts.workers, [&](const Pair& p) {
    std::optional<CheckRecord> rec;
    const ConditionAudit audit = cartesian_necessary_conditions(*p.g, *p.h, limits.engine);
    if (audit.overall() == AuditStatus::ruled_out) {
      if (detail::fnv1a(p.id) % opts.audit_modulus == 0) {
        const bool wd = is_well_dominated(cartesian_product(*p.g, *p.h, limits.product), limits.engine);
        rec = wd ? CheckRecord::fail("conj-filter-audit", p.id,
                                     "pruned by " + audit.first_violation()->id + " yet well-dominated")
                 : CheckRecord::ok("conj-filter-audit", p.id);
      }
    } else if (is_well_dominated(cartesian_product(*p.g, *p.h, limits.product), limits.engine)) {
      const bool complete_factor = is_complete(*p.g) || is_complete(*p.h);
      const std::string inst = p.id + " (" + structure_label(*p.g) + "□" + structure_label(*p.h) + ")";
      rec = complete_factor ? CheckRecord::ok("conj-wd-product", inst)
                            : CheckRecord::fail("conj-wd-product", inst, "counterexample: neither factor is complete");
    }
    if (!rec && log.is_open()) {
      std::lock_guard lock(log_mutex);
      log << p.id << '\n' << std::flush;
    }
    return rec;
  });

  std::vector<CheckRecord> out;
  std::string counterexamples;
  for (auto& r : results) {
    if (!r) continue;
    if (r->check == "conj-wd-product" && !r->pass) counterexamples += (counterexamples.empty() ? "" : "; ") + r->instance;
    out.push_back(std::move(*r));
  }
  const std::string summary = "max-order=" + std::to_string(opts.max_order) + " pairs=" + std::to_string(total) +
                              " over-cap=" + std::to_string(skipped_over_cap);
  out.push_back(counterexamples.empty() ? CheckRecord::ok("conj-hunt-summary", summary)
                                        : CheckRecord::fail("conj-hunt-summary", summary, counterexamples));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

/// Corpus scope of each suite. Defaults are the sweep sizes the acceptance
/// suite runs.
struct SuiteScope {
  std::size_t hereditary_max_order = 7;
  std::size_t strong_bounds_max_product = 16;
  std::size_t direct_lemmas_min_order = 3;
  std::size_t direct_lemmas_max_order = 4;
  std::size_t cartesian_constructions_max_order = 5;
  std::size_t corona_identity_max_order = 5;
  std::size_t xval_direct_max_order = 4;
  std::size_t xval_cartesian_max_order = 5;
  std::size_t xval_cartesian_max_product = 20;
  std::size_t xval_strong_max_order = 6;
  std::size_t hunt_max_order = 4;
  std::size_t cartesian_filter_max_order = 4;
};

struct SuiteOptions {
  HarnessLimits limits;
  SuiteScope scope;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> resume_log;
};

struct SuiteResult {
  std::vector<CheckRecord> records;  // sorted by (check, instance)
  bool pass = true;
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> ids = {
      "all",           "cartesian-constructions", "cartesian-filter", "chain",
      "conj-hunt",     "corona-identity",         "direct-lemmas",    "graph6-roundtrip",
      "hereditary",    "open-irredundant",        "paper-values",     "self-test-violation",
      "strong-bounds", "xval-cartesian",          "xval-direct",      "xval-strong"};
  return ids;
}

/// (K2, C4), (K3, K3), and (K2, F ⊙ K1) for every connected F in the
/// corpus with n(F) ≤ max_f.
inline std::vector<std::pair<Graph, Graph>> direct_extra_pairs(const Corpus& corpus, std::size_t max_f) {
  const Graph k2 = make_named(GraphKind::complete, 2);
  std::vector<std::pair<Graph, Graph>> out{{k2, make_named(GraphKind::cycle, 4)},
                                           {make_named(GraphKind::complete, 3), make_named(GraphKind::complete, 3)}};
  for (const auto& e : corpus) {
    if (e.graph.order() <= max_f && is_connected(e.graph)) out.push_back({k2, corona(e.graph)});
  }
  return out;
}

namespace detail {

inline std::string chain_failure(const Graph& g, const InvariantReport& r) {
  std::string why;
  if (!(r.gamma <= r.ind_dom && r.ind_dom <= r.independence && r.independence <= r.upper_gamma)) why += "chain;";
  if (r.gamma_witness.size() != r.gamma || !is_dominating(g, r.gamma_witness)) why += "γ-witness;";
  for (auto [w, v, tag] : {std::tuple{&r.ind_dom_witness, r.ind_dom, "i-witness;"},
                           std::tuple{&r.independence_witness, r.independence, "α-witness;"}}) {
    // A maximal independent set is exactly an independent dominating set,
    // and must also be minimal dominating.
    if (w->size() != v || !is_independent(g, *w) || !is_dominating(g, *w) || !is_minimal_dominating(g, *w)) {
      why += tag;
    }
  }
  if (r.upper_gamma_witness.size() != r.upper_gamma || !is_minimal_dominating(g, r.upper_gamma_witness)) {
    why += "Γ-witness;";
  }
  if (r.well_dominated && !r.well_covered) why += "well-dominated but not well-covered;";
  if (why.empty()) return why;
  return why + " " + values({{"γ", r.gamma}, {"i", r.ind_dom}, {"α", r.independence}, {"Γ", r.upper_gamma}});
}

using Task = std::function<std::vector<CheckRecord>()>;

}  // namespace detail

/// Runs the named suites over the corpus and returns the sorted records.
/// The record set does not depend on the worker count.
inline SuiteResult run_suite(const std::vector<std::string>& suite_ids, const Corpus& corpus,
                             const SuiteOptions& opts) {
  std::set<std::string> ids;
  for (const auto& id : suite_ids) {
    if (std::find(known_suites().begin(), known_suites().end(), id) == known_suites().end()) {
      throw UsageError("unknown suite id \"" + id + "\"");
    }
    if (id == "all") {
      for (const auto& k : known_suites()) {
        if (k != "all" && k != "self-test-violation") ids.insert(k);
      }
    } else {
      ids.insert(id);
    }
  }
  const HarnessLimits& lim = opts.limits;
  const SuiteScope& sc = opts.scope;
  std::vector<detail::Task> tasks;
  std::vector<const CorpusEntry*> connected;
  for (const auto& e : corpus) {
    if (is_connected(e.graph)) connected.push_back(&e);
  }
  auto connected_between = [&](std::size_t lo, std::size_t hi) {
    std::vector<const Graph*> out;
    for (const auto* e : connected) {
      if (e->graph.order() >= lo && e->graph.order() <= hi) out.push_back(&e->graph);
    }
    return out;
  };

  if (ids.contains("chain")) {
    for (const auto& e : corpus) {
      tasks.push_back([&e, &lim]() -> std::vector<CheckRecord> {
        const InvariantReport r = domination_chain(e.graph, lim.engine);
        const std::string why = detail::chain_failure(e.graph, r);
        const std::string inst = "G=" + emit_graph6(e.graph);
        return {why.empty() ? CheckRecord::ok("chain", inst) : CheckRecord::fail("chain", inst, why)};
      });
    }
  }
  if (ids.contains("open-irredundant")) {
    for (const auto& e : corpus) {
      if (degree_bounds(e.graph).min_degree == 0) continue;
      tasks.push_back([&e, &lim]() -> std::vector<CheckRecord> {
        const std::string inst = "G=" + emit_graph6(e.graph);
        try {
          const VertexSet d = open_irredundant_minimum_dominating_set(e.graph, lim.engine);
          const std::size_t gamma = domination_number(e.graph, lim.engine).value;
          if (d.size() == gamma && is_dominating(e.graph, d) && is_open_irredundant(e.graph, d)) {
            return {CheckRecord::ok("prop-open-irredundant", inst)};
          }
          return {CheckRecord::fail("prop-open-irredundant", inst, "invalid set " + d.to_string())};
        } catch (const std::logic_error& err) {
          return {CheckRecord::fail("prop-open-irredundant", inst, err.what())};
        }
      });
    }
  }
  if (ids.contains("hereditary")) {
    for (const Graph* g : connected_between(1, sc.hereditary_max_order)) {
      tasks.push_back([g, &lim] { return check_hereditary(*g, lim); });
    }
  }
  if (ids.contains("strong-bounds")) {
    const auto fs = connected_between(2, sc.strong_bounds_max_product / 2);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i; j < fs.size(); ++j) {
        if (fs[i]->order() * fs[j]->order() > sc.strong_bounds_max_product) continue;
        tasks.push_back([g = fs[i], h = fs[j], &lim]() -> std::vector<CheckRecord> {
          return {check_strong_bounds(*g, *h, lim)};
        });
      }
    }
  }
  if (ids.contains("direct-lemmas")) {
    const auto fs = connected_between(std::max<std::size_t>(3, sc.direct_lemmas_min_order), sc.direct_lemmas_max_order);
    for (const Graph* g : fs)
      for (const Graph* h : fs) tasks.push_back([g, h, &lim] { return check_direct_lemmas(*g, *h, lim); });
  }
  if (ids.contains("cartesian-constructions")) {
    static const std::vector<Graph> partners = {make_named(GraphKind::complete, 2),
                                                make_named(GraphKind::complete, 3), make_named(GraphKind::path, 3)};
    for (const Graph* g : connected_between(2, sc.cartesian_constructions_max_order))
      for (const Graph& h : partners)
        tasks.push_back([g, &h, &lim] { return check_cartesian_constructions(*g, h, lim); });
  }
  if (ids.contains("cartesian-filter")) {
    const auto fs = connected_between(2, sc.cartesian_filter_max_order);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i; j < fs.size(); ++j) {
        tasks.push_back([g = fs[i], h = fs[j], &lim]() -> std::vector<CheckRecord> {
          return {check_cartesian_filter(*g, *h, lim)};
        });
      }
    }
  }
  if (ids.contains("corona-identity")) {
    // Both sides have order 4·n(F); the suite scope sets the cap it needs.
    auto corona_lim = std::make_shared<HarnessLimits>(lim);
    corona_lim->isomorphism.max_order =
        std::max(corona_lim->isomorphism.max_order, 4 * sc.corona_identity_max_order);
    for (const Graph* f : connected_between(1, sc.corona_identity_max_order)) {
      tasks.push_back([f, corona_lim]() -> std::vector<CheckRecord> {
        return {check_corona_direct_identity(*f, *corona_lim)};
      });
    }
  }
  if (ids.contains("graph6-roundtrip")) {
    for (const auto& e : corpus) {
      tasks.push_back([&e]() -> std::vector<CheckRecord> {
        const std::string emitted = emit_graph6(e.graph);
        const bool text_ok = e.record.empty() || emitted == e.record;
        const bool graph_ok = parse_graph6(emitted) == e.graph;
        if (text_ok && graph_ok) return {CheckRecord::ok("graph6-roundtrip", e.source_id)};
        return {CheckRecord::fail("graph6-roundtrip", e.source_id, "read \"" + e.record + "\" emitted \"" + emitted + "\"")};
      });
    }
  }
  if (ids.contains("paper-values")) {
    tasks.push_back([&lim]() -> std::vector<CheckRecord> {
      const Graph c5 = make_named(GraphKind::cycle, 5);
      const Graph k3 = make_named(GraphKind::complete, 3);
      struct Expect {
        std::string name;
        Graph g;
        std::size_t gamma, upper;
      };
      const Expect cases[] = {{"C5⊠C5", strong_product(c5, c5, lim.product), 4, 6},
                              {"K3□P4", cartesian_product(k3, make_named(GraphKind::path, 4), lim.product), 4, 6},
                              {"K3□C4", cartesian_product(k3, make_named(GraphKind::cycle, 4), lim.product), 3, 6}};
      std::vector<CheckRecord> out;
      for (const auto& c : cases) {
        const std::size_t gamma = domination_number(c.g, lim.engine).value;
        const std::size_t upper = upper_domination_number(c.g, lim.engine).value;
        out.push_back(gamma == c.gamma && upper == c.upper
                          ? CheckRecord::ok("paper-values", c.name)
                          : CheckRecord::fail("paper-values", c.name, detail::values({{"γ", gamma}, {"Γ", upper}})));
      }
      return out;
    });
  }
  if (ids.contains("self-test-violation")) {
    tasks.push_back([&lim]() -> std::vector<CheckRecord> {
      const Graph p3 = make_named(GraphKind::path, 3);
      if (is_well_dominated(p3, lim.engine)) return {CheckRecord::ok("self-test-violation", "P3")};
      return {CheckRecord::fail("self-test-violation", "P3",
                                detail::values({{"γ", domination_number(p3, lim.engine).value},
                                                {"Γ", upper_domination_number(p3, lim.engine).value}}))};
    });
  }

  std::vector<CheckRecord> records;
  auto results = detail::parallel_map(tasks, opts.workers, [](const detail::Task& t) { return t(); });
  for (auto& rs : results) records.insert(records.end(), rs.begin(), rs.end());

  // Sweeps with their own internal parallelism.
  auto xval = [&](ProductKind kind, CrossValidationParams p) {
    auto cv = cross_validate_recognizers(corpus, kind, p, lim, opts.workers);
    records.insert(records.end(), cv.records.begin(), cv.records.end());
  };
  if (ids.contains("xval-direct")) {
    CrossValidationParams p;
    p.max_factor_order = sc.xval_direct_max_order;
    p.max_product_order = std::min(lim.engine.max_n, kEngineHardLimit);
    p.extra_pairs = direct_extra_pairs(corpus.filter_order(1, sc.xval_direct_max_order), sc.xval_direct_max_order);
    xval(ProductKind::direct, std::move(p));
  }
  if (ids.contains("xval-cartesian")) {
    CrossValidationParams p;
    p.complete_orders = {2, 3, 4};
    p.max_factor_order = sc.xval_cartesian_max_order;
    p.max_product_order = sc.xval_cartesian_max_product;
    xval(ProductKind::cartesian, std::move(p));
  }
  if (ids.contains("xval-strong")) {
    CrossValidationParams p;
    p.complete_orders = {2, 3};
    p.min_factor_order = 1;
    p.max_factor_order = sc.xval_strong_max_order;
    p.max_product_order = std::min(lim.engine.max_n, kEngineHardLimit);
    xval(ProductKind::strong, std::move(p));
  }
  if (ids.contains("conj-hunt")) {
    HuntOptions h;
    h.max_order = sc.hunt_max_order;
    h.workers = opts.workers;
    h.resume_log = opts.resume_log;
    auto rs = hunt_conjecture(corpus, h, lim);
    records.insert(records.end(), rs.begin(), rs.end());
  }

  std::sort(records.begin(), records.end(), record_less);
  SuiteResult out;
  out.records = std::move(records);
  out.pass = std::all_of(out.records.begin(), out.records.end(), [](const CheckRecord& r) { return r.pass; });
  return out;
}

}  // namespace domsuite
