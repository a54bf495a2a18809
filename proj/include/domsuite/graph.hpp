// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domsuite/errors.hpp"
#include "domsuite/vertex_set.hpp"

namespace domsuite {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, n >= 1.
///
/// Adjacency is held as one packed bit row per vertex so that
/// neighborhood unions and domination tests run a word at a time.
class Graph {
 public:
  /// Duplicate edges are ignored; loops and out-of-range endpoints throw.
  Graph(std::size_t order, std::span<const Edge> edges, std::string name = {})
      : order_(order), name_(std::move(name)) {
    if (order == 0) throw ConstructionError("graph of order 0");
    rows_.assign(order, VertexSet(order));
    for (const Edge& e : edges) {
      if (e.u >= order || e.v >= order) {
        throw InvalidVertexError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                 " out of range for order " + std::to_string(order));
      }
      if (e.u == e.v) throw ConstructionError("loop at vertex " + std::to_string(e.u));
      rows_[e.u].insert(e.v);
      rows_[e.v].insert(e.u);
    }
    count_edges();
  }

  Graph(std::size_t order, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

  /// Builds from open-neighborhood rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows, std::string name = {}) {
    const std::size_t n = rows.size();
    if (n == 0) throw ConstructionError("graph of order 0");
    for (std::size_t v = 0; v < n; ++v) {
      if (rows[v].host_order() != n) throw ConstructionError("adjacency row has wrong host order");
      if (rows[v].contains(static_cast<Vertex>(v))) {
        throw ConstructionError("loop at vertex " + std::to_string(v));
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      rows[v].for_each([&](Vertex u) {
        if (!rows[u].contains(static_cast<Vertex>(v))) {
          throw ConstructionError("asymmetric adjacency between " + std::to_string(v) + " and " +
                                  std::to_string(u));
        }
      });
    }
    Graph g;
    g.order_ = n;
    g.rows_ = std::move(rows);
    g.name_ = std::move(name);
    g.count_edges();
    return g;
  }

  std::size_t order() const { return order_; }
  /// Number of edges.
  std::size_t size() const { return size_; }
  const std::string& name() const { return name_; }

  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    return rows_[u].contains(v);
  }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return rows_[v];
  }

  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order_); }

  /// Edges with u < v, in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order_; ++u) {
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  /// Labeled equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  Graph() = default;

  void check(Vertex v) const {
    if (v >= order_) {
      throw InvalidVertexError("vertex " + std::to_string(v) + " out of range for order " +
                               std::to_string(order_));
    }
  }

  void count_edges() {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    size_ = twice / 2;
  }

  std::size_t order_ = 0;
  std::size_t size_ = 0;
  std::vector<VertexSet> rows_;
  std::string name_;
};

/// A graph carved out of a host, with the host index of each new vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new index] = host index

  VertexSet lift(const VertexSet& local, std::size_t host_order) const {
    VertexSet out(host_order);
    local.for_each([&](Vertex v) { out.insert(original[v]); });
    return out;
  }
};

namespace detail {

inline void require_host(const Graph& g, const VertexSet& a, const char* what) {
  if (a.host_order() != g.order()) {
    throw InvalidVertexError(std::string(what) + ": vertex set over order " +
                             std::to_string(a.host_order()) + " used with graph of order " +
                             std::to_string(g.order()));
  }
}

}  // namespace detail

/// N(A), or N[A] when `closed` is set.
inline VertexSet neighborhood(const Graph& g, const VertexSet& a, bool closed) {
  detail::require_host(g, a, "neighborhood");
  VertexSet out(g.order());
  a.for_each([&](Vertex v) { out |= g.neighbors(v); });
  if (closed) out |= a;
  return out;
}

inline bool is_independent(const Graph& g, const VertexSet& a) {
  detail::require_host(g, a, "is_independent");
  bool ok = true;
  a.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(a); });
  return ok;
}

/// pn[u,A] = N[u] - N[A - {u}].
inline VertexSet private_neighborhood(const Graph& g, Vertex u, const VertexSet& a) {
  detail::require_host(g, a, "private_neighborhood");
  if (!a.contains(u)) {
    throw PreconditionError("private_neighborhood: vertex " + std::to_string(u) +
                            " is not a member of " + a.to_string());
  }
  VertexSet rest = a;
  rest.erase(u);
  return g.closed_neighbors(u) - neighborhood(g, rest, true);
}

/// epn[u,A] = pn[u,A] - {u}; always disjoint from A.
inline VertexSet external_private_neighborhood(const Graph& g, Vertex u, const VertexSet& a) {
  VertexSet pn = private_neighborhood(g, u, a);
  pn.erase(u);
  return pn;
}

inline bool is_irredundant(const Graph& g, const VertexSet& a) {
  bool ok = true;
  a.for_each([&](Vertex u) { ok = ok && !private_neighborhood(g, u, a).empty(); });
  return ok;
}

inline bool is_open_irredundant(const Graph& g, const VertexSet& a) {
  bool ok = true;
  a.for_each([&](Vertex u) { ok = ok && !external_private_neighborhood(g, u, a).empty(); });
  return ok;
}

/// Vertices relabeled 0..|S|-1 in ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  detail::require_host(g, s, "induced_subgraph");
  if (s.empty()) throw ConstructionError("induced_subgraph: empty vertex set");
  std::vector<Vertex> original = s.members();
  std::vector<Vertex> local(g.order(), 0);
  for (Vertex i = 0; i < original.size(); ++i) local[original[i]] = i;
  std::vector<VertexSet> rows(original.size(), VertexSet(original.size()));
  for (Vertex i = 0; i < original.size(); ++i) {
    (g.neighbors(original[i]) & s).for_each([&](Vertex v) { rows[i].insert(local[v]); });
  }
  return {Graph::from_rows(std::move(rows)), std::move(original)};
}

/// G - N[M]; nullopt when N[M] covers every vertex.
inline std::optional<InducedSubgraph> remove_closed_neighborhood(const Graph& g,
                                                                 const VertexSet& m) {
  VertexSet keep = neighborhood(g, m, true).complement();
  if (keep.empty()) return std::nullopt;
  return induced_subgraph(g, keep);
}

/// Components sorted by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    VertexSet frontier(g.order(), {s});
    while (!frontier.empty()) {
      comp |= frontier;
      frontier = neighborhood(g, frontier, false) - comp;
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

struct DegreeBounds {
  std::size_t min_degree;
  std::size_t max_degree;
  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

inline DegreeBounds degree_bounds(const Graph& g) {
  DegreeBounds b{g.order(), 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    b.min_degree = std::min(b.min_degree, g.degree(v));
    b.max_degree = std::max(b.max_degree, g.degree(v));
  }
  return b;
}

enum class GraphKind { complete, path, cycle, star };

/// K_n, P_n, C_n (n >= 3), or K_{1,n} with center 0 and n leaves.
inline Graph make_named(GraphKind kind, std::size_t n) {
  if (n < 1) throw ConstructionError("make_named: parameter must be at least 1");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      return Graph(n, edges, "K" + std::to_string(n));
    case GraphKind::path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
      return Graph(n, edges, "P" + std::to_string(n));
    case GraphKind::cycle:
      if (n < 3) throw ConstructionError("make_named: cycle needs at least 3 vertices");
      for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
      return Graph(n, edges, "C" + std::to_string(n));
    case GraphKind::star:
      for (Vertex u = 1; u <= n; ++u) edges.push_back({0, u});
      return Graph(n + 1, edges, "K1," + std::to_string(n));
  }
  throw ConstructionError("make_named: unknown kind");
}

}  // namespace domsuite
