// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"

namespace domsuite {

enum class ProductKind { cartesian, direct, strong };

inline std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian:
      return "cartesian";
    case ProductKind::direct:
      return "direct";
    case ProductKind::strong:
      return "strong";
  }
  return "?";
}

struct ProductLimits {
  std::size_t max_order = 4096;
};

/// Product vertex (g,h) is numbered g * n(H) + h.
inline Vertex pair_index(Vertex g, Vertex h, std::size_t right_order) {
  return static_cast<Vertex>(g * right_order + h);
}

namespace detail {

inline void check_product_order(std::size_t order, const ProductLimits& limits) {
  if (order > limits.max_order) {
    throw InstanceTooLargeError("product order " + std::to_string(order) + " exceeds cap " +
                                std::to_string(limits.max_order));
  }
}

inline std::string product_name(const Graph& g, const Graph& h, std::string_view op) {
  if (g.name().empty() || h.name().empty()) return {};
  return g.name() + std::string(op) + h.name();
}

}  // namespace detail

inline Graph product(ProductKind kind, const Graph& g, const Graph& h,
                     const ProductLimits& limits = {}) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  detail::check_product_order(ng * nh, limits);
  const bool cart = kind != ProductKind::direct;
  const bool dir = kind != ProductKind::cartesian;
  std::vector<VertexSet> rows(ng * nh, VertexSet(ng * nh));
  for (Vertex a = 0; a < ng; ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      VertexSet& row = rows[pair_index(a, b, nh)];
      if (cart) {
        h.neighbors(b).for_each([&](Vertex y) { row.insert(pair_index(a, y, nh)); });
        g.neighbors(a).for_each([&](Vertex x) { row.insert(pair_index(x, b, nh)); });
      }
      if (dir) {
        g.neighbors(a).for_each([&](Vertex x) {
          h.neighbors(b).for_each([&](Vertex y) { row.insert(pair_index(x, y, nh)); });
        });
      }
    }
  }
  static constexpr std::string_view ops[] = {"□", "×", "⊠"};
  return Graph::from_rows(std::move(rows),
                          detail::product_name(g, h, ops[static_cast<int>(kind)]));
}

inline Graph cartesian_product(const Graph& g, const Graph& h, const ProductLimits& limits = {}) {
  return product(ProductKind::cartesian, g, h, limits);
}

inline Graph direct_product(const Graph& g, const Graph& h, const ProductLimits& limits = {}) {
  return product(ProductKind::direct, g, h, limits);
}

inline Graph strong_product(const Graph& g, const Graph& h, const ProductLimits& limits = {}) {
  return product(ProductKind::strong, g, h, limits);
}

/// G ⊙ K1: original vertices keep 0..n-1, the pendant of u is n + u.
inline Graph corona(const Graph& g, const ProductLimits& limits = {}) {
  const std::size_t n = g.order();
  detail::check_product_order(2 * n, limits);
  std::vector<Edge> edges = g.edges();
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>(n + u)});
  return Graph(2 * n, edges, g.name().empty() ? std::string{} : g.name() + "⊙K1");
}

}  // namespace domsuite
