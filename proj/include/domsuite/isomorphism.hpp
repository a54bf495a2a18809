// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"

namespace domsuite {

struct IsomorphismOptions {
  std::size_t max_order = 16;
};

namespace detail {

// Colors for two graphs drawn from one shared palette, so equal colors mean
// "may correspond".
struct JointColoring {
  std::vector<int> left;
  std::vector<int> right;
};

inline bool histograms_match(const JointColoring& c) {
  std::vector<int> a = c.left;
  std::vector<int> b = c.right;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline int count_colors(const JointColoring& c) {
  std::vector<int> all = c.left;
  all.insert(all.end(), c.right.begin(), c.right.end());
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

// 1-dimensional Weisfeiler-Leman refinement run on both graphs at once.
inline bool refine(const Graph& g, const Graph& h, JointColoring& c) {
  auto signature = [](const Graph& x, const std::vector<int>& col, Vertex v) {
    std::vector<int> sig{col[v]};
    x.neighbors(v).for_each([&](Vertex u) { sig.push_back(col[u]); });
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };
  int classes = count_colors(c);
  for (;;) {
    std::map<std::vector<int>, int> palette;
    std::vector<std::vector<int>> sl(g.order()), sr(h.order());
    for (Vertex v = 0; v < g.order(); ++v) palette[sl[v] = signature(g, c.left, v)] = 0;
    for (Vertex v = 0; v < h.order(); ++v) palette[sr[v] = signature(h, c.right, v)] = 0;
    int id = 0;
    for (auto& [sig, color] : palette) color = id++;
    for (Vertex v = 0; v < g.order(); ++v) c.left[v] = palette[sl[v]];
    for (Vertex v = 0; v < h.order(); ++v) c.right[v] = palette[sr[v]];
    if (!histograms_match(c)) return false;
    if (id == classes) return true;
    classes = id;
  }
}

inline bool extend_isomorphism(const Graph& g, const Graph& h, JointColoring c) {
  const std::size_t n = g.order();
  // Smallest non-singleton color class on the left.
  std::map<int, int> sizes;
  for (int col : c.left) ++sizes[col];
  int target = -1;
  int best = static_cast<int>(n) + 1;
  for (auto [col, sz] : sizes) {
    if (sz > 1 && sz < best) {
      best = sz;
      target = col;
    }
  }
  if (target < 0) {
    std::vector<Vertex> image(n);
    std::map<int, Vertex> by_color;
    for (Vertex w = 0; w < n; ++w) by_color[c.right[w]] = w;
    for (Vertex v = 0; v < n; ++v) image[v] = by_color.at(c.left[v]);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v) != h.adjacent(image[u], image[v])) return false;
      }
    }
    return true;
  }
  Vertex pick = 0;
  while (c.left[pick] != target) ++pick;
  const int fresh = count_colors(c) + 1000000;
  for (Vertex w = 0; w < n; ++w) {
    if (c.right[w] != target) continue;
    JointColoring next = c;
    next.left[pick] = fresh;
    next.right[w] = fresh;
    if (refine(g, h, next) && extend_isomorphism(g, h, std::move(next))) return true;
  }
  return false;
}

}  // namespace detail

/// Whether an adjacency-preserving bijection exists. Uses joint color
/// refinement with individualization and backtracking.
inline bool are_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& opts = {}) {
  for (const Graph* x : {&g, &h}) {
    if (x->order() > opts.max_order) {
      throw InstanceTooLargeError("isomorphism test: order " + std::to_string(x->order()) +
                                  " exceeds cap " + std::to_string(opts.max_order));
    }
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  detail::JointColoring c;
  for (Vertex v = 0; v < g.order(); ++v) c.left.push_back(static_cast<int>(g.degree(v)));
  for (Vertex v = 0; v < h.order(); ++v) c.right.push_back(static_cast<int>(h.degree(v)));
  if (!detail::histograms_match(c)) return false;
  if (!detail::refine(g, h, c)) return false;
  return detail::extend_isomorphism(g, h, std::move(c));
}

}  // namespace domsuite
