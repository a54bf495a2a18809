// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domsuite/errors.hpp"

namespace domsuite {

using Vertex = std::uint32_t;

/// A subset of the vertex range 0..n-1 of a host graph, stored as a packed
/// bitmask of 64-bit words.
///
/// Sets are ordered by (size, lexicographic members); this is the witness
/// and enumeration order used throughout the library.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::size_t host_order)
      : host_order_(host_order), words_((host_order + 63) / 64, 0) {}

  VertexSet(std::size_t host_order, std::initializer_list<Vertex> members)
      : VertexSet(host_order) {
    for (Vertex v : members) insert(v);
  }

  VertexSet(std::size_t host_order, std::span<const Vertex> members)
      : VertexSet(host_order) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t host_order) {
    VertexSet s(host_order);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Host order must be at most 64.
  static VertexSet from_mask(std::size_t host_order, std::uint64_t mask) {
    if (host_order > 64) throw PreconditionError("from_mask: host order above 64");
    VertexSet s(host_order);
    if (host_order > 0) {
      s.words_[0] = mask;
      if (host_order < 64 && (mask >> host_order) != 0) {
        throw InvalidVertexError("from_mask: bit beyond host order " + std::to_string(host_order));
      }
    }
    return s;
  }

  std::size_t host_order() const { return host_order_; }

  bool contains(Vertex v) const {
    check(v);
    return (words_[v / 64] >> (v % 64)) & 1U;
  }

  void insert(Vertex v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::optional<Vertex> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
      }
    }
    return std::nullopt;
  }

  /// Host order must be at most 64.
  std::uint64_t to_mask() const {
    if (host_order_ > 64) throw PreconditionError("to_mask: host order above 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::span<const std::uint64_t> words() const { return words_; }

  bool intersects(const VertexSet& o) const {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the host range.
  VertexSet complement() const {
    VertexSet s(host_order_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// (size, lexicographic) order on sorted member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    // Equal sizes: the set holding the smallest element of the symmetric
    // difference comes first.
    const std::size_t nw = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < nw; ++i) {
      const std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d != 0) {
        return (a.words_[i] & (d & (~d + 1))) ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
      }
    }
    return a.host_order_ <=> b.host_order_;
  }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
      if (!first_member) s += ',';
      s += std::to_string(v);
      first_member = false;
    });
    return s + "}";
  }

 private:
  void check(Vertex v) const {
    if (v >= host_order_) {
      throw InvalidVertexError("vertex " + std::to_string(v) + " out of range for order " +
                               std::to_string(host_order_));
    }
  }

  void same_host(const VertexSet& o) const {
    if (o.host_order_ != host_order_) {
      throw PreconditionError("vertex sets over different host orders (" +
                              std::to_string(host_order_) + " vs " +
                              std::to_string(o.host_order_) + ")");
    }
  }

  void trim() {
    if (host_order_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (host_order_ % 64)) - 1;
    }
  }

  std::size_t host_order_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domsuite
