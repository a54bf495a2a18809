// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <tuple>

namespace domsuite {

/// One harness result. `witness` is empty exactly when `pass` holds.
struct CheckRecord {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;

  static CheckRecord ok(std::string check, std::string instance) {
    return {std::move(check), std::move(instance), true, {}};
  }

  static CheckRecord fail(std::string check, std::string instance, std::string witness) {
    if (witness.empty()) witness = "(unspecified)";
    return {std::move(check), std::move(instance), false, std::move(witness)};
  }

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Report order: (check, instance).
inline bool record_less(const CheckRecord& a, const CheckRecord& b) {
  return std::tie(a.check, a.instance, a.pass, a.witness) <
         std::tie(b.check, b.instance, b.pass, b.witness);
}

}  // namespace domsuite
