// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace domsuite {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex index outside 0..n-1 of the host graph.
class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6, edge-list, or report input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Bad parameters to a graph constructor (empty graph, loops, cycle on 2 vertices).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds an exact-computation or construction cap.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Unknown suite id or malformed command-line request.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace domsuite
