#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates an operation's precondition (dependent weights, bad k, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph itself is malformed: loops, degree mismatch, unknown vertices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace gkm
