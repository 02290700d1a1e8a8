// Copyright 2026 the hstheta authors
#ifndef HSTHETA_ERRORS_HPP
#define HSTHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hstheta {

// Process exit codes used by the CLI and mirrored by the error hierarchy:
//   0 computed / PASS, 1 usage or parse or internal error, 2 ineligible input,
//   3 theorem violation, 4 resource ceiling hit.
enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  Ineligible = 2,
  Violation = 3,
  Resource = 4,
};

class Error : public std::runtime_error {
 public:
  Error(std::string msg, ExitCode code)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

// Malformed input text, bad flags, unknown names.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg, ExitCode::Usage) {}
};

// A precondition of an operation or a theorem hypothesis fails on this input.
class IneligibleError : public Error {
 public:
  explicit IneligibleError(const std::string& msg)
      : Error(msg, ExitCode::Ineligible) {}
};

// A checked implication of a theorem failed: either a bug or a disproof.
class ViolationError : public Error {
 public:
  explicit ViolationError(const std::string& msg)
      : Error(msg, ExitCode::Violation) {}
};

// Configurable ceiling (basis size, degree, resolution steps) exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg)
      : Error(msg, ExitCode::Resource) {}
};

// Internal invariant broken; always a bug in the engine, never user input.
class EngineError : public Error {
 public:
  explicit EngineError(const std::string& msg) : Error(msg, ExitCode::Usage) {}
};

}  // namespace hstheta

#endif
