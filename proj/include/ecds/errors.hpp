#pragma once

#include <stdexcept>
#include <string>

namespace ecds {

// Input text could not be parsed; message names the offending 1-based line.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller-supplied value violates a documented precondition.
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The instance admits no feasible solution for the requested problem.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A claimed solution or witness failed verification.
struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

// The instance exceeds the configured size cap of an exhaustive routine.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Always-on internal consistency check; a failure is a bug, not bad input.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("internal check failed: ") + msg);
}

}  // namespace ecds
