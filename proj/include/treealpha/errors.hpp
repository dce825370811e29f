#pragma once

#include <stdexcept>
#include <string>

namespace ta {

// Malformed input text or structurally invalid graph data.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine refused to run because its input exceeds a configured cap.
struct CapExceeded : std::runtime_error {
  CapExceeded(const std::string& what_cap, long long limit, long long requested)
      : std::runtime_error("cap exceeded: " + what_cap + " (limit " + std::to_string(limit) +
                           ", requested " + std::to_string(requested) + ")"),
        cap(what_cap),
        limit(limit),
        requested(requested) {}
  std::string cap;
  long long limit;
  long long requested;
};

// A documented precondition of an operation does not hold for the given input.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A post-condition or oracle contract check failed; carries a human-readable trace.
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ta
