#pragma once

#include <stdexcept>
#include <string>

namespace slopekit {

// Malformed input text (tileset / machine / witness files). line is 1-based, 0 if unknown.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_ = 0)
      : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// Structurally valid input that violates a semantic precondition.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A search or enumeration hit a resource cap before reaching an answer.
// Callers that dovetail catch this and move on; the CLI maps it to exit code 2.
struct BudgetExceeded : std::runtime_error {
  std::string what_hit;  // which cap: "nodes", "edge_checks", "space", "steps", ...
  long long limit;
  BudgetExceeded(const std::string& cap, long long limit_)
      : std::runtime_error("budget exceeded: " + cap + " > " + std::to_string(limit_)),
        what_hit(cap), limit(limit_) {}
};

}  // namespace slopekit
