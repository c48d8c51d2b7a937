#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fuel budget was hit before the requested construction finished.
// `context` carries a short summary of the interrupted state (for a
// pigeonhole scan, the color classes that were still live).
struct FuelExhausted : Error {
  FuelExhausted(std::string msg, std::string domain_, std::uint64_t spent_,
                std::uint64_t limit_, std::string context_ = {})
      : Error(std::move(msg)),
        domain(std::move(domain_)),
        spent(spent_),
        limit(limit_),
        context(std::move(context_)) {}

  std::string domain;  // "stream" | "oracle" | "stream-end"
  std::uint64_t spent = 0;
  std::uint64_t limit = 0;
  std::string context;
};

struct ChainViolation : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct NotCovered : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InsufficientLength : Error { using Error::Error; };
struct UnknownFixture : Error { using Error::Error; };
struct EvalError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// DSL front-end errors carry a 1-based source position.
struct SyntaxError : Error {
  SyntaxError(std::string msg, std::size_t position_)
      : Error(std::move(msg)), position(position_) {}
  std::size_t position = 0;
};

struct TypeError : Error {
  explicit TypeError(std::string msg, std::size_t position_ = 0)
      : Error(std::move(msg)), position(position_) {}
  std::size_t position = 0;
};

}  // namespace ramsey
