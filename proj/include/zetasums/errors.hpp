#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetasums {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cf_solve_linear called with a zero leading coefficient.
class ZeroCoefficient : public Error {
 public:
  ZeroCoefficient() : Error("zero coefficient in linear solve") {}
};

/// A weight-reduction rewrite would produce a divergent series.
class InvalidReduction : public Error {
 public:
  using Error::Error;
};

/// The constant has no numeric oracle (Euler's gamma).
class UnsupportedConstant : public Error {
 public:
  using Error::Error;
};

/// Series index fails the convergence condition w - 2b <= -2.
class DivergentIndex : public Error {
 public:
  using Error::Error;
};

/// Evaluation would need more terms than the configured ceiling.
class EffortExceeded : public Error {
 public:
  EffortExceeded(std::uint64_t needed, std::uint64_t ceiling)
      : Error("effort exceeded: need " + std::to_string(needed) +
              " terms, ceiling is " + std::to_string(ceiling)),
        needed_(needed),
        ceiling_(ceiling) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  std::uint64_t needed_;
  std::uint64_t ceiling_;
};

/// Working precision could not deliver the requested radius.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace zetasums
