#pragma once

#include <stdexcept>
#include <string>

namespace daff {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but outside the mathematical domain of the operation
/// (level 0 element, non-root, weight outside the Tits cone, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the cocover classification does not hold.
class HypothesisError : public DomainError {
 public:
  enum class Bound {
    kRegular,          // decomposed weight must be regular
    kDominantPairing,  // <zeta, alpha_i> lower bound
    kAffineLength,     // l(w~) <= M
  };

  HypothesisError(Bound bound, const std::string& what)
      : DomainError(what), bound_(bound) {}

  Bound bound() const noexcept { return bound_; }

 private:
  Bound bound_;
};

/// Text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A safety cap was hit or an internal invariant failed. Never expected on
/// valid input; indicates a bug or an unreasonably large request.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace daff
