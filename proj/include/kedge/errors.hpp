#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kedge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Coincident points, parallel lines and similar degenerate geometry.
class DegenerateInput : public InputError {
 public:
  using InputError::InputError;
};

using Triple = std::array<std::size_t, 3>;

class NotInGeneralPosition : public InputError {
 public:
  explicit NotInGeneralPosition(std::vector<Triple> triples);
  const std::vector<Triple>& triples() const { return triples_; }

 private:
  std::vector<Triple> triples_;
};

// Two point pairs span parallel lines and the sweep was not allowed to break the tie.
class DirectionTie : public InputError {
 public:
  DirectionTie(std::vector<std::array<std::size_t, 4>> pairs);
  const std::vector<std::array<std::size_t, 4>>& pairs() const { return pairs_; }

 private:
  std::vector<std::array<std::size_t, 4>> pairs_;
};

// A construction failed its exact certificate.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kedge
