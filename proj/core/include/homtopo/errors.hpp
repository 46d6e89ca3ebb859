#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homtopo {

/// A precondition on an argument was violated (bad parameter, foreign cell,
/// non-homomorphism, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (cells, search nodes, simplices) was exhausted.
/// `progress()` reports how far the computation got before giving up.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what, std::size_t progress = 0);
  std::size_t progress() const noexcept { return progress_; }

 private:
  std::size_t progress_;
};

/// An internal consistency check failed, e.g. a boundary that does not square
/// to zero.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homtopo
