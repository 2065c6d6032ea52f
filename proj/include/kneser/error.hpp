#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Library-wide error with a machine-checkable kind. Contract violations
// (bad sizes, malformed input) and internal invariant failures both land
// here so callers can distinguish them from std errors.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    invalid_size,      // n/m outside the operation's stated bounds
    unsupported,       // valid input but no object exists (e.g. n = 4 cycle)
    parse,             // malformed text input
    invalid_label,     // vertex label out of range or adjacent endpoints
    cardinality,       // wrong number of diagonals
    crossing,          // diagonal set not pairwise noncrossing
    not_present,       // flip of a diagonal not in the triangulation
    mismatched_n,      // operands built for different polygon sizes
    size_two_orbit,    // orbit too small to form a cycle
    not_flip_adjacent, // bridge orientation on a non-edge of the flip graph
    internal,          // invariant the construction guarantees was violated
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace kneser
