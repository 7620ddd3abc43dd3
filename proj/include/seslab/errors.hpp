#ifndef SESLAB_ERRORS_HPP
#define SESLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seslab {

// Bad user input: unknown spec string, parameters off the supported range,
// malformed arguments.  Maps to CLI exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource ceiling was hit (element budget, search budget).
// Maps to CLI exit code 3.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed.  These conditions are theorems
// about the constructed objects; reaching this exception means the
// implementation (not the input) is wrong.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Generator images do not extend to a homomorphism.
struct RelationViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An extended map turned out not to be a bijection.
struct NotBijective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace seslab

#endif
