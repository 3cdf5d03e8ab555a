#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// A parameter is below its documented minimum or otherwise malformed.
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The input is well-formed but outside the domain where the quantity is defined
// (disconnected graph for kappa, free vertex for the Ohtani split, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A configured resource cap was exceeded. Never a silent truncation.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; signals a bug rather than bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bei
