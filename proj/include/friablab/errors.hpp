#pragma once
// Error types shared across the library. Domain violations that a caller can
// detect from the arguments alone use std::invalid_argument directly.

#include <stdexcept>
#include <string>

namespace friablab {

// A query reached past the sieved range of the prime table.
struct table_too_small : std::runtime_error {
  explicit table_too_small(const std::string& what) : std::runtime_error(what) {}
};

// The saddle equation for alpha has no positive root (theta(y) <= 2 log x).
struct no_positive_root : std::runtime_error {
  explicit no_positive_root(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive sign-assignment sweep was requested over too many primes.
struct too_many_primes : std::runtime_error {
  explicit too_many_primes(const std::string& what) : std::runtime_error(what) {}
};

// An input put a model formula in a degenerate spot (e.g. a vanishing count).
struct degenerate_input : std::runtime_error {
  explicit degenerate_input(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace friablab
