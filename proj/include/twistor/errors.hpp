#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

// Argument outside the domain of an operation (s = 0 for phi, r outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input data that makes a construction meaningless (proportional curves, coincident sections).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// solve_line_through_point: the point lies on an excluded locus.
class NoLineError : public std::runtime_error {
 public:
  NoLineError(std::string locus, const std::string& what)
      : std::runtime_error(what), locus_(std::move(locus)) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

// A numerical step that should be unreachable failed (e.g. a bisection did not bracket).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twistor
