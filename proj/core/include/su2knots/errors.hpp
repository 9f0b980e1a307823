#pragma once

#include <stdexcept>
#include <string>

namespace su2knots {

// Bad user-supplied data: unparseable input, broken preconditions,
// tangle lists that describe links rather than knots, and so on.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation left its certified envelope: residuals above threshold,
// unexpected nullspace dimension, infeasible internal state.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace su2knots
