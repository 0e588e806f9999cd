#pragma once

#include <stdexcept>
#include <string>

namespace tropic {

/// An operation was called on input outside its domain (wrong shape,
/// violated genericity, failed Plücker relation, ...).  The CLI maps this
/// to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tropic
