#pragma once

#include <stdexcept>

namespace toricsys {

// Bad input: out-of-range parameters, lattice mismatches, violated preconditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toricsys
