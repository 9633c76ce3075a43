#pragma once

#include <stdexcept>
#include <string>

namespace adtime {

/// Scenario or matrix data violates a model invariant. The message names the
/// offending field, e.g. "alpha[3]: must be >= 1".
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-positive price was passed where the follower best response would be
/// unbounded.
class invalid_price_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation on a (follower, block) pair with lambda == 0: the follower is
/// not interested and never takes part in the game there.
class not_a_participant_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration requested beyond the N*M guard.
class instance_too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The master problem has no feasible assignment left once the excluded set
/// is honoured; the decomposition must stop.
class lattice_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adtime
