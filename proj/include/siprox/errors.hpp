#pragma once

#include <stdexcept>

namespace siprox {

/// Input lies on a degenerate locus that the called routine does not handle,
/// e.g. a multiple of the all-ones vector passed to the rank-2 spectrum.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace siprox
