#ifndef ESPOINTS_ERRORS_HPP
#define ESPOINTS_ERRORS_HPP

#include <stdexcept>

namespace espoints {

/// A caller-supplied oracle broke its stated promise (e.g. a triple coloring
/// that fails a sampled transitivity check).
class ContractViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An assembled structure failed its convexity re-check, signalling a
/// precondition violation upstream.
class VerificationFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Strict-mode extraction refused to run because the input is smaller than
/// the size bound the guarantee needs.
class ThresholdUnmet : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace espoints

#endif
