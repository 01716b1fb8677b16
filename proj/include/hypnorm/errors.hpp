#ifndef HYPNORM_ERRORS_HPP_
#define HYPNORM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypnorm {

  // Malformed user input: word text, presentation files, numeric literals.
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A precondition on domain values was violated (bad index, alphabet
  // mismatch, invalid constants, ...).
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // The word-problem oracle refuses to answer for this presentation.
  class CertificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A computation would exceed the configured radius R_max. `lower_bound`
  // is the best known lower bound on the quantity that was requested.
  class ResourceError : public std::runtime_error {
   public:
    ResourceError(std::string const& what, std::size_t lower_bound)
        : std::runtime_error(what), lower_bound_(lower_bound) {}
    std::size_t lower_bound() const noexcept { return lower_bound_; }

   private:
    std::size_t lower_bound_;
  };

  // Stable norm requested for an element detected to have finite order.
  class FiniteOrderError : public std::runtime_error {
   public:
    FiniteOrderError(std::string const& what, std::size_t power)
        : std::runtime_error(what), power_(power) {}
    // The exponent at which the identity was reached.
    std::size_t power() const noexcept { return power_; }

   private:
    std::size_t power_;
  };

  // Certificate construction failed: degenerate ball or iteration cap.
  class CertificateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace hypnorm

#endif  // HYPNORM_ERRORS_HPP_
