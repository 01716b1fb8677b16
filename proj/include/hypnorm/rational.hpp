#ifndef HYPNORM_RATIONAL_HPP_
#define HYPNORM_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hypnorm {

  using Rational = boost::rational<std::int64_t>;

  // Accepts integers, decimal literals ("0.25", "-1.5e0" is not accepted) and
  // fractions ("13/5"). Conversion is exact.
  Rational parse_rational(std::string_view text);

  // "p" or "p/q" in lowest terms.
  std::string format_fraction(Rational const& q);

  // Terminating decimal when the denominator has only factors 2 and 5,
  // otherwise falls back to format_fraction.
  std::string format_decimal(Rational const& q);

  std::int64_t ceil(Rational const& q);

}  // namespace hypnorm

#endif  // HYPNORM_RATIONAL_HPP_
