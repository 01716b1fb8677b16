#include "hypnorm/rational.hpp"

#include <cctype>
#include <limits>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  namespace {
    std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
      if (digits.empty()) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
      }
      std::int64_t value = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("malformed number '" + std::string(whole) + "'");
        }
        if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
          throw ParseError("number out of range '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
      }
      return value;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      auto den = parse_digits(body.substr(slash + 1), text);
      if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      result = Rational(parse_digits(body.substr(0, slash), text), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
      auto int_part  = body.substr(0, dot);
      auto frac_part = body.substr(dot + 1);
      if (frac_part.size() > 17) {
        throw ParseError("too many decimal places in '" + std::string(text)
                         + "'");
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac_part.size(); ++i) {
        scale *= 10;
      }
      std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
      std::int64_t frac  = frac_part.empty() ? 0 : parse_digits(frac_part, text);
      if (int_part.empty() && frac_part.empty()) {
        throw ParseError("malformed number '" + std::string(text) + "'");
      }
      result = Rational(whole) + Rational(frac, scale);
    } else {
      result = Rational(parse_digits(body, text));
    }
    return negative ? -result : result;
  }

  std::string format_fraction(Rational const& q) {
    if (q.denominator() == 1) {
      return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

  std::string format_decimal(Rational const& q) {
    auto den = q.denominator();
    if (den == 1) {
      return std::to_string(q.numerator());
    }
    std::int64_t rest = den;
    std::size_t  twos = 0, fives = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++twos;
    }
    while (rest % 5 == 0) {
      rest /= 5;
      ++fives;
    }
    if (rest != 1) {
      return format_fraction(q);
    }
    std::size_t  places = std::max(twos, fives);
    std::int64_t num    = q.numerator();
    bool         neg    = num < 0;
    if (neg) {
      num = -num;
    }
    std::int64_t integral = num / den;
    std::int64_t remainder = num % den;
    std::string  digits;
    for (std::size_t i = 0; i < places; ++i) {
      remainder *= 10;
      digits.push_back(static_cast<char>('0' + remainder / den));
      remainder %= den;
    }
    return (neg ? "-" : "") + std::to_string(integral) + "." + digits;
  }

  std::int64_t ceil(Rational const& q) {
    auto num = q.numerator();
    auto den = q.denominator();
    auto quotient = num / den;
    if (num % den != 0 && num > 0) {
      ++quotient;
    }
    return quotient;
  }

}  // namespace hypnorm
