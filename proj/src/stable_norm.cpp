#include "hypnorm/stable_norm.hpp"

#include <algorithm>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  CyclicReduction cyclically_reduce(Word const& w, Metric const& metric) {
    Word        current    = metric.geodesic_representative(w);
    Word        conjugator = Word(w.alphabet());
    std::size_t iterations = 0;
    while (true) {
      std::size_t const length = current.size();
      std::size_t       shift  = 0;
      for (std::size_t i = 1; i < length; ++i) {
        if (metric.element_length(rotation(current, i)) < length) {
          shift = i;
          break;
        }
      }
      if (shift == 0) {
        return CyclicReduction{current, conjugator, iterations};
      }
      // current = p s and rotation = s p = p^-1 current p
      conjugator = free_reduce(concat(conjugator, subword(current, 0, shift)));
      current    = metric.geodesic_representative(rotation(current, shift));
      ++iterations;
    }
  }

  SubadditiveSequence::SubadditiveSequence(std::vector<Rational> values)
      : values_(std::move(values)) {
    for (auto const& u : values_) {
      if (u < 0) {
        throw DomainError("subadditive sequence must be nonnegative");
      }
    }
    for (std::size_t n = 1; n <= values_.size(); ++n) {
      for (std::size_t m = 1; n + m <= values_.size(); ++m) {
        if (values_[n + m - 1] > values_[n - 1] + values_[m - 1]) {
          throw DomainError("sequence is not subadditive at n="
                            + std::to_string(n) + ", m=" + std::to_string(m));
        }
      }
    }
  }

  Rational fekete_upper(SubadditiveSequence const& seq) {
    if (seq.size() == 0) {
      throw DomainError("fekete_upper needs at least one term");
    }
    Rational best = seq(1);
    for (std::size_t m = 2; m <= seq.size(); ++m) {
      best = std::min(best, seq(m) / static_cast<std::int64_t>(m));
    }
    return best;
  }

  std::vector<std::size_t> power_lengths(Word const&   w,
                                         Metric const& metric,
                                         std::size_t   N) {
    std::vector<std::size_t> out;
    out.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) {
      auto u = metric.element_length(power(w, static_cast<std::int64_t>(n)));
      if (u == 0) {
        throw FiniteOrderError("element '" + to_string(w)
                                   + "' has finite order: |w^"
                                   + std::to_string(n) + "| = 0",
                               n);
      }
      out.push_back(u);
    }
    return out;
  }

  StableNormEstimate stable_norm_estimate(
      Word const&                                  w,
      Metric const&                                metric,
      std::size_t                                  N,
      std::optional<LocalGeodesicConstants> const& constants) {
    if (N == 0) {
      throw DomainError("stable norm estimate needs N >= 1");
    }
    auto                  lengths = power_lengths(w, metric, N);
    std::vector<Rational> values(lengths.begin(), lengths.end());
    SubadditiveSequence   seq(std::move(values));

    StableNormEstimate est{Rational(0), fekete_upper(seq), N, LowerMethod::none};
    if (constants) {
      auto lb          = element_lower_bound(w, metric, *constants);
      est.lower        = lb.value;
      est.lower_method = lb.method;
      if (est.lower > est.upper) {
        throw CertificateError("lower bound " + format_decimal(est.lower)
                               + " exceeds upper bound "
                               + format_decimal(est.upper)
                               + "; constants are invalid for this group");
      }
    }
    return est;
  }

  bool check_conjugacy_invariance(Word const&   u,
                                  Word const&   a,
                                  Metric const& metric,
                                  std::size_t   N) {
    Word const        v     = concat(concat(a, u), invert(a));
    std::size_t const slack = 2 * metric.element_length(a);
    for (std::size_t n = 1; n <= N; ++n) {
      auto const e  = static_cast<std::int64_t>(n);
      auto const lu = metric.element_length(power(u, e));
      auto const lv = metric.element_length(power(v, e));
      if ((lu > lv ? lu - lv : lv - lu) > slack) {
        return false;
      }
    }
    return true;
  }

  bool check_homogeneity(Word const&                                  w,
                         std::size_t                                  m,
                         Metric const&                                metric,
                         std::size_t                                  N,
                         std::optional<LocalGeodesicConstants> const& constants) {
    if (m == 0) {
      throw DomainError("homogeneity check needs m >= 1");
    }
    auto const scale = Rational(static_cast<std::int64_t>(m));
    auto const of_power =
        stable_norm_estimate(power(w, static_cast<std::int64_t>(m)), metric, N,
                             constants);
    auto const of_base = stable_norm_estimate(w, metric, N * m, constants);
    auto const lo = std::max(of_power.lower, scale * of_base.lower);
    auto const hi = std::min(of_power.upper, scale * of_base.upper);
    return lo <= hi;
  }

  std::size_t free_oracle_stable_norm(Word const& w, GroupPresentation const& p) {
    if (p.strategy() != Strategy::Free) {
      throw DomainError("free oracle requires a free presentation");
    }
    Word const  reduced = free_reduce(w);
    auto        letters = reduced.letters();
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    if (hi == lo) {
      throw FiniteOrderError("identity has no stable norm", 1);
    }
    return hi - lo;
  }

}  // namespace hypnorm
