#ifndef HYPNORM_STABLE_NORM_HPP_
#define HYPNORM_STABLE_NORM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "hypnorm/bound.hpp"
#include "hypnorm/metric.hpp"
#include "hypnorm/rational.hpp"
#include "hypnorm/words.hpp"

namespace hypnorm {

  // w = conjugator * reduced * conjugator^-1 in G, reduced cyclically reduced.
  struct CyclicReduction {
    Word        reduced;
    Word        conjugator;
    std::size_t iterations;
  };

  // Replace the word by its geodesic representative, then move to the
  // leftmost rotation of strictly smaller length, until none exists.
  CyclicReduction cyclically_reduce(Word const& w, Metric const& metric);

  // u_1, ..., u_N with u_{n+m} <= u_n + u_m; validated on construction.
  class SubadditiveSequence {
   public:
    explicit SubadditiveSequence(std::vector<Rational> values);
    std::vector<Rational> const& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    // 1-based, as in u_n
    Rational const& operator()(std::size_t n) const { return values_.at(n - 1); }

   private:
    std::vector<Rational> values_;
  };

  // min_{1 <= m <= N} u_m / m, an upper bound for lim u_n / n.
  Rational fekete_upper(SubadditiveSequence const& seq);

  struct StableNormEstimate {
    Rational    lower;
    Rational    upper;
    std::size_t terms_used;
    LowerMethod lower_method;
  };

  // |w^n| for n = 1..N. Throws FiniteOrderError at the first vanishing term.
  std::vector<std::size_t> power_lengths(Word const&   w,
                                         Metric const& metric,
                                         std::size_t   N);

  StableNormEstimate stable_norm_estimate(
      Word const&                                  w,
      Metric const&                                metric,
      std::size_t                                  N,
      std::optional<LocalGeodesicConstants> const& constants = std::nullopt);

  // | |u^n| - |(a u a^-1)^n| | <= 2 |a| for n = 1..N.
  bool check_conjugacy_invariance(Word const&   u,
                                  Word const&   a,
                                  Metric const& metric,
                                  std::size_t   N);

  // Interval for w^m over N terms meets m times the interval for w over
  // N * m terms.
  bool check_homogeneity(
      Word const&                                  w,
      std::size_t                                  m,
      Metric const&                                metric,
      std::size_t                                  N,
      std::optional<LocalGeodesicConstants> const& constants = std::nullopt);

  // Exact stable norm in a free group: length of the cyclic free reduction.
  std::size_t free_oracle_stable_norm(Word const& w, GroupPresentation const& p);

}  // namespace hypnorm

#endif  // HYPNORM_STABLE_NORM_HPP_
