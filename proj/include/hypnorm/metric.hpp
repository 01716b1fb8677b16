#ifndef HYPNORM_METRIC_HPP_
#define HYPNORM_METRIC_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypnorm/group.hpp"
#include "hypnorm/rational.hpp"
#include "hypnorm/words.hpp"

namespace hypnorm {

  struct BallEntry {
    Word        normal_form;
    std::size_t length;
  };

  // Cayley ball around the identity. Entries are sorted by (length, shortlex)
  // and each normal form is the shortlex-least geodesic for its element.
  class Ball {
   public:
    std::size_t radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::vector<BallEntry> const& entries() const noexcept { return entries_; }

    // Entries of length exactly `length`, as a half-open index range.
    std::pair<std::size_t, std::size_t> sphere(std::size_t length) const;

    // Index of the entry representing the same element as `w`.
    std::optional<std::size_t> find(Word const& w, WordProblem const& wp) const;

    // Copy restricted to entries of length <= r.
    Ball truncated(std::size_t r) const;

   private:
    friend Ball build_ball(WordProblem const&, std::size_t);
    friend class Metric;

    explicit Ball(WordProblem const& wp);
    void grow_one_layer(WordProblem const& wp);
    void add(WordProblem const& wp, Word nf, std::size_t length);

    std::size_t            radius_ = 0;
    std::vector<BallEntry> entries_;
    // layer_start_[j] = index of the first entry of length j; one extra slot
    // marks the end.
    std::vector<std::size_t> layer_start_;
    std::unordered_map<std::string, std::vector<std::size_t>> index_;
  };

  // BFS from the identity with generator edges taken in shortlex letter order.
  // Uncapped; Metric::ball enforces R_max. Requires a certified oracle.
  Ball build_ball(WordProblem const& wp, std::size_t r);

  // The bi-infinite path labelled by ... period period period ...
  class PeriodicPath {
   public:
    explicit PeriodicPath(Word period);
    Word const& period() const noexcept { return period_; }
    Word window(std::size_t m) const { return power(period_, static_cast<std::int64_t>(m)); }

   private:
    Word period_;
  };

  // Word metric on one presentation. Holds the largest ball computed so far;
  // the cache is shared between concurrent queries (one writer grows it,
  // readers take a shared lock).
  //
  // Free presentations answer lengths exactly by free reduction, so they are
  // not limited by R_max. Dehn presentations locate elements of length up to
  // R_max by splitting a geodesic at the cached radius: |w| = |z| + |y| with
  // z, y both inside the ball.
  class Metric {
   public:
    static constexpr std::size_t kDefaultRMax = 8;

    explicit Metric(GroupPresentation p, std::size_t r_max = kDefaultRMax);
    explicit Metric(std::shared_ptr<WordProblem const> wp,
                    std::size_t                       r_max = kDefaultRMax);

    Metric(Metric const&)            = delete;
    Metric& operator=(Metric const&) = delete;

    WordProblem const& word_problem() const noexcept { return *wp_; }
    GroupPresentation const& presentation() const noexcept {
      return wp_->presentation();
    }
    std::size_t r_max() const noexcept { return r_max_; }

    Ball ball(std::size_t r) const;

    std::size_t element_length(Word const& w) const;
    Word        geodesic_representative(Word const& w) const;
    std::size_t distance(Word const& w1, Word const& w2) const;
    bool        is_geodesic(Word const& w) const;
    bool        is_cyclically_reduced(Word const& w) const;
    bool is_k_local_geodesic(PeriodicPath const& path, std::size_t k) const;
    bool quasigeodesic_check(Word const&     w,
                             std::size_t     n,
                             Rational const& lambda,
                             Rational const& eps) const;

   private:
    struct Located {
      std::size_t length;
      Word        normal_form;
    };

    Located locate(Word const& w) const;
    void    ensure_radius(std::size_t r) const;
    void    require_certified() const;

    std::shared_ptr<WordProblem const> wp_;
    std::size_t                       r_max_;

    mutable std::shared_mutex ball_mutex_;
    mutable Ball              cache_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<std::string, Located> memo_;
  };

}  // namespace hypnorm

#endif  // HYPNORM_METRIC_HPP_
