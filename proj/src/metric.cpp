#include "hypnorm/metric.hpp"

#include <algorithm>
#include <mutex>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  namespace {
    std::string letters_key(Word const& w) {
      std::string key;
      key.reserve(w.size());
      for (auto x : w.letters()) {
        key.push_back(static_cast<char>(x.rank()));
      }
      return key;
    }
  }  // namespace

  Ball::Ball(WordProblem const& wp) {
    layer_start_ = {0};
    add(wp, Word(wp.alphabet()), 0);
    layer_start_.push_back(entries_.size());
  }

  std::pair<std::size_t, std::size_t> Ball::sphere(std::size_t length) const {
    if (length > radius_) {
      return {entries_.size(), entries_.size()};
    }
    return {layer_start_[length], layer_start_[length + 1]};
  }

  void Ball::add(WordProblem const& wp, Word nf, std::size_t length) {
    index_[wp.equality_key(nf)].push_back(entries_.size());
    entries_.push_back(BallEntry{std::move(nf), length});
  }

  std::optional<std::size_t> Ball::find(Word const&        w,
                                        WordProblem const& wp) const {
    auto it = index_.find(wp.equality_key(w));
    if (it == index_.end()) {
      return std::nullopt;
    }
    for (auto idx : it->second) {
      if (wp.equal(w, entries_[idx].normal_form)) {
        return idx;
      }
    }
    return std::nullopt;
  }

  void Ball::grow_one_layer(WordProblem const& wp) {
    auto const [first, last] = sphere(radius_);
    std::size_t const n_letters = 2 * wp.alphabet()->size();
    for (std::size_t i = first; i < last; ++i) {
      // entries_ may reallocate inside the loop; copy the parent.
      Word const parent = entries_[i].normal_form;
      for (std::size_t rank = 0; rank < n_letters; ++rank) {
        Letter x = Letter::from_rank(rank);
        if (!parent.empty() && parent[parent.size() - 1] == x.inverse()) {
          continue;
        }
        Word candidate = concat(parent, Word(parent.alphabet(), {x}));
        if (!find(candidate, wp)) {
          add(wp, std::move(candidate), radius_ + 1);
        }
      }
    }
    ++radius_;
    layer_start_.push_back(entries_.size());
  }

  Ball Ball::truncated(std::size_t r) const {
    Ball out = *this;
    if (r >= radius_) {
      return out;
    }
    auto end = layer_start_[r + 1];
    out.entries_.erase(out.entries_.begin() + static_cast<std::ptrdiff_t>(end),
                       out.entries_.end());
    out.layer_start_.resize(r + 2);
    out.radius_ = r;
    for (auto it = out.index_.begin(); it != out.index_.end();) {
      auto& ids = it->second;
      ids.erase(std::remove_if(ids.begin(), ids.end(),
                               [end](std::size_t i) { return i >= end; }),
                ids.end());
      it = ids.empty() ? out.index_.erase(it) : std::next(it);
    }
    return out;
  }

  Ball build_ball(WordProblem const& wp, std::size_t r) {
    if (!wp.certified()) {
      throw CertificationError("word problem oracle not certified");
    }
    Ball b(wp);
    while (b.radius() < r) {
      b.grow_one_layer(wp);
    }
    return b;
  }

  PeriodicPath::PeriodicPath(Word period) : period_(std::move(period)) {
    if (period_.empty() || !is_freely_reduced(period_)) {
      throw DomainError("periodic path needs a nonempty freely reduced period");
    }
  }

  Metric::Metric(GroupPresentation p, std::size_t r_max)
      : Metric(std::make_shared<WordProblem const>(std::move(p)), r_max) {}

  Metric::Metric(std::shared_ptr<WordProblem const> wp, std::size_t r_max)
      : wp_(std::move(wp)), r_max_(r_max), cache_(*wp_) {}

  void Metric::require_certified() const {
    if (!wp_->certified()) {
      throw CertificationError("word problem oracle not certified");
    }
  }

  void Metric::ensure_radius(std::size_t r) const {
    {
      std::shared_lock lock(ball_mutex_);
      if (cache_.radius() >= r) {
        return;
      }
    }
    std::unique_lock lock(ball_mutex_);
    while (cache_.radius() < r) {
      cache_.grow_one_layer(*wp_);
    }
  }

  Ball Metric::ball(std::size_t r) const {
    require_certified();
    if (r > r_max_) {
      throw ResourceError("ball radius " + std::to_string(r)
                              + " exceeds R_max = " + std::to_string(r_max_),
                          r);
    }
    ensure_radius(r);
    std::shared_lock lock(ball_mutex_);
    return cache_.truncated(r);
  }

  Metric::Located Metric::locate(Word const& w) const {
    require_certified();
    if (wp_->presentation().strategy() == Strategy::Free) {
      Word reduced = free_reduce(w);
      return Located{reduced.size(), reduced};
    }
    Word const  reduced = wp_->dehn_reduce(w);
    std::string key     = letters_key(reduced);
    {
      std::shared_lock lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
      }
    }

    std::size_t const target = std::min(reduced.size(), r_max_);
    ensure_radius((target + 1) / 2);

    std::optional<Located> result;
    {
      std::shared_lock lock(ball_mutex_);
      std::size_t const radius = cache_.radius();
      if (auto idx = cache_.find(reduced, *wp_)) {
        auto const& e = cache_.entries()[*idx];
        result        = Located{e.length, e.normal_form};
      } else {
        // |w| > radius. Split a geodesic as z y with |z| = radius; the first
        // suffix length t with a hit is |w| - radius.
        std::size_t const max_t = std::min(radius, r_max_ - std::min(r_max_, radius));
        for (std::size_t t = 1; t <= max_t && !result; ++t) {
          auto const [first, last] = cache_.sphere(t);
          for (std::size_t i = first; i < last; ++i) {
            auto const& y = cache_.entries()[i];
            auto zi = cache_.find(concat(reduced, invert(y.normal_form)), *wp_);
            if (!zi) {
              continue;
            }
            auto const& z = cache_.entries()[*zi];
            Located     candidate{z.length + t, concat(z.normal_form, y.normal_form)};
            if (!result || candidate.length < result->length
                || (candidate.length == result->length
                    && candidate.normal_form < result->normal_form)) {
              result = std::move(candidate);
            }
          }
        }
      }
    }
    if (!result) {
      throw ResourceError("element length > R_max = " + std::to_string(r_max_)
                              + " for word '" + to_string(w) + "'",
                          r_max_ + 1);
    }
    std::unique_lock lock(memo_mutex_);
    memo_.emplace(std::move(key), *result);
    return *result;
  }

  std::size_t Metric::element_length(Word const& w) const {
    return locate(w).length;
  }

  Word Metric::geodesic_representative(Word const& w) const {
    return locate(w).normal_form;
  }

  std::size_t Metric::distance(Word const& w1, Word const& w2) const {
    return element_length(concat(invert(w1), w2));
  }

  bool Metric::is_geodesic(Word const& w) const {
    return element_length(w) == lgr(w);
  }

  bool Metric::is_cyclically_reduced(Word const& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!is_geodesic(rotation(w, i))) {
        return false;
      }
    }
    return true;
  }

  bool Metric::is_k_local_geodesic(PeriodicPath const& path,
                                   std::size_t         k) const {
    if (k == 0) {
      throw DomainError("k must be at least 1");
    }
    std::size_t const period = path.period().size();
    Word const window = path.window((k + period - 1) / period + 1);
    // Subwords of geodesics are geodesic, so length-k windows suffice.
    for (std::size_t offset = 0; offset < period; ++offset) {
      if (!is_geodesic(subword(window, offset, k))) {
        return false;
      }
    }
    return true;
  }

  bool Metric::quasigeodesic_check(Word const&     w,
                                   std::size_t     n,
                                   Rational const& lambda,
                                   Rational const& eps) const {
    if (n == 0) {
      throw DomainError("quasigeodesic check needs n >= 1");
    }
    auto const length = element_length(power(w, static_cast<std::int64_t>(n)));
    return Rational(static_cast<std::int64_t>(n * lgr(w)))
           <= lambda * Rational(static_cast<std::int64_t>(length)) + eps;
  }

}  // namespace hypnorm
