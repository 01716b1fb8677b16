#include "hypnorm/verify.hpp"

#include <algorithm>
#include <functional>

#include "hypnorm/errors.hpp"
#include "hypnorm/sampling.hpp"
#include "hypnorm/stable_norm.hpp"

namespace hypnorm {

  namespace {

    class Recorder {
     public:
      explicit Recorder(FamilyResult& r) : r_(r) {}

      void expect(bool ok, std::string const& what) {
        if (!ok) {
          if (r_.failures == 0) {
            r_.detail = what;
          }
          ++r_.failures;
        }
      }
      void count(std::size_t n = 1) { r_.cases += n; }
      void skip(std::string reason) {
        r_.outcome = FamilyResult::Outcome::skip;
        r_.detail  = std::move(reason);
      }
      bool skipped() const { return r_.outcome == FamilyResult::Outcome::skip; }

     private:
      FamilyResult& r_;
    };

    using Body = std::function<void(WordSampler&, Recorder&)>;

    FamilyResult run_family(std::string name, std::uint64_t seed,
                            std::size_t id, Body const& body) {
      FamilyResult result{std::move(name), FamilyResult::Outcome::pass, 0, 0, {}};
      WordSampler  sampler(seed * 0x9E3779B97F4A7C15ULL + id);
      Recorder     rec(result);
      try {
        body(sampler, rec);
      } catch (ResourceError const& e) {
        result.outcome = FamilyResult::Outcome::skip;
        result.detail  = std::string("resource limit: ") + e.what();
        return result;
      } catch (std::exception const& e) {
        rec.expect(false, std::string("exception: ") + e.what());
      }
      if (!rec.skipped() && result.failures > 0) {
        result.outcome = FamilyResult::Outcome::fail;
      }
      return result;
    }

    std::string show(Word const& w) {
      return "'" + to_string(w) + "'";
    }

  }  // namespace

  std::vector<FamilyResult> run_invariant_suites(Metric const&      metric,
                                                 SuiteConfig const& config) {
    auto const& p       = metric.presentation();
    auto const& wp      = metric.word_problem();
    auto const  A       = p.alphabet();
    bool const  free    = p.strategy() == Strategy::Free;
    std::size_t const R = metric.r_max();
    std::size_t const N = std::max<std::size_t>(1, config.N);
    auto const  seed    = config.seed;
    auto const& consts  = config.constants;

    // Longest raw word whose metric queries stay in range.
    std::size_t const long_word = free ? 12 : R;
    std::size_t const half_word = free ? 8 : std::max<std::size_t>(1, R / 2);
    // power horizon for words of length 1..short_word
    std::size_t const short_word = free ? 6 : std::max<std::size_t>(1, R / 4);
    auto horizon = [&](std::size_t len) {
      return free ? std::size_t{8}
                  : std::clamp<std::size_t>(R / std::max<std::size_t>(1, len), 1, 8);
    };

    std::vector<FamilyResult> out;
    std::size_t               id = 0;
    auto add = [&](std::string name, Body const& body) {
      out.push_back(run_family(std::move(name), seed, id++, body));
    };

    add("words.free_reduce", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 200; ++i) {
        Word w = s.word(A, s.between(0, 12));
        Word r = free_reduce(w);
        rec.count();
        rec.expect(free_reduce(r) == r, "not idempotent on " + show(w));
        rec.expect(is_freely_reduced(r), "not reduced on " + show(w));
        rec.expect(lgr(r) <= lgr(w) && lgr(r) % 2 == lgr(w) % 2,
                   "length or parity broken on " + show(w));
      }
    });

    add("words.invert", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 200; ++i) {
        Word w = s.word(A, s.between(0, 12));
        rec.count();
        rec.expect(invert(invert(w)) == w, "not an involution on " + show(w));
        rec.expect(free_reduce(concat(w, invert(w))).empty(),
                   "w w^-1 does not cancel for " + show(w));
      }
    });

    add("words.rotation", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 100; ++i) {
        Word w = s.word(A, s.between(1, 12));
        for (std::size_t j = 0; j < w.size(); ++j) {
          Word r = rotation(w, j);
          rec.count();
          rec.expect(r == concat(subword(w, j, w.size() - j), subword(w, 0, j))
                         && lgr(r) == lgr(w),
                     "rotation " + std::to_string(j) + " of " + show(w));
        }
      }
    });

    add("words.power", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 100; ++i) {
        Word w = s.word(A, s.between(0, 6));
        auto n = static_cast<std::int64_t>(s.between(0, 4));
        auto m = static_cast<std::int64_t>(s.between(0, 4));
        rec.count();
        rec.expect(power(w, n + m) == concat(power(w, n), power(w, m)),
                   "power additivity on " + show(w));
      }
    });

    add("group.dehn_reduce", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 200; ++i) {
        Word w = s.word(A, s.between(0, 16));
        Word r = wp.dehn_reduce(w);
        rec.count();
        rec.expect(lgr(r) <= lgr(w), "length increased on " + show(w));
        rec.expect(wp.dehn_reduce(r) == r, "not idempotent on " + show(w));
        if (free) {
          rec.expect(r == free_reduce(w), "differs from free_reduce on " + show(w));
        }
      }
    });

    // A random trivial word: a conjugate of a relator (or c c^-1 when free).
    auto trivial_word = [&](WordSampler& s) {
      Word c = s.word(A, s.between(0, 3));
      if (free) {
        return concat(c, invert(c));
      }
      Word r = p.relators()[s.below(p.relators().size())];
      if (s.below(2) == 1) {
        r = invert(r);
      }
      return concat(concat(c, r), invert(c));
    };

    add("group.equal_equivalence", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 100; ++i) {
        Word x = s.word(A, s.between(0, 6));
        auto near = [&](Word const& base) {
          return s.below(2) == 0 ? concat(base, trivial_word(s))
                                 : s.word(A, s.between(0, 6));
        };
        Word y = near(x);
        Word z = near(y);
        rec.count();
        rec.expect(wp.equal(x, x), "not reflexive on " + show(x));
        rec.expect(wp.equal(x, y) == wp.equal(y, x),
                   "not symmetric on " + show(x) + ", " + show(y));
        rec.expect(!(wp.equal(x, y) && wp.equal(y, z)) || wp.equal(x, z),
                   "not transitive on " + show(x) + ", " + show(y) + ", "
                       + show(z));
      }
    });

    add("group.relator_conjugates", [&](WordSampler& s, Recorder& rec) {
      if (free) {
        rec.skip("no relators");
        return;
      }
      for (auto const& r : p.relators()) {
        for (int i = 0; i < 50; ++i) {
          Word c = s.word(A, s.between(0, 3));
          rec.count();
          rec.expect(wp.is_identity(concat(concat(c, r), invert(c))),
                     "conjugate of relator by " + show(c) + " not trivial");
        }
      }
      for (int i = 0; i < 50; ++i) {
        Word product = concat(trivial_word(s), trivial_word(s));
        rec.count();
        rec.expect(wp.is_identity(product),
                   "product of relator conjugates " + show(product));
      }
    });

    add("metric.ball", [&](WordSampler&, Recorder& rec) {
      std::size_t const top = std::min<std::size_t>(R, 4);
      Ball const        big = metric.ball(top);
      for (std::size_t r = 0; r <= top; ++r) {
        Ball const b = metric.ball(r);
        rec.count();
        for (std::size_t i = 0; i < b.size(); ++i) {
          auto const& e = b.entries()[i];
          rec.expect(e.length == lgr(e.normal_form) && e.length <= r,
                     "bad entry " + show(e.normal_form));
          rec.expect(i == 0 || b.entries()[i - 1].normal_form < e.normal_form,
                     "entries out of shortlex order at " + show(e.normal_form));
          rec.expect(big.entries()[i].normal_form == e.normal_form,
                     "nesting broken at radius " + std::to_string(r));
        }
        auto const [first, last] = big.sphere(r + 1);
        rec.expect(r == top || b.size() == first,
                   "nesting size mismatch at radius " + std::to_string(r));
        (void) last;
        if (free) {
          rec.expect(b.size() == count_freely_reduced(A->size(), r),
                     "free ball size at radius " + std::to_string(r));
        }
      }
      Ball const small = metric.ball(std::min<std::size_t>(R, 2));
      for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i + 1; j < small.size(); ++j) {
          rec.expect(!wp.equal(small.entries()[i].normal_form,
                               small.entries()[j].normal_form),
                     "duplicate elements in ball");
        }
      }
    });

    add("metric.triangle", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 100; ++i) {
        Word x = s.word(A, s.between(0, half_word));
        Word y = s.word(A, s.between(0, half_word));
        Word z = s.word(A, s.between(0, half_word));
        rec.count();
        rec.expect(metric.distance(x, z)
                       <= metric.distance(x, y) + metric.distance(y, z),
                   "triangle inequality on " + show(x) + ", " + show(y) + ", "
                       + show(z));
      }
    });

    add("metric.subadditivity", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 50; ++i) {
        std::size_t const len = s.between(1, short_word);
        Word              g   = s.word(A, len);
        std::size_t const H   = horizon(len);
        std::vector<std::size_t> u(H + 1, 0);
        for (std::size_t n = 1; n <= H; ++n) {
          u[n] = metric.element_length(power(g, static_cast<std::int64_t>(n)));
        }
        for (std::size_t n = 1; n < H; ++n) {
          for (std::size_t m = 1; n + m <= H; ++m) {
            rec.count();
            rec.expect(u[n + m] <= u[n] + u[m],
                       "subadditivity on " + show(g) + " at n="
                           + std::to_string(n) + ", m=" + std::to_string(m));
          }
        }
      }
    });

    add("metric.free_oracle", [&](WordSampler& s, Recorder& rec) {
      if (!free) {
        rec.skip("not a free presentation");
        return;
      }
      Ball const b = metric.ball(std::min<std::size_t>(R, 4));
      for (int i = 0; i < 200; ++i) {
        Word w = s.word(A, s.between(0, 12));
        Word r = free_reduce(w);
        rec.count();
        rec.expect(metric.element_length(w) == lgr(r),
                   "length differs from free reduction on " + show(w));
        rec.expect(metric.is_geodesic(w) == is_freely_reduced(w),
                   "geodesic test differs on " + show(w));
        if (lgr(r) <= b.radius()) {
          auto idx = b.find(w, wp);
          rec.expect(idx && b.entries()[*idx].normal_form == r,
                     "ball lookup differs on " + show(w));
        }
      }
    });

    add("metric.k_local_geodesic", [&](WordSampler& s, Recorder& rec) {
      std::vector<std::size_t> ks = {2};
      if (consts && consts->k != 2 && consts->k <= long_word) {
        ks.push_back(consts->k);
      }
      for (int i = 0; i < 50; ++i) {
        Word w = s.word(A, s.between(1, long_word));
        auto c = cyclically_reduce(w, metric);
        for (auto k : ks) {
          if (lgr(c.reduced) < k || (!free && k > R)) {
            continue;
          }
          rec.count();
          rec.expect(metric.is_k_local_geodesic(PeriodicPath(c.reduced), k),
                     "period " + show(c.reduced) + " not "
                         + std::to_string(k) + "-local geodesic");
        }
      }
    });

    add("stable_norm.cyclic_reduction", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 100; ++i) {
        Word w = s.word(A, s.between(0, long_word));
        auto c = cyclically_reduce(w, metric);
        rec.count();
        rec.expect(metric.is_cyclically_reduced(c.reduced),
                   "output not cyclically reduced for " + show(w));
        rec.expect(wp.equal(w, concat(concat(c.conjugator, c.reduced),
                                      invert(c.conjugator))),
                   "conjugation round trip fails for " + show(w));
        rec.expect(c.iterations <= lgr(w),
                   "too many iterations for " + show(w));
      }
    });

    add("stable_norm.fekete_monotone", [&](WordSampler& s, Recorder& rec) {
      for (int i = 0; i < 50; ++i) {
        std::size_t const len = s.between(1, short_word);
        Word              g   = s.word(A, len);
        if (metric.element_length(g) == 0) {
          continue;
        }
        std::size_t const H = horizon(len);
        auto              u = power_lengths(g, metric, H);
        Rational          previous;
        for (std::size_t n = 1; n <= H; ++n) {
          std::vector<Rational> prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
          auto upper = fekete_upper(SubadditiveSequence(std::move(prefix)));
          rec.count();
          rec.expect(n == 1 || upper <= previous,
                     "Fekete bound increased for " + show(g));
          previous = upper;
        }
      }
    });

    add("stable_norm.conjugacy_invariance", [&](WordSampler& s, Recorder& rec) {
      std::size_t const n_terms = free ? N : std::max<std::size_t>(1, R / 2);
      std::size_t const a_max   = free ? 4 : (R - n_terms) / 2;
      for (int i = 0; i < 50; ++i) {
        Word u = s.word(A, s.between(1, free ? 6 : 1));
        Word a = s.word(A, s.between(0, a_max));
        rec.count();
        rec.expect(check_conjugacy_invariance(u, a, metric, n_terms),
                   "conjugacy invariance for u=" + show(u) + ", a=" + show(a));
      }
    });

    add("stable_norm.free_oracle", [&](WordSampler& s, Recorder& rec) {
      if (!free) {
        rec.skip("not a free presentation");
        return;
      }
      for (int i = 0; i < 100; ++i) {
        Word w = s.word(A, s.between(1, 12));
        if (free_reduce(w).empty()) {
          continue;
        }
        auto const exact = Rational(
            static_cast<std::int64_t>(free_oracle_stable_norm(w, p)));
        auto const c   = cyclically_reduce(w, metric);
        auto const est = stable_norm_estimate(w, metric, N);
        auto const rate =
            Rational(static_cast<std::int64_t>(2 * metric.element_length(c.conjugator)),
                     static_cast<std::int64_t>(N));
        rec.count();
        rec.expect(exact <= est.upper && est.upper <= exact + rate,
                   "Fekete bracket for " + show(w));
        for (std::size_t m : {2, 3, 5}) {
          rec.expect(free_oracle_stable_norm(power(w, static_cast<std::int64_t>(m)), p)
                         == m * free_oracle_stable_norm(w, p),
                     "exact homogeneity for " + show(w));
        }
      }
    });

    add("stable_norm.homogeneity", [&](WordSampler& s, Recorder& rec) {
      std::size_t const n_terms = free ? N : std::max<std::size_t>(1, R / 4);
      for (int i = 0; i < 30; ++i) {
        Word w = s.cyclic_word(A, s.between(1, free ? 6 : 1));
        std::size_t m = s.between(1, free ? 3 : 2);
        rec.count();
        rec.expect(check_homogeneity(w, m, metric, n_terms),
                   "interval homogeneity for " + show(w) + ", m="
                       + std::to_string(m));
      }
    });

    add("bound.certificate", [&](WordSampler&, Recorder& rec) {
      if (!consts) {
        rec.skip("no constants");
        return;
      }
      auto const c1 = compute_certificate(metric, *consts);
      auto const c2 = compute_certificate(metric, *consts);
      auto const text = format_certificate(c1);
      auto const k    = Rational(static_cast<std::int64_t>(consts->k));
      rec.count();
      rec.expect(text == format_certificate(c2), "certificate not deterministic");
      rec.expect(c1.K == k / (consts->lambda * static_cast<std::int64_t>(c1.n_max)),
                 "K differs from k / (lambda n_max)");
      rec.expect(c1.K > 0 && c1.K <= k / (consts->lambda * 2), "K out of range");
      rec.expect(c1.table.size() == metric.ball(consts->k - 1).size(),
                 "table does not cover the ball");
      std::size_t n_max = 0;
      for (auto const& e : c1.table) {
        if (e.outcome.kind == NgOutcome::Kind::power) {
          n_max = std::max(n_max, e.outcome.n);
        }
      }
      rec.expect(n_max == c1.n_max, "n_max is not the table maximum");
      rec.expect(format_certificate(parse_certificate(text, A)) == text,
                 "report does not parse back");
    });

    add("bound.soundness", [&](WordSampler& s, Recorder& rec) {
      if (!consts) {
        rec.skip("no constants");
        return;
      }
      auto const        cert = compute_certificate(metric, *consts);
      std::vector<Word> sample;
      for (int i = 0; i < 100; ++i) {
        sample.push_back(s.word(A, s.between(1, free ? 12 : 1)));
      }
      auto const report =
          verify_certificate(cert, metric, sample, free ? N : R / 2);
      for (auto const& e : report.entries) {
        using Status = VerificationEntry::Status;
        if (e.status == Status::excluded || e.status == Status::unverified) {
          continue;
        }
        rec.count();
        rec.expect(e.status == Status::ok,
                   "violation on " + show(e.word) + ": " + e.note);
      }
    });

    add("bound.quasigeodesic", [&](WordSampler& s, Recorder& rec) {
      if (!consts) {
        rec.skip("no constants");
        return;
      }
      for (int i = 0; i < 50; ++i) {
        Word w = cyclically_reduce(s.word(A, s.between(1, long_word)), metric).reduced;
        if (lgr(w) < consts->k) {
          continue;
        }
        for (std::size_t n = 1; n <= 8 && (free || n * lgr(w) <= R); ++n) {
          rec.count();
          rec.expect(metric.quasigeodesic_check(w, n, consts->lambda, consts->eps),
                     "quasigeodesic inequality for " + show(w) + ", n="
                         + std::to_string(n));
        }
      }
    });

    return out;
  }

  std::string format_family(FamilyResult const& r) {
    switch (r.outcome) {
      case FamilyResult::Outcome::pass:
        return "PASS " + r.name + " " + std::to_string(r.cases);
      case FamilyResult::Outcome::fail:
        return "FAIL " + r.name + " " + std::to_string(r.cases)
               + " failures=" + std::to_string(r.failures) + " first=" + r.detail;
      case FamilyResult::Outcome::skip:
        break;
    }
    return "SKIP " + r.name + " " + r.detail;
  }

}  // namespace hypnorm
