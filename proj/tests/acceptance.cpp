// Acceptance suite: one PASS/FAIL line per criterion. Exact rational or
// integer comparisons throughout; the only tolerances are wall-clock limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypnorm/bound.hpp"
#include "hypnorm/errors.hpp"
#include "hypnorm/presentation_io.hpp"
#include "hypnorm/sampling.hpp"
#include "hypnorm/stable_norm.hpp"
#include "oracles.hpp"

using namespace hypnorm;

namespace {

  struct Verdict {
    bool        ok;
    std::string detail;
  };

  int failures = 0;

  void criterion(std::string const& name, double limit_seconds,
                 std::function<Verdict()> const& body) {
    auto const start = std::chrono::steady_clock::now();
    Verdict    v;
    try {
      v = body();
    } catch (std::exception const& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = limit_seconds <= 0 || secs < limit_seconds;
    bool const ok      = v.ok && in_time;
    if (!ok) {
      ++failures;
    }
    char timing[64];
    if (limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "time=%.3fs limit=%gs", secs, limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "time=%.3fs", secs);
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name << " " << v.detail << " " << timing
              << (in_time ? "" : " (too slow)") << std::endl;
  }

  GroupPresentation const F2       = *builtin_presentation("F2");
  GroupPresentation const surface2 = *builtin_presentation("surface2");

  Rational q(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

  std::string repeat(std::string const& w, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      out += w;
    }
    return out;
  }

  // |w^n| in F2, straight from string free reduction.
  std::size_t free_power_length(std::string const& w, std::size_t n) {
    return oracle::free_reduce(repeat(w, n)).size();
  }

  // The shared F2 sample: 500 words of length <= 12 with nontrivial (hence
  // infinite-order) image.
  std::vector<Word> const& f2_sample() {
    static std::vector<Word> const sample = [] {
      std::vector<Word> out;
      WordSampler       s(20240501);
      while (out.size() < 500) {
        Word w = s.word(F2.alphabet(), s.between(1, 12));
        if (!oracle::free_reduce(to_string(w)).empty()) {
          out.push_back(std::move(w));
        }
      }
      return out;
    }();
    return sample;
  }

  Verdict free_group_certificate() {
    Metric const metric(F2);
    auto const   cert = compute_certificate(metric, constants_from_delta(Rational(0)));
    auto const&  c    = cert.constants;
    bool const   ok   = c.k == 2 && c.lambda == Rational(1) && c.eps == Rational(0)
                    && cert.n_max == 2 && cert.K == Rational(1);
    std::ostringstream d;
    d << "k=" << c.k << " lambda=" << format_fraction(c.lambda)
      << " eps=" << format_fraction(c.eps) << " nmax=" << cert.n_max
      << " K=" << format_fraction(cert.K);
    return {ok, d.str()};
  }

  Verdict soundness() {
    Metric const metric(F2);
    auto const   constants = constants_from_delta(Rational(0));
    auto const   K         = compute_certificate(metric, constants).K;
    std::size_t  violations = 0;
    for (auto const& w : f2_sample()) {
      auto const exact = q(oracle::cyclic_free_reduce(to_string(w)).size());
      if (q(free_oracle_stable_norm(w, F2)) != exact) {
        ++violations;
      }
      if (exact < K || element_lower_bound(w, metric, constants).value > exact) {
        ++violations;
      }
    }
    return {violations == 0, "words=" + std::to_string(f2_sample().size())
                                 + " violations=" + std::to_string(violations)};
  }

  Verdict fekete_bracketing() {
    Metric const metric(F2);
    std::size_t  violations = 0;
    for (auto const& w : f2_sample()) {
      std::string const reduced = oracle::free_reduce(to_string(w));
      std::string const cyclic  = oracle::cyclic_free_reduce(to_string(w));
      std::size_t const conj    = (reduced.size() - cyclic.size()) / 2;
      auto const        exact   = q(cyclic.size());
      auto const        upper   = stable_norm_estimate(w, metric, 10).upper;
      if (!(exact <= upper && upper <= exact + Rational(2) * q(conj) / 10)) {
        ++violations;
      }
    }
    return {violations == 0, "words=" + std::to_string(f2_sample().size())
                                 + " N=10 violations=" + std::to_string(violations)};
  }

  Verdict conjugacy_invariance() {
    Metric const metric(F2);
    WordSampler  s(4242);
    std::size_t  violations = 0;
    for (int i = 0; i < 200; ++i) {
      Word u = s.word(F2.alphabet(), s.between(1, 10));
      Word a = s.word(F2.alphabet(), s.between(0, 6));
      if (!check_conjugacy_invariance(u, a, metric, 20)) {
        ++violations;
        continue;
      }
      // same inequality against the string oracle
      std::string const us = to_string(u), as = to_string(a);
      std::string const v    = as + us + oracle::inverse(as);
      std::size_t const slack = 2 * oracle::free_reduce(as).size();
      for (std::size_t n = 1; n <= 20; ++n) {
        auto const lu = free_power_length(us, n), lv = free_power_length(v, n);
        if ((lu > lv ? lu - lv : lv - lu) > slack) {
          ++violations;
          break;
        }
      }
    }
    return {violations == 0, "pairs=200 N=20 violations=" + std::to_string(violations)};
  }

  Verdict homogeneity_law() {
    WordSampler s(777);
    std::size_t violations = 0;
    for (int i = 0; i < 200; ++i) {
      Word const        w     = s.cyclic_word(F2.alphabet(), s.between(1, 12));
      std::size_t const exact = oracle::cyclic_free_reduce(to_string(w)).size();
      if (free_oracle_stable_norm(w, F2) != exact) {
        ++violations;
      }
      for (std::size_t m : {2, 3, 5}) {
        if (free_oracle_stable_norm(power(w, static_cast<std::int64_t>(m)), F2)
            != m * free_oracle_stable_norm(w, F2)) {
          ++violations;
        }
      }
    }
    return {violations == 0,
            "words=200 m={2,3,5} violations=" + std::to_string(violations)};
  }

  Verdict k_local_geodesics() {
    std::size_t violations = 0, f2_count = 0, s2_count = 0;
    {
      Metric const metric(F2);
      WordSampler  s(99);
      while (f2_count < 100) {
        Word w = s.cyclic_word(F2.alphabet(), s.between(2, 12));
        ++f2_count;
        if (!metric.is_k_local_geodesic(PeriodicPath(w), 2)) {
          ++violations;
        }
      }
    }
    {
      Metric const metric(surface2, 4);
      WordSampler  s(100);
      while (s2_count < 20) {
        Word w = s.word(surface2.alphabet(), s.between(2, 4));
        // cyclically reduced in the group, not just freely
        Word r = cyclically_reduce(w, metric).reduced;
        if (lgr(r) < 2) {
          continue;
        }
        ++s2_count;
        if (!metric.is_k_local_geodesic(PeriodicPath(r), 2)) {
          ++violations;
        }
      }
    }
    return {violations == 0, "F2=" + std::to_string(f2_count) + " surface2="
                                 + std::to_string(s2_count) + " k=2 violations="
                                 + std::to_string(violations)};
  }

  Verdict quasigeodesic_equality() {
    Metric const metric(F2);
    auto const   c          = constants_from_delta(Rational(0));
    std::size_t  violations = 0, checked = 0;
    for (auto const& w : f2_sample()) {
      std::string const cyclic = oracle::cyclic_free_reduce(to_string(w));
      Word const        r      = parse_word(cyclic, F2.alphabet());
      for (std::size_t n = 1; n <= 8; ++n) {
        ++checked;
        auto const len = metric.element_length(power(r, static_cast<std::int64_t>(n)));
        if (n * lgr(r) != len || len != free_power_length(cyclic, n)
            || !metric.quasigeodesic_check(r, n, c.lambda, c.eps)) {
          ++violations;
        }
      }
    }
    return {violations == 0, "checks=" + std::to_string(checked)
                                 + " violations=" + std::to_string(violations)};
  }

  Verdict surface_sanity() {
    Metric const       metric(surface2, 8);
    auto const&        wp         = metric.word_problem();
    auto const&        sym        = symmetrize(surface2).words;
    std::size_t        violations = 0;
    std::ostringstream d;

    Word const relator = surface2.word("abABcdCD");
    if (!wp.is_identity(relator)) {
      ++violations;
    }
    WordSampler s(2718);
    for (int i = 0; i < 50; ++i) {
      Word t = s.word(surface2.alphabet(), s.between(0, 5));
      Word w = concat(concat(t, sym[s.below(sym.size())]), invert(t));
      if (i % 2 == 1) {
        Word t2 = s.word(surface2.alphabet(), s.between(0, 3));
        w = concat(w, concat(concat(t2, sym[s.below(sym.size())]), invert(t2)));
      }
      if (!wp.is_identity(w)) {
        ++violations;
      }
    }

    auto const b1 = metric.ball(1);
    if (b1.size() != 9) {
      ++violations;
    }
    // spheres from the growth series; nesting by prefix
    auto const  expected = oracle::genus2_spheres(5);
    auto const  b4       = metric.ball(4);
    std::size_t total    = 0;
    for (std::size_t r = 0; r <= 4; ++r) {
      total += static_cast<std::size_t>(expected[r]);
      auto const br = b4.truncated(r);
      if (br.size() != total) {
        ++violations;
      }
      if (r > 0) {
        auto const prev = b4.truncated(r - 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
          if (!(prev.entries()[i].normal_form == br.entries()[i].normal_form)) {
            ++violations;
            break;
          }
        }
      }
    }

    for (int i = 0; i < 200; ++i) {
      Word x = s.word(surface2.alphabet(), s.between(0, 4));
      Word y = s.word(surface2.alphabet(), s.between(0, 4));
      Word z = s.word(surface2.alphabet(), s.between(0, 4));
      if (metric.distance(x, z) > metric.distance(x, y) + metric.distance(y, z)) {
        ++violations;
      }
    }
    d << "conjugates=50 |B(1)|=" << b1.size() << " |B(4)|=" << b4.size()
      << " triples=200 violations=" << violations;
    return {violations == 0, d.str()};
  }

  Verdict subadditivity() {
    std::size_t violations = 0;
    {
      WordSampler s(31415);
      for (int i = 0; i < 50; ++i) {
        std::string const g = to_string(s.word(F2.alphabet(), s.between(1, 12)));
        for (std::size_t n = 1; n < 8; ++n) {
          for (std::size_t m = 1; n + m <= 8; ++m) {
            if (free_power_length(g, n + m)
                > free_power_length(g, n) + free_power_length(g, m)) {
              ++violations;
            }
          }
        }
      }
    }
    {
      // g = c x c^-1 times a conjugated relator: |g^8| <= 2|c| + 8 <= 12
      Metric const metric(surface2, 12);
      auto const&  sym = symmetrize(surface2).words;
      WordSampler  s(27182);
      for (int i = 0; i < 50; ++i) {
        Word c = s.word(surface2.alphabet(), s.between(0, 2));
        Word x(surface2.alphabet(), {s.letter(*surface2.alphabet())});
        Word t = s.word(surface2.alphabet(), s.between(0, 1));
        Word g = concat(concat(concat(c, x), invert(c)),
                        concat(concat(t, sym[s.below(sym.size())]), invert(t)));
        std::array<std::size_t, 9> len{};
        for (std::size_t n = 1; n <= 8; ++n) {
          len[n] = metric.element_length(power(g, static_cast<std::int64_t>(n)));
        }
        for (std::size_t n = 1; n < 8; ++n) {
          for (std::size_t m = 1; n + m <= 8; ++m) {
            if (len[n + m] > len[n] + len[m]) {
              ++violations;
            }
          }
        }
      }
    }
    return {violations == 0,
            "F2=50 surface2=50 n+m<=8 violations=" + std::to_string(violations)};
  }

  std::pair<int, std::string> capture(std::string const& command) {
    std::string out;
    FILE*       pipe = popen(command.c_str(), "r");
    if (!pipe) {
      return {-1, out};
    }
    std::array<char, 4096> buf;
    std::size_t            n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), n);
    }
    return {pclose(pipe), out};
  }

  Verdict determinism() {
    std::string const cmd = std::string("\"") + HYPNORM_CLI_PATH
                            + "\" verify -g F2 --delta 0 --seed 7 --report";
    auto const a = capture(cmd);
    auto const b = capture(cmd);
    bool const ok = a.first == 0 && b.first == 0 && !a.second.empty()
                    && a.second == b.second;
    return {ok, "bytes=" + std::to_string(a.second.size())
                    + (a.second == b.second ? " identical" : " differ")};
  }

}  // namespace

int main() {
  criterion("free_group_certificate", 1, free_group_certificate);
  criterion("lower_bound_soundness_F2", 30, soundness);
  criterion("fekete_bracketing", 0, fekete_bracketing);
  criterion("conjugacy_invariance", 0, conjugacy_invariance);
  criterion("homogeneity_exact_law", 0, homogeneity_law);
  criterion("k_local_geodesic", 120, k_local_geodesics);
  criterion("quasigeodesic_equality", 0, quasigeodesic_equality);
  criterion("surface2_word_problem_and_metric", 120, surface_sanity);
  criterion("power_length_subadditivity", 0, subadditivity);
  criterion("cli_determinism", 0, determinism);
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
