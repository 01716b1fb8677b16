#include "hypnorm/bound.hpp"

#include <algorithm>
#include <sstream>

#include "hypnorm/errors.hpp"
#include "hypnorm/stable_norm.hpp"

namespace hypnorm {

  LocalGeodesicConstants constants_from_delta(Rational const& delta) {
    if (delta < 0) {
      throw DomainError("delta must be nonnegative");
    }
    auto const k = std::max<std::int64_t>(2, ceil(delta * 8) + 1);
    Rational const kq(k);
    return LocalGeodesicConstants{static_cast<std::size_t>(k),
                                  (kq + delta * 4) / (kq - delta * 4),
                                  delta * 2,
                                  ConstantsSource::from_delta,
                                  delta};
  }

  LocalGeodesicConstants user_constants(std::size_t     k,
                                        Rational const& lambda,
                                        Rational const& eps) {
    if (k < 2) {
      throw DomainError("k must be at least 2");
    }
    if (lambda < 1) {
      throw DomainError("lambda must be at least 1");
    }
    if (eps < 0) {
      throw DomainError("eps must be nonnegative");
    }
    return LocalGeodesicConstants{k, lambda, eps, ConstantsSource::user_supplied,
                                  std::nullopt};
  }

  std::string_view to_string(LowerMethod m) noexcept {
    switch (m) {
      case LowerMethod::quasigeodesic:
        return "quasigeodesic";
      case LowerMethod::bound_certificate:
        return "bound_certificate";
      case LowerMethod::none:
        break;
    }
    return "none";
  }

  std::size_t pigeonhole_cap(std::size_t alphabet_size, std::size_t k) noexcept {
    auto n = count_freely_reduced(alphabet_size, k - 1);
    return n == std::numeric_limits<std::size_t>::max() ? n : n + 1;
  }

  NgOutcome ng_process(Word const&                   g,
                       Metric const&                 metric,
                       LocalGeodesicConstants const& constants,
                       std::size_t                   cap) {
    if (g.empty()) {
      return NgOutcome{NgOutcome::Kind::identity, 0};
    }
    for (std::size_t i = 2;; ++i) {
      if (i > cap) {
        throw CertificateError(
            "pigeonhole cap exceeded for '" + to_string(g)
            + "': presentation may not be hyperbolic or constants invalid");
      }
      auto const r = cyclically_reduce(power(g, static_cast<std::int64_t>(i)),
                                       metric)
                         .reduced;
      if (r.size() >= constants.k) {
        return NgOutcome{NgOutcome::Kind::power, i};
      }
      if (r.empty()) {
        return NgOutcome{NgOutcome::Kind::finite_order, i};
      }
    }
  }

  BoundCertificate compute_certificate(Metric const&                 metric,
                                       LocalGeodesicConstants const& constants) {
    std::size_t const radius = constants.k - 1;
    Ball const        b      = metric.ball(radius);
    std::size_t const cap =
        pigeonhole_cap(metric.presentation().alphabet()->size(), constants.k);

    BoundCertificate cert{constants, radius, {}, 0, Rational(0)};
    cert.table.reserve(b.size());
    for (auto const& e : b.entries()) {
      auto outcome = ng_process(e.normal_form, metric, constants, cap);
      if (outcome.kind == NgOutcome::Kind::power) {
        cert.n_max = std::max(cert.n_max, outcome.n);
      }
      cert.table.push_back(CertificateEntry{e.normal_form, outcome});
    }
    if (cert.n_max == 0) {
      throw CertificateError(
          "no infinite-order element in the ball of radius "
          + std::to_string(radius) + " (degenerate: finite group?)");
    }
    cert.K = Rational(static_cast<std::int64_t>(constants.k))
             / (constants.lambda * static_cast<std::int64_t>(cert.n_max));
    return cert;
  }

  ElementLowerBound element_lower_bound(Word const&                   w,
                                        Metric const&                 metric,
                                        LocalGeodesicConstants const& constants) {
    auto const r = cyclically_reduce(w, metric).reduced;
    if (r.empty()) {
      throw FiniteOrderError("'" + to_string(w) + "' represents the identity",
                             1);
    }
    if (r.size() >= constants.k) {
      return ElementLowerBound{
          Rational(static_cast<std::int64_t>(r.size())) / constants.lambda,
          LowerMethod::quasigeodesic, 1, r};
    }
    auto const cap =
        pigeonhole_cap(metric.presentation().alphabet()->size(), constants.k);
    auto const outcome = ng_process(r, metric, constants, cap);
    if (outcome.kind != NgOutcome::Kind::power) {
      throw FiniteOrderError("'" + to_string(w) + "' has finite order",
                             outcome.n);
    }
    return ElementLowerBound{
        Rational(static_cast<std::int64_t>(constants.k))
            / (constants.lambda * static_cast<std::int64_t>(outcome.n)),
        LowerMethod::bound_certificate, outcome.n, r};
  }

  std::size_t VerificationReport::count(
      VerificationEntry::Status s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(),
                      [s](auto const& e) { return e.status == s; }));
  }

  VerificationReport verify_certificate(BoundCertificate const&  cert,
                                        Metric const&            metric,
                                        std::vector<Word> const& sample,
                                        std::size_t              N) {
    using Status = VerificationEntry::Status;
    VerificationReport report;
    bool const free = metric.presentation().strategy() == Strategy::Free;
    for (auto const& w : sample) {
      VerificationEntry entry{w, Status::ok, {}, {}, {}, {}};
      try {
        entry.lower = element_lower_bound(w, metric, cert.constants).value;
        if (N > 0) {
          std::vector<Rational> values;
          for (auto u : power_lengths(w, metric, N)) {
            values.emplace_back(static_cast<std::int64_t>(u));
          }
          entry.upper = fekete_upper(SubadditiveSequence(std::move(values)));
        }
        if (free) {
          entry.oracle = free_oracle_stable_norm(w, metric.presentation());
        }
      } catch (FiniteOrderError const& e) {
        entry.status = Status::excluded;
        entry.note   = e.what();
        report.entries.push_back(std::move(entry));
        continue;
      } catch (std::exception const& e) {
        entry.status = Status::unverified;
        entry.note   = e.what();
        report.entries.push_back(std::move(entry));
        continue;
      }
      std::vector<std::string> failures;
      if (*entry.lower < cert.K) {
        failures.push_back("lower bound below K");
      }
      if (entry.upper && *entry.upper < cert.K) {
        failures.push_back("upper bound below K");
      }
      if (entry.oracle) {
        Rational const exact(static_cast<std::int64_t>(*entry.oracle));
        if (exact < cert.K) {
          failures.push_back("oracle value below K");
        }
        if (*entry.lower > exact) {
          failures.push_back("lower bound above oracle value");
        }
      }
      if (!failures.empty()) {
        entry.status = Status::violation;
        for (std::size_t i = 0; i < failures.size(); ++i) {
          entry.note += (i ? "; " : "") + failures[i];
        }
      }
      report.entries.push_back(std::move(entry));
    }
    return report;
  }

  std::string format_certificate(BoundCertificate const& cert) {
    std::ostringstream out;
    auto const&        c = cert.constants;
    out << "constants k=" << c.k << " lambda=" << format_fraction(c.lambda)
        << " eps=" << format_fraction(c.eps) << " source=";
    if (c.source == ConstantsSource::from_delta && c.delta) {
      out << "delta:" << format_decimal(*c.delta);
    } else {
      out << "user";
    }
    out << "\n";
    out << "ball radius=" << cert.ball_radius << " size=" << cert.table.size()
        << "\n";
    for (auto const& e : cert.table) {
      out << "entry " << to_string(e.normal_form) << " outcome=";
      switch (e.outcome.kind) {
        case NgOutcome::Kind::power:
          out << "n_g=" << e.outcome.n;
          break;
        case NgOutcome::Kind::finite_order:
          out << "finite_order";
          break;
        case NgOutcome::Kind::identity:
          out << "identity";
          break;
      }
      out << "\n";
    }
    out << "nmax=" << cert.n_max << "\n";
    out << "K=" << format_fraction(cert.K) << "\n";
    return out.str();
  }

  namespace {
    std::vector<std::string_view> split_spaces(std::string_view line) {
      std::vector<std::string_view> out;
      while (true) {
        auto sp = line.find(' ');
        out.push_back(line.substr(0, sp));
        if (sp == std::string_view::npos) {
          return out;
        }
        line.remove_prefix(sp + 1);
      }
    }

    std::string_view field(std::string_view token, std::string_view name) {
      if (token.substr(0, name.size()) != name
          || token.size() <= name.size() || token[name.size()] != '=') {
        throw ParseError("expected field '" + std::string(name) + "=' in '"
                         + std::string(token) + "'");
      }
      return token.substr(name.size() + 1);
    }

    std::size_t parse_count(std::string_view text) {
      auto q = parse_rational(text);
      if (q.denominator() != 1 || q < 0) {
        throw ParseError("expected a natural number, got '" + std::string(text)
                         + "'");
      }
      return static_cast<std::size_t>(q.numerator());
    }
  }  // namespace

  BoundCertificate parse_certificate(std::string_view   text,
                                     AlphabetPtr const& alphabet) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
      auto eol = text.find('\n');
      lines.push_back(text.substr(0, eol));
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    }
    if (lines.size() < 4) {
      throw ParseError("certificate report too short");
    }
    BoundCertificate cert{LocalGeodesicConstants{}, 0, {}, 0, Rational(0)};

    auto head = split_spaces(lines[0]);
    if (head.size() != 5 || head[0] != "constants") {
      throw ParseError("malformed constants line");
    }
    auto& c  = cert.constants;
    c.k      = parse_count(field(head[1], "k"));
    c.lambda = parse_rational(field(head[2], "lambda"));
    c.eps    = parse_rational(field(head[3], "eps"));
    auto src = field(head[4], "source");
    if (src == "user") {
      c.source = ConstantsSource::user_supplied;
    } else if (src.substr(0, 6) == "delta:") {
      c.source = ConstantsSource::from_delta;
      c.delta  = parse_rational(src.substr(6));
    } else {
      throw ParseError("unknown constants source '" + std::string(src) + "'");
    }

    auto ball = split_spaces(lines[1]);
    if (ball.size() != 3 || ball[0] != "ball") {
      throw ParseError("malformed ball line");
    }
    cert.ball_radius  = parse_count(field(ball[1], "radius"));
    std::size_t const size = parse_count(field(ball[2], "size"));

    if (lines.size() != size + 4) {
      throw ParseError("entry count does not match ball size");
    }
    for (std::size_t i = 0; i < size; ++i) {
      auto parts = split_spaces(lines[2 + i]);
      if (parts.size() != 3 || parts[0] != "entry") {
        throw ParseError("malformed entry line");
      }
      auto      outcome = field(parts[2], "outcome");
      NgOutcome o{NgOutcome::Kind::identity, 0};
      if (outcome == "finite_order") {
        o.kind = NgOutcome::Kind::finite_order;
      } else if (outcome.substr(0, 4) == "n_g=") {
        o = NgOutcome{NgOutcome::Kind::power, parse_count(outcome.substr(4))};
      } else if (outcome != "identity") {
        throw ParseError("unknown outcome '" + std::string(outcome) + "'");
      }
      cert.table.push_back(CertificateEntry{parse_word(parts[1], alphabet), o});
    }
    cert.n_max = parse_count(field(lines[2 + size], "nmax"));
    cert.K     = parse_rational(field(lines[3 + size], "K"));
    return cert;
  }

}  // namespace hypnorm
