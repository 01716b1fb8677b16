#include "hypnorm/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "hypnorm/errors.hpp"
#include "hypnorm/metric.hpp"
#include "hypnorm/presentation_io.hpp"
#include "hypnorm/stable_norm.hpp"
#include "hypnorm/verify.hpp"

namespace hypnorm::cli {

  namespace {

    // Maps library exceptions onto exit codes.
    int guarded(std::ostream& err, std::function<int()> const& body) {
      try {
        return body();
      } catch (FiniteOrderError const& e) {
        err << "finite order: " << e.what() << "\n";
        return kFiniteOrder;
      } catch (CertificateError const& e) {
        err << "certificate error: " << e.what() << "\n";
        return kDegenerate;
      } catch (ResourceError const& e) {
        err << "resource error: " << e.what() << "\n";
        return kInputError;
      } catch (ParseError const& e) {
        err << "parse error: " << e.what() << "\n";
        return kInputError;
      } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
      }
    }

    void require_scale(RunConfig const& config) {
      if (config.r_max == 0) {
        throw DomainError("degenerate scale: --rmax must be at least 1");
      }
      if (config.N == 0) {
        throw DomainError("degenerate scale: -N must be at least 1");
      }
    }

  }  // namespace

  std::optional<LocalGeodesicConstants> resolve_constants(RunConfig const& config) {
    if (config.delta && config.constants) {
      throw DomainError("--delta and --constants are mutually exclusive");
    }
    if (config.delta) {
      return constants_from_delta(parse_rational(*config.delta));
    }
    if (config.constants) {
      std::vector<std::string> parts;
      std::string_view         rest = *config.constants;
      while (true) {
        auto comma = rest.find(',');
        parts.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) {
          break;
        }
        rest.remove_prefix(comma + 1);
      }
      if (parts.size() != 3) {
        throw ParseError("--constants expects k,lambda,eps");
      }
      auto k = parse_rational(parts[0]);
      if (k.denominator() != 1 || k < 0) {
        throw ParseError("k must be a natural number");
      }
      return user_constants(static_cast<std::size_t>(k.numerator()),
                            parse_rational(parts[1]), parse_rational(parts[2]));
    }
    return std::nullopt;
  }

  int cmd_reduce(RunConfig const& config, std::string const& word_text,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      require_scale(config);
      Metric     metric(load_presentation(config.group), config.r_max);
      Word const w = parse_word(word_text, metric.presentation().alphabet());
      Word const g = metric.geodesic_representative(w);
      auto const c = cyclically_reduce(w, metric);
      out << "geodesic=" << to_string(g) << " cyclic=" << to_string(c.reduced)
          << " conjugator=" << to_string(c.conjugator) << "\n";
      return kSuccess;
    });
  }

  int cmd_stable_norm(RunConfig const& config, std::string const& word_text,
                      std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      require_scale(config);
      auto const constants = resolve_constants(config);
      Metric     metric(load_presentation(config.group), config.r_max);
      Word const w   = parse_word(word_text, metric.presentation().alphabet());
      auto const est = stable_norm_estimate(w, metric, config.N, constants);
      out << "lower=" << format_decimal(est.lower)
          << " upper=" << format_decimal(est.upper) << " N=" << est.terms_used
          << " method=" << to_string(est.lower_method) << "\n";
      return kSuccess;
    });
  }

  int cmd_bound(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      require_scale(config);
      auto const p         = load_presentation(config.group);
      auto const constants = resolve_constants(config);
      if (!constants) {
        err << "no constants: pass --delta or --constants";
        if (p.delta()) {
          err << " (presentation declares delta=" << format_decimal(*p.delta())
              << ")";
        }
        err << "\n";
        return kInputError;
      }
      Metric metric(p, config.r_max);
      out << format_certificate(compute_certificate(metric, *constants));
      return kSuccess;
    });
  }

  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      require_scale(config);
      auto const constants = resolve_constants(config);
      Metric     metric(load_presentation(config.group), config.r_max);
      if (config.mode == OutputMode::report) {
        out << "verify group=" << config.group << " seed=" << config.seed
            << " rmax=" << config.r_max << " N=" << config.N << "\n";
      }
      auto const results = run_invariant_suites(
          metric, SuiteConfig{config.seed, config.N, constants});
      std::size_t passed = 0, failed = 0, skipped = 0;
      for (auto const& r : results) {
        out << format_family(r) << "\n";
        switch (r.outcome) {
          case FamilyResult::Outcome::pass:
            ++passed;
            break;
          case FamilyResult::Outcome::fail:
            ++failed;
            break;
          case FamilyResult::Outcome::skip:
            ++skipped;
            break;
        }
      }
      if (config.mode == OutputMode::report) {
        out << "result=" << (failed == 0 ? "pass" : "fail") << "\n";
      } else {
        out << passed << " passed, " << failed << " failed, " << skipped
            << " skipped\n";
      }
      return failed == 0 ? kSuccess : kVerifyFailed;
    });
  }

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App  app{"Word metrics, stable norms and uniform lower bounds in "
                 "word hyperbolic groups",
                 "hypnorm"};
    RunConfig config;
    bool      report = false;
    std::string word;

    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("-g,--group", config.group,
                      "built-in group (F1, F2, F3, surface2) or presentation file");
      auto* delta = sub->add_option("--delta", config.delta,
                                    "hyperbolicity constant (decimal)");
      auto* constants = sub->add_option("--constants", config.constants,
                                        "explicit k,lambda,eps");
      delta->excludes(constants);
      sub->add_option("-N", config.N, "power horizon")->capture_default_str();
      sub->add_option("--rmax", config.r_max, "maximum ball radius")
          ->capture_default_str();
      sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
      sub->add_flag("--report", report, "machine-readable output");
    };

    auto* reduce = app.add_subcommand("reduce", "geodesic and cyclic reduction");
    add_common(reduce);
    reduce->add_option("word", word, "word text, e.g. abAB")->required();

    auto* norm = app.add_subcommand("stable-norm", "two-sided stable norm estimate");
    add_common(norm);
    norm->add_option("word", word, "word text, e.g. abAB")->required();

    auto* bound = app.add_subcommand("bound", "uniform lower bound certificate");
    add_common(bound);

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    add_common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kSuccess;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kSuccess;
    } catch (CLI::ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return kInputError;
    }
    config.mode = report ? OutputMode::report : OutputMode::text;

    if (reduce->parsed()) {
      return cmd_reduce(config, word, out, err);
    }
    if (norm->parsed()) {
      return cmd_stable_norm(config, word, out, err);
    }
    if (bound->parsed()) {
      return cmd_bound(config, out, err);
    }
    return cmd_verify(config, out, err);
  }

}  // namespace hypnorm::cli
