#ifndef HYPNORM_BOUND_HPP_
#define HYPNORM_BOUND_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypnorm/metric.hpp"
#include "hypnorm/rational.hpp"
#include "hypnorm/words.hpp"

namespace hypnorm {

  enum class ConstantsSource { from_delta, user_supplied };

  // Every k-local geodesic is a (lambda, eps)-quasigeodesic.
  struct LocalGeodesicConstants {
    std::size_t             k;
    Rational                lambda;
    Rational                eps;
    ConstantsSource         source;
    std::optional<Rational> delta;  // set iff source == from_delta

    bool operator==(LocalGeodesicConstants const&) const = default;
  };

  // k = max(2, ceil(8 delta) + 1), lambda = (k + 4 delta) / (k - 4 delta),
  // eps = 2 delta.
  LocalGeodesicConstants constants_from_delta(Rational const& delta);
  // Requires k >= 2, lambda >= 1, eps >= 0.
  LocalGeodesicConstants user_constants(std::size_t     k,
                                        Rational const& lambda,
                                        Rational const& eps);

  // How StableNormEstimate::lower was obtained.
  enum class LowerMethod { none, quasigeodesic, bound_certificate };
  std::string_view to_string(LowerMethod m) noexcept;

  struct NgOutcome {
    enum class Kind { power, finite_order, identity };
    Kind        kind;
    // power: n_g. finite_order: the exponent whose cyclic reduction vanished.
    // identity: 0.
    std::size_t n;

    bool operator==(NgOutcome const&) const = default;
  };

  // 1 + number of freely reduced words of length <= k - 1.
  std::size_t pigeonhole_cap(std::size_t alphabet_size, std::size_t k) noexcept;

  // For i = 2, 3, ...: cyclically reduce g^i; stop once its length reaches k
  // (n_g = i) or it vanishes (finite order). Throws CertificateError when i
  // passes `cap`.
  NgOutcome ng_process(Word const&                   g,
                       Metric const&                 metric,
                       LocalGeodesicConstants const& constants,
                       std::size_t                   cap);

  struct CertificateEntry {
    Word      normal_form;
    NgOutcome outcome;
  };

  struct BoundCertificate {
    LocalGeodesicConstants        constants;
    std::size_t                   ball_radius;
    std::vector<CertificateEntry> table;
    std::size_t                   n_max;
    Rational                      K;
  };

  // Runs ng_process over ball(k - 1); K = k / (lambda * n_max).
  BoundCertificate compute_certificate(Metric const&                 metric,
                                       LocalGeodesicConstants const& constants);

  struct ElementLowerBound {
    Rational    value;
    LowerMethod method;
    std::size_t n_omega;  // 1 on the quasigeodesic path
    Word        cyclic_reduction;
  };

  // Sound lower bound on the stable norm of w: |r| / lambda when the cyclic
  // reduction r has length >= k, otherwise k / (lambda * n_r).
  ElementLowerBound element_lower_bound(Word const&                   w,
                                        Metric const&                 metric,
                                        LocalGeodesicConstants const& constants);

  struct VerificationEntry {
    enum class Status { ok, violation, excluded, unverified };

    Word                       word;
    Status                     status;
    std::optional<Rational>    lower;
    std::optional<Rational>    upper;
    std::optional<std::size_t> oracle;  // exact value, free groups only
    std::string                note;
  };

  struct VerificationReport {
    std::vector<VerificationEntry> entries;
    std::size_t count(VerificationEntry::Status s) const noexcept;
  };

  // Checks K against every sampled word: lower bound >= K, Fekete upper
  // bound over N powers >= K, the free-group oracle value >= K, and lower
  // bound <= oracle. Failures are report entries, never exceptions.
  VerificationReport verify_certificate(BoundCertificate const& cert,
                                        Metric const&           metric,
                                        std::vector<Word> const& sample,
                                        std::size_t              N);

  // Line-based certificate report:
  //   constants k=<int> lambda=<rational> eps=<rational> source=<delta:..|user>
  //   ball radius=<int> size=<int>
  //   entry <normal_form> outcome=<n_g=<int>|finite_order|identity>
  //   nmax=<int>
  //   K=<rational>
  std::string format_certificate(BoundCertificate const& cert);
  BoundCertificate parse_certificate(std::string_view text,
                                     AlphabetPtr const& alphabet);

}  // namespace hypnorm

#endif  // HYPNORM_BOUND_HPP_
