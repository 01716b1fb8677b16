#ifndef HYPNORM_GROUP_HPP_
#define HYPNORM_GROUP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypnorm/rational.hpp"
#include "hypnorm/words.hpp"

namespace hypnorm {

  enum class Strategy { Free, Dehn };

  // Alphabet, relators, word-problem strategy and an optional hyperbolicity
  // constant. Construction validates:
  //   - Free  => no relators
  //   - Dehn  => at least one relator, each nonempty and cyclically freely
  //              reduced
  //   - delta >= 0 when present
  class GroupPresentation {
   public:
    GroupPresentation(AlphabetPtr            alphabet,
                      std::vector<Word>      relators,
                      Strategy               strategy,
                      std::optional<Rational> delta = std::nullopt);

    AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
    std::vector<Word> const& relators() const noexcept { return relators_; }
    Strategy strategy() const noexcept { return strategy_; }
    std::optional<Rational> const& delta() const noexcept { return delta_; }

    Word identity() const { return Word(alphabet_); }
    Word word(std::string_view text) const { return parse_word(text, alphabet_); }

   private:
    AlphabetPtr             alphabet_;
    std::vector<Word>       relators_;
    Strategy                strategy_;
    std::optional<Rational> delta_;
  };

  // All rotations of all relators and of their inverses, deduplicated and
  // sorted shortlex.
  struct SymmetrizedRelators {
    std::vector<Word> words;
  };

  SymmetrizedRelators symmetrize(GroupPresentation const& p);

  // Longest piece over all pairs of distinct cyclic occurrences (relator,
  // orientation, offset). Occurrences that spell the same word (proper powers,
  // repeated relators) contribute a piece of length L - 1.
  std::size_t longest_piece(GroupPresentation const& p);

  // Metric small cancellation C'(1/6): 6 * |piece| < |r| for every relator r
  // containing the piece.
  bool verify_small_cancellation(GroupPresentation const& p);

  // Word-problem oracle for a fixed presentation. Immutable after
  // construction and safe to share between threads.
  class WordProblem {
   public:
    explicit WordProblem(GroupPresentation p);

    GroupPresentation const& presentation() const noexcept { return p_; }
    AlphabetPtr const& alphabet() const noexcept { return p_.alphabet(); }
    SymmetrizedRelators const& symmetrized() const noexcept { return sym_; }

    // True for Free, and for Dehn presentations satisfying C'(1/6).
    bool certified() const noexcept { return certified_; }

    // Free reduction alternated with Dehn replacements, longest match first
    // and leftmost on ties, until neither applies. Never increases length.
    Word dehn_reduce(Word const& w) const;

    // Throws CertificationError when the oracle is not certified.
    bool is_identity(Word const& w) const;
    bool equal(Word const& w1, Word const& w2) const;

    // A conjugacy-blind invariant of the represented element: equal elements
    // always get equal keys. Complete for Free; for Dehn it combines exponent
    // sums with images under homomorphisms onto small permutation groups.
    std::string equality_key(Word const& w) const;

    std::size_t homomorphism_count() const noexcept { return homs_.size(); }

   private:
    static constexpr std::size_t kPermDegree = 5;
    using Perm = std::array<std::uint8_t, kPermDegree>;
    using Hom  = std::vector<std::array<Perm, 2>>;  // per generator: image, inverse

    void find_homomorphisms();

    GroupPresentation        p_;
    SymmetrizedRelators      sym_;
    bool                     certified_;
    std::vector<std::size_t> abelian_generators_;
    bool                     parity_invariant_ = false;
    std::vector<Hom>         homs_;
    // symmetrized relators bucketed by first letter rank
    std::vector<std::vector<std::size_t>> by_first_;
  };

}  // namespace hypnorm

#endif  // HYPNORM_GROUP_HPP_
