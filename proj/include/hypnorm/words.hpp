#ifndef HYPNORM_WORDS_HPP_
#define HYPNORM_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypnorm {

  // Ordered set of generator symbols, single lowercase Latin letters. The
  // order fixes shortlex comparisons: a < A < b < B < ...
  class Alphabet {
   public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    std::string const& symbols() const noexcept { return symbols_; }
    char symbol(std::size_t generator) const { return symbols_.at(generator); }
    // Index of `symbol` (lowercase), or size() when absent.
    std::size_t index_of(char symbol) const noexcept;

    bool operator==(Alphabet const&) const = default;

   private:
    std::string symbols_;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  AlphabetPtr make_alphabet(std::string_view symbols);

  struct Letter {
    std::uint8_t generator = 0;
    std::int8_t  sign      = 1;

    Letter inverse() const noexcept {
      return Letter{generator, static_cast<std::int8_t>(-sign)};
    }
    // Position in the shortlex order a < A < b < B < ...
    std::size_t rank() const noexcept {
      return 2 * std::size_t{generator} + (sign < 0 ? 1 : 0);
    }
    static Letter from_rank(std::size_t rank) noexcept {
      return Letter{static_cast<std::uint8_t>(rank / 2),
                    static_cast<std::int8_t>(rank % 2 == 0 ? 1 : -1)};
    }

    bool operator==(Letter const&) const = default;
  };

  // Immutable sequence of signed generators over a shared alphabet. Nothing
  // is reduced implicitly.
  class Word {
   public:
    explicit Word(AlphabetPtr alphabet);
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
    std::span<Letter const> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    // Letters equal; alphabets are assumed compatible.
    bool operator==(Word const& other) const noexcept {
      return letters_ == other.letters_;
    }
    // Shortlex: shorter first, then lexicographic by Letter::rank.
    std::strong_ordering operator<=>(Word const& other) const noexcept;

   private:
    AlphabetPtr         alphabet_;
    std::vector<Letter> letters_;
  };

  Word parse_word(std::string_view text, AlphabetPtr const& alphabet);
  std::string to_string(Word const& w);

  std::size_t lgr(Word const& w) noexcept;
  Word free_reduce(Word const& w);
  bool is_freely_reduced(Word const& w) noexcept;
  // Freely reduced with no inverse pair across the seam last -> first.
  bool is_cyclically_freely_reduced(Word const& w) noexcept;
  Word invert(Word const& w);
  Word concat(Word const& w1, Word const& w2);
  Word power(Word const& w, std::int64_t n);
  // Moves the first i letters to the end; 0 <= i < max(1, lgr(w)).
  Word rotation(Word const& w, std::size_t i);
  Word subword(Word const& w, std::size_t pos, std::size_t len);

  // Number of freely reduced words of length <= n over `rank` generators,
  // saturating at SIZE_MAX.
  std::size_t count_freely_reduced(std::size_t rank, std::size_t n) noexcept;

}  // namespace hypnorm

#endif  // HYPNORM_WORDS_HPP_
