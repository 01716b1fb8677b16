#include "hypnorm/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
      throw DomainError("alphabet must be nonempty");
    }
    if (symbols_.size() > 26) {
      throw DomainError("alphabet has more than 26 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char c = symbols_[i];
      if (c < 'a' || c > 'z') {
        throw DomainError(std::string("alphabet symbol '") + c
                          + "' is not a lowercase Latin letter");
      }
      if (symbols_.find(c, i + 1) != std::string::npos) {
        throw DomainError(std::string("duplicate alphabet symbol '") + c + "'");
      }
    }
  }

  std::size_t Alphabet::index_of(char symbol) const noexcept {
    auto pos = symbols_.find(symbol);
    return pos == std::string::npos ? symbols_.size() : pos;
  }

  AlphabetPtr make_alphabet(std::string_view symbols) {
    return std::make_shared<Alphabet const>(symbols);
  }

  Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) {
      throw DomainError("word requires an alphabet");
    }
  }

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) {
      throw DomainError("word requires an alphabet");
    }
    for (auto const& x : letters_) {
      if (x.generator >= alphabet_->size() || (x.sign != 1 && x.sign != -1)) {
        throw DomainError("letter outside alphabet '" + alphabet_->symbols()
                          + "'");
      }
    }
  }

  std::strong_ordering Word::operator<=>(Word const& other) const noexcept {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (auto c = letters_[i].rank() <=> other.letters_[i].rank(); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  Word parse_word(std::string_view text, AlphabetPtr const& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char        c     = text[i];
      bool        lower = c >= 'a' && c <= 'z';
      bool        upper = c >= 'A' && c <= 'Z';
      std::size_t gen   = alphabet->size();
      if (lower || upper) {
        gen = alphabet->index_of(static_cast<char>(
            std::tolower(static_cast<unsigned char>(c))));
      }
      if (gen == alphabet->size()) {
        throw ParseError(std::string("unknown letter '") + c + "' at position "
                         + std::to_string(i + 1));
      }
      letters.push_back(Letter{static_cast<std::uint8_t>(gen),
                               static_cast<std::int8_t>(lower ? 1 : -1)});
    }
    return Word(alphabet, std::move(letters));
  }

  std::string to_string(Word const& w) {
    std::string out;
    out.reserve(w.size());
    for (auto x : w.letters()) {
      char c = w.alphabet()->symbol(x.generator);
      out.push_back(x.sign > 0 ? c
                               : static_cast<char>(std::toupper(
                                   static_cast<unsigned char>(c))));
    }
    return out;
  }

  std::size_t lgr(Word const& w) noexcept {
    return w.size();
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto x : w.letters()) {
      if (!stack.empty() && stack.back() == x.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(w.alphabet(), std::move(stack));
  }

  bool is_freely_reduced(Word const& w) noexcept {
    auto l = w.letters();
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (l[i] == l[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_freely_reduced(Word const& w) noexcept {
    if (!is_freely_reduced(w)) {
      return false;
    }
    auto l = w.letters();
    return l.size() < 2 || !(l.front() == l.back().inverse());
  }

  Word invert(Word const& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& x : out) {
      x = x.inverse();
    }
    return Word(w.alphabet(), std::move(out));
  }

  Word concat(Word const& w1, Word const& w2) {
    if (w1.alphabet() != w2.alphabet() && *w1.alphabet() != *w2.alphabet()) {
      throw DomainError("alphabet mismatch: '" + w1.alphabet()->symbols()
                        + "' vs '" + w2.alphabet()->symbols() + "'");
    }
    std::vector<Letter> out;
    out.reserve(w1.size() + w2.size());
    out.insert(out.end(), w1.letters().begin(), w1.letters().end());
    out.insert(out.end(), w2.letters().begin(), w2.letters().end());
    return Word(w1.alphabet(), std::move(out));
  }

  Word power(Word const& w, std::int64_t n) {
    Word const base = n < 0 ? invert(w) : w;
    auto       reps = static_cast<std::size_t>(n < 0 ? -n : n);
    std::vector<Letter> out;
    out.reserve(reps * w.size());
    for (std::size_t i = 0; i < reps; ++i) {
      out.insert(out.end(), base.letters().begin(), base.letters().end());
    }
    return Word(w.alphabet(), std::move(out));
  }

  Word rotation(Word const& w, std::size_t i) {
    if (i >= std::max<std::size_t>(1, w.size())) {
      throw DomainError("rotation index " + std::to_string(i)
                        + " out of range for word of length "
                        + std::to_string(w.size()));
    }
    std::vector<Letter> out(w.letters().begin(), w.letters().end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i),
                out.end());
    return Word(w.alphabet(), std::move(out));
  }

  Word subword(Word const& w, std::size_t pos, std::size_t len) {
    if (pos > w.size() || len > w.size() - pos) {
      throw DomainError("subword out of range");
    }
    auto l = w.letters().subspan(pos, len);
    return Word(w.alphabet(), std::vector<Letter>(l.begin(), l.end()));
  }

  std::size_t count_freely_reduced(std::size_t rank, std::size_t n) noexcept {
    constexpr auto max = std::numeric_limits<std::size_t>::max();
    std::size_t    total  = 1;
    std::size_t    sphere = 2 * rank;
    for (std::size_t j = 1; j <= n; ++j) {
      if (total > max - sphere) {
        return max;
      }
      total += sphere;
      if (j < n) {
        if (rank > 0 && sphere > max / (2 * rank - 1)) {
          sphere = max;
        } else {
          sphere *= (2 * rank - 1);
        }
      }
    }
    return total;
  }

}  // namespace hypnorm
