#include "hypnorm/sampling.hpp"

namespace hypnorm {

  Word WordSampler::word(AlphabetPtr const& a, std::size_t length) {
    std::vector<Letter> letters;
    letters.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      letters.push_back(letter(*a));
    }
    return Word(a, std::move(letters));
  }

  Word WordSampler::reduced_word(AlphabetPtr const& a, std::size_t length) {
    std::vector<Letter> letters;
    letters.reserve(length);
    while (letters.size() < length) {
      Letter x = letter(*a);
      if (!letters.empty() && letters.back() == x.inverse()) {
        continue;
      }
      letters.push_back(x);
    }
    return Word(a, std::move(letters));
  }

  Word WordSampler::cyclic_word(AlphabetPtr const& a, std::size_t length) {
    while (true) {
      Word w = reduced_word(a, length);
      if (is_cyclically_freely_reduced(w)) {
        return w;
      }
    }
  }

}  // namespace hypnorm
