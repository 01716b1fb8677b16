#ifndef HYPNORM_SAMPLING_HPP_
#define HYPNORM_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "hypnorm/words.hpp"

namespace hypnorm {

  // Seeded word sampler. The generator is std::mt19937_64, whose output
  // sequence is fixed by the standard; bounded draws use `next() % n` rather
  // than std::uniform_int_distribution so that samples are identical across
  // standard library implementations.
  class WordSampler {
   public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    // Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    // Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) {
      return lo + below(hi - lo + 1);
    }

    Letter letter(Alphabet const& a) {
      return Letter::from_rank(below(2 * a.size()));
    }
    // Any word of exactly `length` letters, reductions allowed.
    Word word(AlphabetPtr const& a, std::size_t length);
    // Freely reduced word of exactly `length` letters.
    Word reduced_word(AlphabetPtr const& a, std::size_t length);
    // Cyclically freely reduced word of exactly `length` letters (length >= 1).
    Word cyclic_word(AlphabetPtr const& a, std::size_t length);

   private:
    std::mt19937_64 rng_;
  };

}  // namespace hypnorm

#endif  // HYPNORM_SAMPLING_HPP_
