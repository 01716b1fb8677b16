#include "hypnorm/group.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  GroupPresentation::GroupPresentation(AlphabetPtr             alphabet,
                                       std::vector<Word>       relators,
                                       Strategy                strategy,
                                       std::optional<Rational> delta)
      : alphabet_(std::move(alphabet)),
        relators_(std::move(relators)),
        strategy_(strategy),
        delta_(delta) {
    if (!alphabet_) {
      throw DomainError("presentation requires an alphabet");
    }
    if (strategy_ == Strategy::Free && !relators_.empty()) {
      throw DomainError("free strategy admits no relators");
    }
    if (strategy_ == Strategy::Dehn && relators_.empty()) {
      throw DomainError("dehn strategy requires at least one relator");
    }
    for (auto const& r : relators_) {
      if (*r.alphabet() != *alphabet_) {
        throw DomainError("relator alphabet does not match presentation");
      }
      if (r.empty()) {
        throw DomainError("relators must be nonempty");
      }
      if (!is_cyclically_freely_reduced(r)) {
        throw DomainError("relator '" + to_string(r)
                          + "' is not cyclically freely reduced");
      }
    }
    if (delta_ && *delta_ < 0) {
      throw DomainError("delta must be nonnegative");
    }
  }

  SymmetrizedRelators symmetrize(GroupPresentation const& p) {
    if (p.strategy() == Strategy::Free) {
      throw DomainError("no relators");
    }
    std::set<Word> words;
    for (auto const& r : p.relators()) {
      for (auto const& s : {r, invert(r)}) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          words.insert(rotation(s, i));
        }
      }
    }
    return SymmetrizedRelators{{words.begin(), words.end()}};
  }

  namespace {
    std::vector<Word> cyclic_occurrences(GroupPresentation const& p) {
      std::vector<Word> out;
      for (auto const& r : p.relators()) {
        for (auto const& s : {r, invert(r)}) {
          for (std::size_t i = 0; i < s.size(); ++i) {
            out.push_back(rotation(s, i));
          }
        }
      }
      return out;
    }

    // Common prefix of two occurrences, capped below the shorter length.
    std::size_t piece_length(Word const& u, Word const& v) {
      std::size_t n = std::min(u.size(), v.size());
      std::size_t m = 0;
      while (m < n && u[m] == v[m]) {
        ++m;
      }
      return std::min(m, n - 1);
    }
  }  // namespace

  std::size_t longest_piece(GroupPresentation const& p) {
    auto const occurrences = cyclic_occurrences(p);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
      for (std::size_t j = i + 1; j < occurrences.size(); ++j) {
        longest = std::max(
            longest, piece_length(occurrences[i], occurrences[j]));
      }
    }
    return longest;
  }

  bool verify_small_cancellation(GroupPresentation const& p) {
    if (p.strategy() == Strategy::Free) {
      return true;
    }
    auto const occurrences = cyclic_occurrences(p);
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
      for (std::size_t j = i + 1; j < occurrences.size(); ++j) {
        auto const& u = occurrences[i];
        auto const& v = occurrences[j];
        auto        m = piece_length(u, v);
        if (6 * m >= u.size() || 6 * m >= v.size()) {
          return false;
        }
      }
    }
    return true;
  }

  WordProblem::WordProblem(GroupPresentation p)
      : p_(std::move(p)), certified_(verify_small_cancellation(p_)) {
    if (p_.strategy() == Strategy::Free) {
      return;
    }
    sym_ = symmetrize(p_);
    by_first_.resize(2 * p_.alphabet()->size());
    for (std::size_t i = 0; i < sym_.words.size(); ++i) {
      by_first_[sym_.words[i][0].rank()].push_back(i);
    }
    for (std::size_t g = 0; g < p_.alphabet()->size(); ++g) {
      bool zero_everywhere = true;
      for (auto const& r : p_.relators()) {
        int sum = 0;
        for (auto x : r.letters()) {
          if (x.generator == g) {
            sum += x.sign;
          }
        }
        zero_everywhere = zero_everywhere && sum == 0;
      }
      if (zero_everywhere) {
        abelian_generators_.push_back(g);
      }
    }
    parity_invariant_ = std::all_of(
        p_.relators().begin(), p_.relators().end(),
        [](Word const& r) { return r.size() % 2 == 0; });
    find_homomorphisms();
  }

  Word WordProblem::dehn_reduce(Word const& w) const {
    Word current = free_reduce(w);
    if (p_.strategy() == Strategy::Free) {
      return current;
    }
    while (true) {
      std::size_t best_len = 0, best_pos = 0, best_rel = 0;
      auto        letters  = current.letters();
      for (std::size_t pos = 0; pos < letters.size(); ++pos) {
        for (std::size_t idx : by_first_[letters[pos].rank()]) {
          auto const& s = sym_.words[idx];
          std::size_t n = std::min(s.size(), letters.size() - pos);
          std::size_t m = 0;
          while (m < n && letters[pos + m] == s[m]) {
            ++m;
          }
          if (2 * m > s.size() && m > best_len) {
            best_len = m;
            best_pos = pos;
            best_rel = idx;
          }
        }
      }
      if (best_len == 0) {
        return current;
      }
      auto const& s = sym_.words[best_rel];
      // s = u v with u the matched prefix, so u = v^-1 in G.
      std::vector<Letter> next(letters.begin(),
                               letters.begin() + static_cast<std::ptrdiff_t>(best_pos));
      for (std::size_t i = s.size(); i > best_len; --i) {
        next.push_back(s[i - 1].inverse());
      }
      next.insert(next.end(),
                  letters.begin() + static_cast<std::ptrdiff_t>(best_pos + best_len),
                  letters.end());
      current = free_reduce(Word(current.alphabet(), std::move(next)));
    }
  }

  bool WordProblem::is_identity(Word const& w) const {
    if (!certified_) {
      throw CertificationError("word problem oracle not certified");
    }
    return dehn_reduce(w).empty();
  }

  bool WordProblem::equal(Word const& w1, Word const& w2) const {
    return is_identity(concat(w1, invert(w2)));
  }

  std::string WordProblem::equality_key(Word const& w) const {
    std::string key;
    if (p_.strategy() == Strategy::Free) {
      Word reduced = free_reduce(w);
      key.reserve(reduced.size());
      for (auto x : reduced.letters()) {
        key.push_back(static_cast<char>(x.rank()));
      }
      return key;
    }
    for (auto g : abelian_generators_) {
      int sum = 0;
      for (auto x : w.letters()) {
        if (x.generator == g) {
          sum += x.sign;
        }
      }
      key.append(reinterpret_cast<char const*>(&sum), sizeof(sum));
    }
    if (parity_invariant_) {
      key.push_back(static_cast<char>(w.size() % 2));
    }
    for (auto const& hom : homs_) {
      Perm point;
      for (std::size_t i = 0; i < kPermDegree; ++i) {
        point[i] = static_cast<std::uint8_t>(i);
      }
      for (auto x : w.letters()) {
        auto const& image = hom[x.generator][x.sign > 0 ? 0 : 1];
        for (auto& v : point) {
          v = image[v];
        }
      }
      key.append(point.begin(), point.end());
    }
    return key;
  }

  void WordProblem::find_homomorphisms() {
    constexpr std::size_t kWanted   = 6;
    constexpr std::size_t kAttempts = 400;

    std::size_t const n_gens = p_.alphabet()->size();
    std::size_t       solve  = 0;
    for (auto const& r : p_.relators()) {
      for (auto x : r.letters()) {
        solve = std::max<std::size_t>(solve, x.generator);
      }
    }

    std::vector<Perm> all;
    Perm              id;
    for (std::size_t i = 0; i < kPermDegree; ++i) {
      id[i] = static_cast<std::uint8_t>(i);
    }
    Perm q = id;
    do {
      all.push_back(q);
    } while (std::next_permutation(q.begin(), q.end()));

    auto inverse = [](Perm const& s) {
      Perm out;
      for (std::size_t i = 0; i < kPermDegree; ++i) {
        out[s[i]] = static_cast<std::uint8_t>(i);
      }
      return out;
    };
    auto kills_relators = [&](Hom const& hom) {
      for (auto const& r : p_.relators()) {
        Perm point = id;
        for (auto x : r.letters()) {
          auto const& image = hom[x.generator][x.sign > 0 ? 0 : 1];
          for (auto& v : point) {
            v = image[v];
          }
        }
        if (point != id) {
          return false;
        }
      }
      return true;
    };

    // Fixed seed: keys must be reproducible across runs.
    std::mt19937_64 rng(0x6879706e6f726dULL);
    for (std::size_t attempt = 0; attempt < kAttempts && homs_.size() < kWanted;
         ++attempt) {
      Hom hom(n_gens);
      for (std::size_t g = 0; g < n_gens; ++g) {
        auto const& s = all[rng() % all.size()];
        hom[g]        = {s, inverse(s)};
      }
      std::size_t offset = rng() % all.size();
      for (std::size_t j = 0; j < all.size(); ++j) {
        auto const& s = all[(offset + j) % all.size()];
        hom[solve]    = {s, inverse(s)};
        if (!kills_relators(hom)) {
          continue;
        }
        bool trivial = std::all_of(hom.begin(), hom.end(),
                                   [&](auto const& im) { return im[0] == id; });
        if (!trivial
            && std::find(homs_.begin(), homs_.end(), hom) == homs_.end()) {
          homs_.push_back(hom);
        }
        break;
      }
    }
  }

}  // namespace hypnorm
