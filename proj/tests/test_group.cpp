#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "hypnorm/errors.hpp"
#include "hypnorm/group.hpp"
#include "hypnorm/presentation_io.hpp"
#include "hypnorm/sampling.hpp"
#include "oracles.hpp"

using namespace hypnorm;

namespace {
  GroupPresentation dehn(std::string_view gens,
                         std::vector<std::string> const& relators) {
    auto              a = make_alphabet(gens);
    std::vector<Word> words;
    for (auto const& r : relators) {
      words.push_back(parse_word(r, a));
    }
    return GroupPresentation(a, std::move(words), Strategy::Dehn);
  }

  GroupPresentation const F2       = *builtin_presentation("F2");
  GroupPresentation const surface2 = *builtin_presentation("surface2");
}  // namespace

TEST_CASE("presentation invariants are enforced") {
  auto a = make_alphabet("ab");
  CHECK_THROWS_AS(GroupPresentation(a, {parse_word("ab", a)}, Strategy::Free),
                  DomainError);
  CHECK_THROWS_AS(GroupPresentation(a, {}, Strategy::Dehn), DomainError);
  CHECK_THROWS_AS(dehn("ab", {"abB"}), DomainError);
  CHECK_THROWS_AS(dehn("ab", {"abA"}), DomainError);  // seam cancels
  CHECK_THROWS_AS(GroupPresentation(a, {}, Strategy::Free, Rational(-1, 2)),
                  DomainError);
  CHECK_THROWS_AS(GroupPresentation(a, {Word(a)}, Strategy::Dehn), DomainError);
}

TEST_CASE("symmetrize") {
  auto const commutator = symmetrize(dehn("ab", {"abAB"}));
  CHECK(commutator.words.size() == 8);
  std::set<std::string> spelled;
  for (auto const& x : commutator.words) {
    spelled.insert(to_string(x));
  }
  CHECK(spelled
        == std::set<std::string>{"abAB", "bABa", "ABab", "BabA", "baBA",
                                 "aBAb", "BAba", "AbaB"});

  auto const square = symmetrize(dehn("a", {"aa"}));
  REQUIRE(square.words.size() == 2);
  CHECK(to_string(square.words[0]) == "aa");
  CHECK(to_string(square.words[1]) == "AA");

  CHECK_THROWS_AS(symmetrize(F2), DomainError);
  CHECK(symmetrize(surface2).words.size() == 16);
}

TEST_CASE("symmetrized set is closed under rotation and inversion") {
  auto const sym = symmetrize(surface2);
  std::set<Word> all(sym.words.begin(), sym.words.end());
  for (auto const& x : sym.words) {
    CHECK(all.count(invert(x)) == 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(all.count(rotation(x, i)) == 1);
    }
    CHECK(x.size() == 8);
  }
}

TEST_CASE("small cancellation C'(1/6)") {
  CHECK(verify_small_cancellation(surface2));
  CHECK(longest_piece(surface2) == oracle::longest_piece({"abABcdCD"}));
  CHECK(longest_piece(surface2) == 1);

  auto const cube = dehn("a", {"aaa"});
  CHECK(longest_piece(cube) == oracle::longest_piece({"aaa"}));
  CHECK(longest_piece(cube) == 2);
  CHECK_FALSE(verify_small_cancellation(cube));

  auto const long13 = dehn("abc", {"BcAAcaBAbcbac"});
  CHECK(longest_piece(long13) == 1);
  CHECK(oracle::longest_piece({"BcAAcaBAbcbac"}) == 1);
  CHECK(verify_small_cancellation(long13));

  // Two relators sharing a long subword.
  auto const shared = dehn("abc", {"abcabC", "abcBBB"});
  CHECK(longest_piece(shared)
        == oracle::longest_piece({"abcabC", "abcBBB"}));
  CHECK_FALSE(verify_small_cancellation(shared));

  CHECK(verify_small_cancellation(F2));
}

TEST_CASE("dehn_reduce") {
  WordProblem const s2(surface2);
  CHECK(s2.dehn_reduce(surface2.word("abABcdCD")).empty());
  CHECK(s2.dehn_reduce(surface2.word("aA")).empty());
  // more than half of a relator is replaced by the inverse of its complement
  CHECK(s2.dehn_reduce(surface2.word("abABc")) == surface2.word("dcD"));
  CHECK(s2.dehn_reduce(surface2.word("abAB")) == surface2.word("abAB"));

  WordProblem const f2(F2);
  CHECK(f2.dehn_reduce(F2.word("abAB")) == F2.word("abAB"));
  CHECK(f2.dehn_reduce(F2.word("aA")).empty());
}

TEST_CASE("is_identity and equal") {
  WordProblem const f2(F2);
  WordProblem const s2(surface2);
  CHECK(f2.is_identity(F2.identity()));
  CHECK_FALSE(f2.is_identity(F2.word("abAB")));
  CHECK(s2.is_identity(surface2.word("aabABcdCDA")));

  CHECK(f2.equal(F2.word("abA"), F2.word("abA")));
  CHECK_FALSE(f2.equal(F2.word("ab"), F2.word("ba")));
  CHECK(f2.equal(F2.word("ba"), F2.word("babB")));

  WordProblem const cube(dehn("a", {"aaa"}));
  CHECK_FALSE(cube.certified());
  try {
    cube.is_identity(cube.presentation().word("aaa"));
    FAIL("expected a certification error");
  } catch (CertificationError const& e) {
    CHECK(std::string(e.what()) == "word problem oracle not certified");
  }
  CHECK_THROWS_AS(cube.equal(cube.presentation().word("a"),
                             cube.presentation().word("A")),
                  CertificationError);
}

TEST_CASE("every relator conjugated by every word of length <= 3 is trivial") {
  WordProblem const s2(surface2);
  auto const        conjugators = oracle::all_words("abcd", 3);
  REQUIRE(conjugators.size() == 585);
  for (auto const& r : surface2.relators()) {
    for (auto const& text : conjugators) {
      Word c = surface2.word(text);
      CHECK(s2.is_identity(concat(concat(c, r), invert(c))));
      CHECK(s2.is_identity(concat(concat(c, invert(r)), invert(c))));
    }
  }
}

TEST_CASE("dehn_reduce properties on random words") {
  WordProblem const s2(surface2);
  WordProblem const f2(F2);
  WordSampler       s(99);
  for (int i = 0; i < 300; ++i) {
    Word x = s.word(surface2.alphabet(), s.between(0, 20));
    Word r = s2.dehn_reduce(x);
    CHECK(lgr(r) <= lgr(x));
    CHECK(s2.dehn_reduce(r) == r);
    CHECK(s2.equal(x, r));

    Word y = s.word(F2.alphabet(), s.between(0, 20));
    CHECK(f2.dehn_reduce(y) == free_reduce(y));
  }
}

TEST_CASE("equal is an equivalence relation on samples") {
  WordProblem const s2(surface2);
  WordSampler       s(5);
  auto const        A = surface2.alphabet();
  auto              noise = [&] {
    Word c = s.word(A, s.between(0, 3));
    return concat(concat(c, surface2.relators()[0]), invert(c));
  };
  std::vector<Word> sample;
  for (int i = 0; i < 12; ++i) {
    Word base = s.word(A, s.between(0, 4));
    sample.push_back(base);
    sample.push_back(concat(base, noise()));
    sample.push_back(concat(noise(), base));
  }
  for (auto const& x : sample) {
    CHECK(s2.equal(x, x));
    for (auto const& y : sample) {
      CHECK(s2.equal(x, y) == s2.equal(y, x));
      for (auto const& z : sample) {
        if (s2.equal(x, y) && s2.equal(y, z)) {
          CHECK(s2.equal(x, z));
        }
      }
    }
  }
}

TEST_CASE("equality keys agree on equal elements") {
  WordProblem const s2(surface2);
  CHECK(s2.homomorphism_count() > 0);
  WordSampler s(17);
  auto const  A = surface2.alphabet();
  for (int i = 0; i < 200; ++i) {
    Word x = s.word(A, s.between(0, 8));
    Word c = s.word(A, s.between(0, 3));
    Word y = concat(concat(x, concat(concat(c, surface2.relators()[0]), invert(c))),
                    s.below(2) ? Word(A) : surface2.word("aA"));
    CHECK(s2.equality_key(x) == s2.equality_key(y));
    CHECK(s2.equality_key(x) == s2.equality_key(s2.dehn_reduce(x)));
  }
  WordProblem const f2(F2);
  CHECK(f2.equality_key(F2.word("abBA")) == f2.equality_key(F2.identity()));
  CHECK(f2.equality_key(F2.word("ab")) != f2.equality_key(F2.word("ba")));
}

TEST_CASE("presentation files") {
  auto const p = parse_presentation(
      "# genus two\n"
      "generators: abcd\n"
      "relators: abABcdCD\n"
      "strategy: dehn\n"
      "delta: 0.25\n");
  CHECK(p.alphabet()->symbols() == "abcd");
  REQUIRE(p.relators().size() == 1);
  CHECK(to_string(p.relators()[0]) == "abABcdCD");
  CHECK(p.strategy() == Strategy::Dehn);
  CHECK(*p.delta() == Rational(1, 4));
  CHECK(format_presentation(parse_presentation(format_presentation(p)))
        == format_presentation(p));

  auto const two = parse_presentation(
      "generators: abc\nrelators: abcabC , abcBBB\nstrategy: dehn\n");
  CHECK(two.relators().size() == 2);

  auto const free = parse_presentation("generators: xy\nstrategy: free\n");
  CHECK(free.relators().empty());
  CHECK_FALSE(free.delta().has_value());

  CHECK_THROWS_AS(parse_presentation("strategy: free\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\nstrategy: magic\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\nstrategy: free\ncolour: red\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\nrelators: ac\nstrategy: dehn\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\nrelators: ab\nstrategy: free\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: ab\nstrategy: free\ndelta: -1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: aa\nstrategy: free\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators ab\n"), ParseError);
}

TEST_CASE("built-in presentations") {
  for (auto name : {"F1", "F2", "F3"}) {
    auto p = builtin_presentation(name);
    REQUIRE(p);
    CHECK(p->strategy() == Strategy::Free);
    CHECK(*p->delta() == Rational(0));
  }
  CHECK(builtin_presentation("F3")->alphabet()->symbols() == "abc");
  CHECK(surface2.alphabet()->symbols() == "abcd");
  CHECK_FALSE(surface2.delta().has_value());
  CHECK_FALSE(builtin_presentation("F4"));
  CHECK_THROWS_AS(load_presentation("/nonexistent/group.txt"), ParseError);
}

TEST_CASE("load_presentation reads files") {
  auto path = std::string("hypnorm_test_presentation.txt");
  {
    std::ofstream out(path);
    out << "generators: ab\nrelators: abAB\nstrategy: dehn\n";
  }
  auto p = load_presentation(path);
  std::remove(path.c_str());
  CHECK(p.strategy() == Strategy::Dehn);
  CHECK_FALSE(WordProblem(p).certified());
}
