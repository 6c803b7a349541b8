#include <catch2/catch_amalgamated.hpp>

#include "monoidlab/word.hpp"
#include "testutil.hpp"

using namespace monoidlab;

TEST_CASE("content, occ, simple and multiple letters", "[word]") {
  auto w = parse_word("xysxty");
  REQUIRE(content(w)
          == std::set<Letter>{Letter('x'), Letter('y'), Letter('s'), Letter('t')});
  REQUIRE(content(Word()).empty());
  REQUIRE(content(parse_word("xxy"))
          == std::set<Letter>{Letter('x'), Letter('y')});

  REQUIRE(occ(parse_word("xyx"), Letter('x')) == 2);
  REQUIRE(occ(parse_word("xyx"), Letter('t')) == 0);
  REQUIRE(occ(parse_word("x t1 x t2 x"), Letter('x')) == 3);

  REQUIRE(simple_letters(w) == std::set<Letter>{Letter('s'), Letter('t')});
  REQUIRE(multiple_letters(w) == std::set<Letter>{Letter('x'), Letter('y')});
}

TEST_CASE("block decomposition", "[word]") {
  auto d = decompose(parse_word("xysxty"));
  REQUIRE(d.separators == std::vector<Letter>{Letter('s'), Letter('t')});
  REQUIRE(d.blocks
          == std::vector<Word>{parse_word("xy"), parse_word("x"),
                               parse_word("y")});

  auto d2 = decompose(parse_word("xx"));
  REQUIRE(d2.separators.empty());
  REQUIRE(d2.blocks == std::vector<Word>{parse_word("xx")});

  auto d3 = decompose(parse_word("st"));
  REQUIRE(d3.separators == std::vector<Letter>{Letter('s'), Letter('t')});
  REQUIRE(d3.blocks == std::vector<Word>{Word(), Word(), Word()});
}

TEST_CASE("restrict, delete, ini, reverse, substitute, factor", "[word]") {
  REQUIRE(restrict_to(parse_word("xysxty"), {Letter('x'), Letter('y')})
          == parse_word("xyxy"));
  REQUIRE(delete_letters(parse_word("xyx"), {Letter('y')}) == parse_word("xx"));
  auto w = parse_word("xsyxt");
  REQUIRE(restrict_to(w, content(w)) == w);

  REQUIRE(ini(parse_word("xyxzx")) == parse_word("xyz"));
  REQUIRE(ini(parse_word("xyz")) == parse_word("xyz"));
  REQUIRE(ini(parse_word("xxyyx")) == parse_word("xy"));

  REQUIRE(reversed(parse_word("xytxy")) == parse_word("yxtyx"));

  REQUIRE(substitute(parse_word("xyx"),
                     {{Letter('x'), parse_word("xx")}})
          == parse_word("xxyxx"));

  REQUIRE_FALSE(is_factor(parse_word("yx"), parse_word("xy")));
  REQUIRE(is_factor(parse_word("x"), parse_word("xy")));
  REQUIRE(is_factor(Word(), parse_word("xy")));
}

TEST_CASE("word properties on random inputs", "[word][property]") {
  std::mt19937_64 rng(0xfeedbeef);
  for (int round = 0; round < 500; ++round) {
    auto w = mltest::random_word(rng, 14, 5);

    // reassembly
    REQUIRE(join(decompose(w)) == w);

    // complementarity of restrict and delete
    std::set<Letter> X;
    for (auto const& x : content(w)) {
      if (rng() & 1) {
        X.insert(x);
      }
    }
    auto co = content(w);
    std::set<Letter> notX;
    for (auto const& x : co) {
      if (!X.count(x)) {
        notX.insert(x);
      }
    }
    REQUIRE(delete_letters(w, X) == restrict_to(w, notX));

    // sim/mul partition content
    auto sim = simple_letters(w), mul = multiple_letters(w);
    std::set<Letter> uni = sim;
    uni.insert(mul.begin(), mul.end());
    REQUIRE(uni == co);
    for (auto const& x : sim) {
      REQUIRE(occ(w, x) == 1);
      REQUIRE_FALSE(mul.count(x));
    }
    for (auto const& x : mul) {
      REQUIRE(occ(w, x) >= 2);
    }

    // blocks contain only multiple letters; separators are the simple ones
    auto d = decompose(w);
    for (auto const& b : d.blocks) {
      for (auto const& x : b) {
        REQUIRE(mul.count(x));
      }
    }
    REQUIRE(std::set<Letter>(d.separators.begin(), d.separators.end()) == sim);

    // reverse is an involution preserving content and occ
    REQUIRE(reversed(reversed(w)) == w);
    REQUIRE(content(reversed(w)) == co);
    for (auto const& x : co) {
      REQUIRE(occ(reversed(w), x) == occ(w, x));
    }

    // ini is linear with the same content
    REQUIRE((is_linear(ini(w)) || w.empty()));
    REQUIRE(content(ini(w)) == co);

    // substitution is a homomorphism
    auto u = mltest::random_word(rng, 8, 5);
    Substitution m;
    for (auto const& x : mltest::small_alphabet(5)) {
      m[x] = mltest::random_word(rng, 3, 5);
    }
    REQUIRE(substitute(w + u, m) == substitute(w, m) + substitute(u, m));
  }
}

TEST_CASE("word text round-trip", "[word][io]") {
  for (auto const& s : {"@", "x", "xyx", "z1", "x t1 x t2 x", "x x z1 y"}) {
    auto w = parse_word(s);
    REQUIRE(parse_word(to_string(w)) == w);
  }
  REQUIRE(to_string(parse_word("x y x")) == "xyx");
  REQUIRE(to_string(Word()) == "@");
  REQUIRE(parse_word("z1") == Word({Letter("z", 1)}));
  REQUIRE_THROWS_AS(parse_word("1x"), parse_error);
  REQUIRE_THROWS_AS(parse_word("  "), parse_error);

  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    auto w = mltest::random_word(rng, 10, 8);  // includes indexed letters
    REQUIRE(parse_word(to_string(w)) == w);
  }
}

TEST_CASE("letter order drives the word order", "[word]") {
  REQUIRE(Letter("z") < Letter("z", 0));  // absent index sorts first
  REQUIRE(Letter("z", 1) < Letter("z", 2));
  REQUIRE(Letter("t", 9) < Letter("x"));
  REQUIRE(parse_word("xy") < parse_word("xz"));
  REQUIRE(shortlex_less(parse_word("z"), parse_word("xy")));
}
