#include <catch2/catch_amalgamated.hpp>

#include "monoidlab/catalog.hpp"
#include "monoidlab/theory.hpp"
#include "testutil.hpp"

using namespace monoidlab;

namespace {

Word pw(char const* s) { return parse_word(s); }

}  // namespace

TEST_CASE("decide on the displayed examples", "[theory]") {
  // brute-forced in the 2-element semilattice monoid
  REQUIRE(satisfies(semilattice2(), parse_identity("xy = yxx")).holds);
  REQUIRE(decide(theory_SL(), parse_identity("xy = yxx")));

  REQUIRE(decide(theory_C(3), parse_identity("xyx = xxy")));
  REQUIRE_FALSE(decide(theory_C(3), parse_identity("xyx = xxxy")));

  // brute-forced in Z2
  REQUIRE(satisfies(cyclic_group(2), parse_identity("x = xxx")).holds);
  REQUIRE(decide(theory_A(2), parse_identity("x = xxx")));

  REQUIRE(decide(theory_LRB(), parse_identity("xy = xyx")));
  REQUIRE_FALSE(decide(theory_LRB(), parse_identity("xy = yx")));
  REQUIRE(decide(theory_TRIVIAL(), parse_identity("x = y")));
  REQUIRE(decide(theory_FULL(), parse_identity("xy = xy")));
  REQUIRE_FALSE(decide(theory_FULL(), parse_identity("xy = yx")));

  REQUIRE(decide(theory_AvSL(2), parse_identity("x = xxx")));
  REQUIRE_FALSE(decide(theory_AvSL(2), parse_identity("x = xyy")));
  REQUIRE(decide(theory_A(2), parse_identity("x = xyy")));
}

TEST_CASE("theta classes", "[theory]") {
  auto cls = theta_class(theory_SL(), pw("x"), 3);
  REQUIRE(cls == std::vector<Word>{pw("x"), pw("xx"), pw("xxx")});

  // A2 class of x over {x} only
  auto a2 = theta_class(theory_A(2), pw("x"), 3);
  REQUIRE(a2 == std::vector<Word>{pw("x"), pw("xxx")});

  // with a declared extra letter the class grows
  auto a2y = theta_class(theory_A(2), pw("x"), 3, {Letter('y')});
  for (auto const& w : {pw("x"), pw("xyy"), pw("yxy"), pw("yyx"), pw("xxx")}) {
    REQUIRE(std::count(a2y.begin(), a2y.end(), w) == 1);
  }

  // LRB class of xy within length 3, from the ini-filter oracle
  auto lrb = theta_class(theory_LRB(), pw("xy"), 3);
  std::vector<Word> expect;
  for (auto const& w : theta_class(theory_TRIVIAL(), pw("xy"), 3)) {
    if (ini(w) == pw("xy")) {
      expect.push_back(w);
    }
  }
  REQUIRE(lrb == expect);
  REQUIRE(lrb == std::vector<Word>{pw("xy"), pw("xxy"), pw("xyx"), pw("xyy")});

  // class membership is consistent with decide and always contains w
  for (auto const& th : {theory_SL(), theory_C(2), theory_A(3), theory_LRB()}) {
    auto c = theta_class(th, pw("xy"), 4);
    REQUIRE(std::count(c.begin(), c.end(), pw("xy")) == 1);
    for (auto const& v : c) {
      REQUIRE(decide(th, Identity(pw("xy"), v)));
    }
  }
  REQUIRE_THROWS_AS(theta_class(theory_SL(), pw("xyx"), 2),
                    std::invalid_argument);
}

TEST_CASE("decide gives fully invariant congruences", "[theory][property]") {
  std::mt19937_64 rng(11);
  std::vector<ExactTheory> theories = {
      theory_SL(),     theory_A(2),      theory_A(3), theory_AvSL(2),
      theory_C(2),     theory_C(3),      theory_COM(2, 5),
      theory_LRB(),    dual(theory_LRB())};
  for (auto const& th : theories) {
    for (int round = 0; round < 200; ++round) {
      auto u = mltest::random_word(rng, 8, 3);
      auto v = mltest::random_word(rng, 8, 3);
      auto w = mltest::random_word(rng, 8, 3);
      // reflexive, symmetric, transitive
      REQUIRE(decide(th, Identity(u, u)));
      REQUIRE(decide(th, Identity(u, v)) == decide(th, Identity(v, u)));
      if (decide(th, Identity(u, v)) && decide(th, Identity(v, w))) {
        REQUIRE(decide(th, Identity(u, w)));
      }
      // congruence: u ~ v implies puq ~ pvq
      auto p = mltest::random_word(rng, 3, 3);
      auto q = mltest::random_word(rng, 3, 3);
      if (decide(th, Identity(u, v))) {
        REQUIRE(decide(th, Identity(p + u + q, p + v + q)));
      }
      // fully invariant: stable under substitution
      Substitution m;
      for (auto const& x : mltest::small_alphabet(3)) {
        m[x] = mltest::random_word(rng, 2, 3);
      }
      if (decide(th, Identity(u, v))) {
        REQUIRE(decide(th, Identity(substitute(u, m), substitute(v, m))));
      }
    }
  }
}

TEST_CASE("theory containment sanity", "[theory][property]") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 300; ++round) {
    auto u = mltest::random_word(rng, 7, 3);
    auto v = mltest::random_word(rng, 7, 3);
    if (decide(theory_AvSL(3), Identity(u, v))) {
      REQUIRE(decide(theory_SL(), Identity(u, v)));
      REQUIRE(decide(theory_A(3), Identity(u, v)));
    }
  }
}

TEST_CASE("COM(n,n+1) agrees with C(n) up to length 8", "[theory][property]") {
  std::mt19937_64 rng(13);
  for (int n : {2, 3}) {
    for (int round = 0; round < 400; ++round) {
      auto u = mltest::random_word(rng, 8, 2);
      auto v = mltest::random_word(rng, 8, 2);
      REQUIRE(decide(theory_COM(n, n + 1), Identity(u, v))
              == decide(theory_C(n), Identity(u, v)));
    }
  }
}

TEST_CASE("decider audits against generating monoids", "[theory][oracle]") {
  auto sl = audit(theory_SL(), semilattice2(), 6);
  REQUIRE(sl.ok());
  for (int n = 2; n <= 4; ++n) {
    auto a = audit(theory_A(n), cyclic_group(n), 6);
    INFO("A(" << n << ")");
    REQUIRE(a.ok());
  }
  for (int n = 1; n <= 3; ++n) {
    auto c = audit(theory_C(n), cyclic_aperiodic(n), 6);
    INFO("C(" << n << ")");
    REQUIRE(c.ok());
  }
  // A(n) v SL is generated by Zn x SL2
  auto avsl = audit(theory_AvSL(2), direct_product(cyclic_group(2), semilattice2()), 6);
  REQUIRE(avsl.ok());
}

TEST_CASE("theory name parsing", "[theory][cli]") {
  REQUIRE(parse_theory("SL").kind == ExactTheory::Kind::SL);
  REQUIRE(parse_theory("A:3").n == 3);
  REQUIRE(parse_theory("A3vSL").kind == ExactTheory::Kind::AvSL);
  REQUIRE(parse_theory("C:2").n == 2);
  REQUIRE(parse_theory("COM:2,5").m == 5);
  REQUIRE(parse_theory("dual(LRB)").dualized);
  REQUIRE_THROWS_AS(parse_theory("bogus"), parse_error);
  REQUIRE_THROWS_AS(theory_COM(3, 3), std::invalid_argument);
}
