#include <catch2/catch_amalgamated.hpp>

#include "monoidlab/catalog.hpp"
#include "testutil.hpp"

using namespace monoidlab;
using namespace monoidlab::catalog;

TEST_CASE("named identities match their displayed word pairs", "[catalog]") {
  REQUIRE(sigma(1) == Identity(parse_word("xysxty"), parse_word("yxsxty")));
  REQUIRE(sigma(2) == Identity(parse_word("xsytxy"), parse_word("xsytyx")));
  REQUIRE(sigma(3) == Identity(parse_word("xsxyty"), parse_word("xsyxty")));

  REQUIRE(delta(2)
          == Identity(parse_word("x t1 x t2 x"), parse_word("x x t1 t2")));
  REQUIRE(delta(1) == Identity(parse_word("x t1 x"), parse_word("x x t1")));
  REQUIRE_THROWS_AS(delta(0), std::invalid_argument);

  REQUIRE(gamma(1, 1)
          == Identity(parse_word("x t1 x y t2 y"), parse_word("x t1 y x t2 y")));
  REQUIRE_THROWS_AS(gamma(0, 1), std::invalid_argument);

  REQUIRE(alpha(1) == Identity(parse_word("xysxtxhy"), parse_word("yxsxtxhy")));
  REQUIRE(beta(1) == dual(alpha(1)));
  REQUIRE(beta(2).lhs == reversed(alpha(2).lhs));
}

TEST_CASE("word families expand per their product formulas", "[catalog]") {
  auto e0 = Permutation::identity(0);
  auto e1 = Permutation::identity(1);
  auto e2 = Permutation::identity(2);

  // c_{0,0}[e] = xytxy, the primed variant swaps the leading xy
  REQUIRE(c_word(0, 0, e0, false) == parse_word("xytxy"));
  REQUIRE(c_word(0, 0, e0, true) == parse_word("yxtxy"));

  // hand expansion for n = 1
  REQUIRE(w_word(1, e1, e1, false) == parse_word("z1 t1 x z1 z2 x t2 z2"));
  REQUIRE(w_word(1, e1, e1, true) == parse_word("z1 t1 x x z1 z2 t2 z2"));

  // d is the reverse of c
  REQUIRE(d_word(0, 0, 0, e0, false) == reversed(c_word(0, 0, e0, false)));
  REQUIRE(d_word(1, 1, 0, e2, true) == reversed(c_word(1, 1, e2, true)));

  // boundary forms of the k,l family
  auto pi  = Permutation({2, 1});
  auto tau = Permutation({1, 2});
  REQUIRE(w_word_kl(2, 0, 2, pi, tau) == w_word(2, pi, tau, false));
  REQUIRE(w_word_kl(2, 0, 0, pi, tau) == w_word(2, pi, tau, true));

  // c_{n,m,0} = c_{n,m}
  REQUIRE(c_word(1, 1, 0, e2, false) == c_word(1, 1, e2, false));

  // permutation plumbing
  REQUIRE(c_word(0, 0, 1, e1, false) == parse_word("x y t x z1 y t1 z1"));
  REQUIRE(w_word(2, pi, tau, false)
          == parse_word("z1 t1 z2 t2 x z2 z3 z1 z4 x t3 z3 t4 z4"));

  REQUIRE_THROWS_AS(w_word(1, e2, e1, false), std::invalid_argument);
  REQUIRE_THROWS_AS(c_word(1, 0, e2, false), std::invalid_argument);
  REQUIRE_THROWS_AS(w_word_kl(2, 2, 1, e2, e2), std::invalid_argument);
}

TEST_CASE("variety bases list their displayed identities", "[catalog]") {
  auto d2 = variety_basis(BasisName::D, 2);
  REQUIRE(d2.items.size() == 6);
  REQUIRE(d2.items[0] == Identity(parse_word("xx"), parse_word("xxx")));
  REQUIRE(d2.items[1] == Identity(parse_word("xxy"), parse_word("yxx")));
  REQUIRE(d2.items[2] == sigma(1));
  REQUIRE(d2.items[3] == sigma(2));
  REQUIRE(d2.items[4] == sigma(3));
  REQUIRE(d2.items[5] == delta(2));

  auto n = variety_basis(BasisName::N);
  REQUIRE(n.items.size() == 5);
  REQUIRE(n.items[2] == Identity(parse_word("xyxzx"), parse_word("xxyz")));

  auto dinf = variety_basis(BasisName::D, kInfinity);
  REQUIRE(dinf.items.size() == 5);

  auto e = variety_basis(BasisName::E);
  REQUIRE(e.items[1] == Identity(parse_word("xxyy"), parse_word("yyxx")));
  REQUIRE(e.items[2] == delta(1));

  auto c3 = variety_basis(BasisName::C, 3);
  REQUIRE(c3.items[0] == Identity(parse_word("xxx"), parse_word("xxxx")));

  auto pn = variety_basis(BasisName::Pn, 2);
  REQUIRE(pn.items[2] == Identity(parse_word("xxy"), parse_word("xyx")));
}

TEST_CASE("capped families regenerate deterministically", "[catalog]") {
  auto r1 = variety_basis(BasisName::R, 0, 0, 20);
  auto r2 = variety_basis(BasisName::R, 0, 0, 20);
  REQUIRE(r1.items.size() == r2.items.size());
  for (size_t i = 0; i < r1.items.size(); ++i) {
    REQUIRE(r1.items[i] == r2.items[i]);
  }
  REQUIRE(r1.provenance == "R:cap=20");

  // every w_n item with 6n+2 <= 20 is present: n = 1 (1 perm pair),
  // n = 2 (4 pairs), n = 3 (36 pairs)
  size_t family = 0;
  for (auto const& id : r1.items) {
    if (id.name.size() && id.name[0] == 'w') {
      ++family;
      REQUIRE(id.lhs.size() <= 20);
    }
  }
  REQUIRE(family == 1 + 4 + 36);

  auto q = variety_basis(BasisName::Q, 1, 2, 11);
  // alpha_i with i != 1, beta_j with j != 2 are present
  bool a1 = false, a2 = false, b1 = false, b2 = false;
  for (auto const& id : q.items) {
    a1 |= id == alpha(1);
    a2 |= id == alpha(2);
    b1 |= id == beta(1);
    b2 |= id == beta(2);
  }
  REQUIRE_FALSE(a1);
  REQUIRE(a2);
  REQUIRE(b1);
  REQUIRE_FALSE(b2);
}

TEST_CASE("duality laws on families and systems", "[catalog][property]") {
  std::mt19937_64 rng(7);
  auto            perms2 = all_permutations(2);
  for (auto const& rho : perms2) {
    REQUIRE(d_word(1, 1, 0, rho, false) == reversed(c_word(1, 1, rho, false)));
  }
  auto sys = variety_basis(BasisName::N);
  auto dd  = dual(dual(sys));
  for (size_t i = 0; i < sys.items.size(); ++i) {
    REQUIRE(dd.items[i] == sys.items[i]);
  }

  // con(lhs) == con(rhs) for every generated identity of the word bases
  for (auto const& name : {"D:2", "N", "E", "K", "O", "Q:1,2:cap=11",
                           "R:cap=14", "Aprime:cap=11", "P:2", "LRB"}) {
    for (auto const& id : catalog::named_basis(name).items) {
      REQUIRE(content(id.lhs) == content(id.rhs));
    }
  }
}

TEST_CASE("identity name resolution", "[catalog][cli]") {
  REQUIRE(named_identity("sigma1") == sigma(1));
  REQUIRE(named_identity("delta:3") == delta(3));
  REQUIRE(named_identity("gamma:2,1") == gamma(2, 1));
  REQUIRE(named_identity("c:0,0") == c_identity(0, 0, 0, Permutation::identity(0)));
  REQUIRE(named_identity("c:1,1:rho=[2,1]")
          == c_identity(1, 1, 0, Permutation({2, 1})));
  REQUIRE(named_identity("w:1") == w_identity(1, Permutation::identity(1),
                                              Permutation::identity(1)));
  REQUIRE(named_identity("w:2:pi=[2,1]:tau=[1,2]")
          == w_identity(2, Permutation({2, 1}), Permutation({1, 2})));
  REQUIRE(named_identity("xyx = xxy")
          == Identity(parse_word("xyx"), parse_word("xxy")));
  REQUIRE_THROWS_AS(named_identity("sigma9"), parse_error);
  REQUIRE_THROWS_AS(named_basis("XYZZY"), parse_error);
}
