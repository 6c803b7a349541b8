// Shared helpers for the test suites: deterministic RNG, random word and
// identity generators.

#ifndef MONOIDLAB_TESTS_TESTUTIL_HPP_
#define MONOIDLAB_TESTS_TESTUTIL_HPP_

#include <random>
#include <vector>

#include "monoidlab/identity.hpp"
#include "monoidlab/word.hpp"

namespace mltest {

using monoidlab::Identity;
using monoidlab::Letter;
using monoidlab::Word;

inline std::vector<Letter> small_alphabet(size_t k) {
  static const char* names = "xyzsth";
  std::vector<Letter> a;
  for (size_t i = 0; i < k && i < 6; ++i) {
    a.emplace_back(names[i]);
  }
  for (size_t i = 6; i < k; ++i) {
    a.emplace_back(Letter("z", static_cast<int64_t>(i)));
  }
  return a;
}

inline Word random_word(std::mt19937_64& rng, size_t maxLen, size_t letters) {
  auto   alpha = small_alphabet(letters);
  size_t len   = std::uniform_int_distribution<size_t>(0, maxLen)(rng);
  Word   w;
  for (size_t i = 0; i < len; ++i) {
    w += alpha[std::uniform_int_distribution<size_t>(0, alpha.size() - 1)(rng)];
  }
  return w;
}

inline Word random_nonempty_word(std::mt19937_64& rng, size_t maxLen,
                                 size_t letters) {
  Word w;
  do {
    w = random_word(rng, maxLen, letters);
  } while (w.empty());
  return w;
}

// A random word all of whose blocks are linear, together with a variant
// obtained by permuting letters inside blocks: a linear-balanced identity.
inline Identity random_linear_balanced(std::mt19937_64& rng, size_t maxLen) {
  using monoidlab::decompose;
  auto alpha = small_alphabet(6);
  // simple letters use a disjoint indexed family
  size_t blocks = std::uniform_int_distribution<size_t>(1, 3)(rng);
  Word   u;
  std::vector<std::vector<Letter>> blk(blocks);
  std::vector<Letter> pool;
  for (size_t i = 0; i < 4; ++i) {
    pool.push_back(alpha[i]);
  }
  // place each multiple letter into >= 2 distinct blocks, at most once each
  for (auto const& x : pool) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 || blocks < 2) {
      continue;
    }
    std::vector<size_t> idx(blocks);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    size_t copies = std::uniform_int_distribution<size_t>(2, blocks)(rng);
    for (size_t j = 0; j < copies; ++j) {
      blk[idx[j]].push_back(x);
    }
  }
  for (auto& b : blk) {
    std::shuffle(b.begin(), b.end(), rng);
  }
  for (size_t i = 0; i < blocks; ++i) {
    for (auto const& x : blk[i]) {
      u += x;
    }
    if (i + 1 < blocks) {
      u += Letter("t", static_cast<int64_t>(i + 1));
    }
  }
  if (u.size() > maxLen) {
    u.ls.resize(0);  // fall back to a tiny fixed instance
    u = monoidlab::parse_word("x t1 x");
  }
  // v: permute within blocks
  auto d = decompose(u);
  Word v;
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    auto b = d.blocks[i].ls;
    std::shuffle(b.begin(), b.end(), rng);
    for (auto const& x : b) {
      v += x;
    }
    if (i < d.separators.size()) {
      v += d.separators[i];
    }
  }
  return Identity(u, v);
}

}  // namespace mltest

#endif  // MONOIDLAB_TESTS_TESTUTIL_HPP_
