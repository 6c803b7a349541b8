// Finite models of equational varieties built as bounded quotients of the
// free monoid: words over a small alphabet up to a representative length
// are merged along rule applications inside a larger closure length, and
// everything longer becomes zero.
//
// The construction itself is heuristic; what makes the result usable is
// verified afterwards: the table must pass the monoid audits and satisfy
// the variety's basis (then it is a genuine member of the variety, so a
// failed identity is rigorously outside the variety's theory).

#ifndef MONOIDLAB_QUOTIENT_HPP_
#define MONOIDLAB_QUOTIENT_HPP_

#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "catalog.hpp"
#include "identity.hpp"
#include "monoid.hpp"
#include "parallel.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace monoidlab {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      a = parent[a] = parent[parent[a]];
    }
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Quotient of the words over `alphabet` by the congruence generated by
// `basis` as far as rule applications inside words of length <= closureLen
// reach; classes whose shortest member exceeds repLen collapse to zero.
// Throws if the resulting table fails the monoid audits or the basis.
inline FiniteMonoid bounded_quotient(IdentitySystem const&      basis,
                                     std::vector<Letter> const& alphabet,
                                     size_t repLen, size_t closureLen) {
  if (closureLen < 2 * repLen) {
    throw std::invalid_argument(
        "bounded_quotient: closureLen must cover products of representatives");
  }
  // enumerate all words up to closureLen, shortlex
  std::vector<Word>                         words;
  std::unordered_map<Word, int, WordHash>   index;
  {
    std::function<void(Word&, size_t)> rec = [&](Word& cur, size_t target) {
      if (cur.size() == target) {
        index.emplace(cur, static_cast<int>(words.size()));
        words.push_back(cur);
        return;
      }
      for (auto const& x : alphabet) {
        cur += x;
        rec(cur, target);
        cur.ls.pop_back();
      }
    };
    Word cur;
    for (size_t len = 0; len <= closureLen; ++len) {
      rec(cur, len);
    }
  }

  detail::UnionFind uf(words.size());
  {
    // one-step rule applications, both directions, within the closure
    Word alphaword(alphabet);
    detail::Deriver D(basis.items, Identity(alphaword, alphaword), closureLen);
    std::vector<std::string> packed(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      packed[i] = D.pack(words[i]);
    }
    std::unordered_map<std::string, int> packed_index;
    for (size_t i = 0; i < words.size(); ++i) {
      packed_index.emplace(packed[i], static_cast<int>(i));
    }
    unsigned threads = default_threads();
    std::vector<std::vector<std::pair<int, int>>> edges(threads);
    parallel_ranges(words.size(), threads, [&](unsigned t, size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        D.for_each_successor(
            packed[i], [&](auto const&, std::string const& succ, size_t,
                           size_t, auto const&) {
              auto it = packed_index.find(succ);
              if (it != packed_index.end()) {
                edges[t].emplace_back(static_cast<int>(i), it->second);
              }
            });
      }
    });
    for (auto const& chunk : edges) {
      for (auto const& [a, b] : chunk) {
        uf.unite(a, b);
      }
    }
  }

  // class -> shortest representative (words are in shortlex order)
  std::unordered_map<int, Word> rep;
  for (size_t i = 0; i < words.size(); ++i) {
    rep.emplace(uf.find(static_cast<int>(i)), words[i]);
  }
  std::vector<Word> reps;
  for (size_t i = 0; i < words.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (rep.at(r) == words[i] && words[i].size() <= repLen) {
      reps.push_back(words[i]);
    }
  }
  std::sort(reps.begin(), reps.end(), shortlex_less);

  FiniteMonoid M;
  M.size     = static_cast<int>(reps.size()) + 1;
  M.zero     = M.size - 1;
  M.identity = 0;
  M.table.assign(static_cast<size_t>(M.size) * M.size, M.zero);
  std::unordered_map<Word, int, WordHash> elem;
  for (int e = 0; e + 1 < M.size; ++e) {
    elem.emplace(reps[e], e);
  }
  auto class_elem = [&](Word const& w) -> int {
    auto it = index.find(w);
    if (it == index.end()) {
      return M.zero;
    }
    auto re = rep.at(uf.find(it->second));
    auto el = elem.find(re);
    return el == elem.end() ? M.zero : el->second;
  };
  for (int a = 0; a + 1 < M.size; ++a) {
    for (int b = 0; b + 1 < M.size; ++b) {
      M.table[static_cast<size_t>(a) * M.size + b] = class_elem(reps[a] + reps[b]);
    }
  }
  M.name = "F(" + basis.provenance + ";" + std::to_string(alphabet.size())
           + "," + std::to_string(repLen) + ")";

  if (!audit_monoid(M)) {
    throw std::runtime_error("bounded_quotient: audits failed for " + M.name
                             + "; enlarge closureLen");
  }
  if (auto bad = first_failure(M, basis.items)) {
    throw std::runtime_error("bounded_quotient: " + M.name
                             + " violates its basis item "
                             + to_string(*bad));
  }
  return M;
}

// The two concrete models the permutability cases rely on.

// A finite member of E = var{xx = xxx, xxyy = yyxx, xt1x = xxt1}
// separating x^2 y from y x^2.
inline FiniteMonoid const& model_in_E() {
  static FiniteMonoid const M = bounded_quotient(
      catalog::variety_basis(catalog::BasisName::E),
      {Letter('x'), Letter('y')}, 4, 8);
  return M;
}

// A finite member of N = var{xx = xxx, xxy = yxx, xyxzx = xxyz, sigma2,
// sigma3} separating xytxy from yxtxy (three generators are enough for
// the restrictions the cases use).
inline FiniteMonoid const& model_in_N() {
  static FiniteMonoid const M = bounded_quotient(
      catalog::variety_basis(catalog::BasisName::N),
      {Letter('t'), Letter('x'), Letter('y')}, 5, 10);
  return M;
}

}  // namespace monoidlab

#endif  // MONOIDLAB_QUOTIENT_HPP_
