// Finite monoids as multiplication tables, construction of Rees quotient
// monoids S(W), identity evaluation and satisfaction, isoterm checking,
// direct products and duals.
//
// Satisfaction over an S(W)-style monoid prunes the assignment space: a
// side whose evaluated length exceeds the longest defining word, or whose
// partially assembled factors leave the factor set, is zero on every
// completion, and subtrees where both sides are zero cannot contain a
// violation.  The pruned search is checked against the naive exhaustive
// one on all monoids of size <= 8 in the test suite.

#ifndef MONOIDLAB_MONOID_HPP_
#define MONOIDLAB_MONOID_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "identity.hpp"
#include "word.hpp"

namespace monoidlab {

using Assignment = std::map<Letter, int>;  // letter -> element index

struct FiniteMonoid {
  int              size     = 0;
  int              identity = 0;
  int              zero     = -1;  // -1: no zero element
  std::vector<int> table;          // row-major, size x size
  bool             labeled = false;
  std::vector<Word> labels;  // factor labels when labeled (zero entry unused)
  std::string       name;

  int at(int a, int b) const { return table[static_cast<size_t>(a) * size + b]; }

  bool has_zero() const { return zero >= 0; }
};

// ---------------------------------------------------------------------
// Construction.

// Rees quotient by the ideal of non-factors: elements are the distinct
// factors of words in W (including the empty word) plus a zero; the
// product of two factors is their concatenation when that is again a
// factor, and zero otherwise.
inline FiniteMonoid build_sw(std::vector<Word> const& W) {
  if (W.empty()) {
    throw std::invalid_argument("build_sw: W must be nonempty");
  }
  std::vector<Word> factors;
  {
    std::set<Word> fs;
    fs.insert(Word());
    for (auto const& w : W) {
      if (w.empty()) {
        throw std::invalid_argument("build_sw: words in W must be nonempty");
      }
      for (size_t i = 0; i < w.size(); ++i) {
        Word f;
        for (size_t j = i; j < w.size(); ++j) {
          f += w[j];
          fs.insert(f);
        }
      }
    }
    factors.assign(fs.begin(), fs.end());
    std::sort(factors.begin(), factors.end(), shortlex_less);
  }
  FiniteMonoid M;
  M.size    = static_cast<int>(factors.size()) + 1;
  M.zero    = M.size - 1;
  M.labeled = true;
  M.labels  = factors;
  M.labels.emplace_back();  // placeholder for zero
  M.identity = 0;           // the empty word is shortlex-first
  std::map<Word, int> index;
  for (int i = 0; i + 1 < M.size; ++i) {
    index[factors[i]] = i;
  }
  M.table.assign(static_cast<size_t>(M.size) * M.size, M.zero);
  for (int a = 0; a + 1 < M.size; ++a) {
    for (int b = 0; b + 1 < M.size; ++b) {
      Word p  = factors[a] + factors[b];
      auto it = index.find(p);
      M.table[static_cast<size_t>(a) * M.size + b] =
          it == index.end() ? M.zero : it->second;
    }
  }
  M.name = "S(";
  for (size_t i = 0; i < W.size(); ++i) {
    if (i) {
      M.name += ",";
    }
    M.name += to_string(W[i]);
  }
  M.name += ")";
  return M;
}

inline FiniteMonoid semilattice2() {
  FiniteMonoid M;
  M.size     = 2;
  M.identity = 0;
  M.zero     = 1;
  M.table    = {0, 1, 1, 1};
  M.name     = "SL2";
  return M;
}

inline FiniteMonoid cyclic_group(int n) {
  if (n < 1) {
    throw std::invalid_argument("cyclic_group: n >= 1");
  }
  FiniteMonoid M;
  M.size     = n;
  M.identity = 0;
  M.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      M.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  }
  M.name = "Z" + std::to_string(n);
  return M;
}

// {1, a, a^2, ..., a^n} with a^n a = a^n: the (n+1)-element cyclic
// aperiodic monoid generating C_n.
inline FiniteMonoid cyclic_aperiodic(int n) {
  if (n < 1) {
    throw std::invalid_argument("cyclic_aperiodic: n >= 1");
  }
  FiniteMonoid M;
  M.size     = n + 1;
  M.identity = 0;
  M.zero     = n;
  M.table.resize(static_cast<size_t>(M.size) * M.size);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      M.table[static_cast<size_t>(a) * M.size + b] = std::min(a + b, n);
    }
  }
  M.name = "C" + std::to_string(n) + "mon";
  return M;
}

inline FiniteMonoid direct_product(FiniteMonoid const& A, FiniteMonoid const& B) {
  FiniteMonoid M;
  M.size     = A.size * B.size;
  M.identity = A.identity * B.size + B.identity;
  M.zero = (A.has_zero() && B.has_zero()) ? A.zero * B.size + B.zero : -1;
  M.table.resize(static_cast<size_t>(M.size) * M.size);
  for (int a1 = 0; a1 < A.size; ++a1) {
    for (int a2 = 0; a2 < B.size; ++a2) {
      for (int b1 = 0; b1 < A.size; ++b1) {
        for (int b2 = 0; b2 < B.size; ++b2) {
          int a = a1 * B.size + a2, b = b1 * B.size + b2;
          M.table[static_cast<size_t>(a) * M.size + b] =
              A.at(a1, b1) * B.size + B.at(a2, b2);
        }
      }
    }
  }
  M.name = A.name + "x" + B.name;
  return M;
}

// Transposed multiplication; labels of an S(W) dual are reversed, giving
// the Rees monoid of the reversed words.
inline FiniteMonoid dual_monoid(FiniteMonoid const& M) {
  FiniteMonoid D = M;
  for (int a = 0; a < M.size; ++a) {
    for (int b = 0; b < M.size; ++b) {
      D.table[static_cast<size_t>(a) * M.size + b] = M.at(b, a);
    }
  }
  if (M.labeled) {
    for (auto& w : D.labels) {
      w = reversed(w);
    }
  }
  D.name = "dual(" + M.name + ")";
  return D;
}

// ---------------------------------------------------------------------
// Audits.

inline bool check_associativity(FiniteMonoid const& M) {
  for (int a = 0; a < M.size; ++a) {
    for (int b = 0; b < M.size; ++b) {
      int ab = M.at(a, b);
      for (int c = 0; c < M.size; ++c) {
        if (M.at(ab, c) != M.at(a, M.at(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool check_identity_element(FiniteMonoid const& M) {
  for (int a = 0; a < M.size; ++a) {
    if (M.at(M.identity, a) != a || M.at(a, M.identity) != a) {
      return false;
    }
  }
  return true;
}

inline bool check_zero_element(FiniteMonoid const& M) {
  if (!M.has_zero()) {
    return true;
  }
  for (int a = 0; a < M.size; ++a) {
    if (M.at(M.zero, a) != M.zero || M.at(a, M.zero) != M.zero) {
      return false;
    }
  }
  return true;
}

inline bool audit_monoid(FiniteMonoid const& M) {
  return check_associativity(M) && check_identity_element(M)
         && check_zero_element(M);
}

// ---------------------------------------------------------------------
// Evaluation and satisfaction.

inline int evaluate(FiniteMonoid const& M, Word const& w, Assignment const& a) {
  int v = M.identity;
  for (auto const& x : w) {
    auto it = a.find(x);
    if (it == a.end()) {
      throw std::invalid_argument("evaluate: letter '" + x.str()
                                  + "' not covered by the assignment");
    }
    v = M.at(v, it->second);
  }
  return v;
}

struct SatResult {
  bool       holds = true;
  Assignment witness;  // a violating assignment when !holds
};

namespace detail {

// Search state shared by the pruned S(W) satisfaction passes.
struct ReesSat {
  FiniteMonoid const&                  M;
  std::vector<Letter>                  letters;    // sorted (canonical order)
  std::vector<std::vector<int>>        side;       // [2] letter ids per position
  std::vector<std::string>             lab8;       // per element packed label
  std::unordered_map<std::string, int> factor_of;  // packed label -> element
  size_t                               maxlen = 0;

  explicit ReesSat(FiniteMonoid const& m, Identity const& id) : M(m) {
    auto ls = letters_of(id);
    letters.assign(ls.begin(), ls.end());
    std::map<Letter, int> lid;
    for (size_t i = 0; i < letters.size(); ++i) {
      lid[letters[i]] = static_cast<int>(i);
    }
    side.resize(2);
    for (auto const& x : id.lhs) {
      side[0].push_back(lid[x]);
    }
    for (auto const& x : id.rhs) {
      side[1].push_back(lid[x]);
    }
    std::map<Letter, char> wa;  // W-alphabet packing
    for (int e = 0; e < M.size; ++e) {
      if (e == M.zero) {
        continue;
      }
      for (auto const& x : M.labels[e]) {
        wa.emplace(x, static_cast<char>(wa.size() + 1));
      }
    }
    lab8.resize(M.size);
    for (int e = 0; e < M.size; ++e) {
      if (e == M.zero) {
        continue;
      }
      for (auto const& x : M.labels[e]) {
        lab8[e] += wa[x];
      }
      factor_of[lab8[e]] = e;
      maxlen             = std::max(maxlen, lab8[e].size());
    }
  }

  // Is side s forced to zero under the partial assignment (-1: unassigned)?
  bool dead(std::vector<int> const& asg, int s) const {
    size_t total = 0;
    std::string run;
    bool        in_run = false;
    for (int lid : side[s]) {
      int e = asg[lid];
      if (e == -1) {
        if (in_run && !factor_of.count(run)) {
          return true;
        }
        run.clear();
        in_run = false;
        continue;
      }
      if (e == M.zero) {
        return true;
      }
      run += lab8[e];
      in_run = true;
      if (run.size() > maxlen) {
        return true;
      }
    }
    if (in_run && !factor_of.count(run)) {
      return true;
    }
    // budget over the whole side
    for (size_t i = 0; i < letters.size(); ++i) {
      if (asg[i] >= 0 && asg[i] != M.zero) {
        size_t c = 0;
        for (int lid : side[s]) {
          if (lid == static_cast<int>(i)) {
            ++c;
          }
        }
        total += c * lab8[asg[i]].size();
        if (total > maxlen) {
          return true;
        }
      }
    }
    return false;
  }

  int value(std::vector<int> const& asg, int s) const {
    std::string img;
    for (int lid : side[s]) {
      int e = asg[lid];
      if (e == M.zero) {
        return M.zero;
      }
      img += lab8[e];
      if (img.size() > maxlen) {
        return M.zero;
      }
    }
    auto it = factor_of.find(img);
    return it == factor_of.end() ? M.zero : it->second;
  }

  // Depth-first search for any violating completion of `asg`, filling the
  // unassigned letters in `order`.  Subtrees where both sides are forced
  // to zero are skipped; that is the only pruning, so the search is
  // equivalent to the exhaustive one.
  bool violation_exists(std::vector<int>& asg,
                        std::vector<int> const& order, size_t oi) const {
    bool d0 = dead(asg, 0), d1 = dead(asg, 1);
    if (d0 && d1) {
      return false;
    }
    if (oi == order.size()) {
      return value(asg, 0) != value(asg, 1);
    }
    int lid = order[oi];
    for (int e = 0; e < M.size; ++e) {
      asg[lid] = e;
      if (violation_exists(asg, order, oi + 1)) {
        return true;
      }
    }
    asg[lid] = -1;
    return false;
  }

  std::vector<int> unassigned_in_occurrence_order(std::vector<int> const& asg) const {
    std::vector<int>  order;
    std::vector<bool> seen(letters.size(), false);
    for (int s = 0; s < 2; ++s) {
      for (int lid : side[s]) {
        if (asg[lid] == -1 && !seen[lid]) {
          seen[lid] = true;
          order.push_back(lid);
        }
      }
    }
    return order;
  }
};

inline SatResult satisfies_rees(FiniteMonoid const& M, Identity const& id) {
  ReesSat          rs(M, id);
  size_t           k = rs.letters.size();
  std::vector<int> asg(k, -1);
  auto             order = rs.unassigned_in_occurrence_order(asg);
  if (!rs.violation_exists(asg, order, 0)) {
    return SatResult{};
  }
  // A violation exists; find the first one in the canonical order
  // (letters sorted, elements by index) by feasibility-guided descent.
  std::fill(asg.begin(), asg.end(), -1);
  for (size_t i = 0; i < k; ++i) {
    bool placed = false;
    for (int e = 0; e < M.size && !placed; ++e) {
      asg[i]     = e;
      auto probe = asg;
      auto ord   = rs.unassigned_in_occurrence_order(probe);
      if (rs.violation_exists(probe, ord, 0)) {
        placed = true;
      }
    }
    if (!placed) {
      throw std::logic_error("satisfies: lost a violating assignment");
    }
  }
  SatResult r;
  r.holds = false;
  for (size_t i = 0; i < k; ++i) {
    r.witness[rs.letters[i]] = asg[i];
  }
  return r;
}

inline SatResult satisfies_naive(FiniteMonoid const& M, Identity const& id) {
  auto                ls = letters_of(id);
  std::vector<Letter> letters(ls.begin(), ls.end());
  size_t              k = letters.size();
  std::map<Letter, int> lid;
  for (size_t i = 0; i < k; ++i) {
    lid[letters[i]] = static_cast<int>(i);
  }
  std::vector<int> l0, l1;
  for (auto const& x : id.lhs) {
    l0.push_back(lid[x]);
  }
  for (auto const& x : id.rhs) {
    l1.push_back(lid[x]);
  }
  std::vector<int> asg(k, 0);
  while (true) {
    int v0 = M.identity, v1 = M.identity;
    for (int i : l0) {
      v0 = M.at(v0, asg[i]);
    }
    for (int i : l1) {
      v1 = M.at(v1, asg[i]);
    }
    if (v0 != v1) {
      SatResult r;
      r.holds = false;
      for (size_t i = 0; i < k; ++i) {
        r.witness[letters[i]] = asg[i];
      }
      return r;
    }
    size_t i = k;
    while (i > 0 && asg[i - 1] == M.size - 1) {
      asg[--i] = 0;
    }
    if (i == 0) {
      return SatResult{};
    }
    ++asg[i - 1];
  }
}

}  // namespace detail

// Does the identity hold under every assignment of elements to letters?
// On failure the witness is the first violating assignment in the order
// (letters sorted by the letter order, elements by index).
inline SatResult satisfies(FiniteMonoid const& M, Identity const& id) {
  if (id.trivial()) {
    return SatResult{};
  }
  if (M.labeled) {
    return detail::satisfies_rees(M, id);
  }
  return detail::satisfies_naive(M, id);
}

// First identity of the system failing in M, if any.
inline std::optional<Identity> first_failure(FiniteMonoid const&   M,
                                             std::vector<Identity> const& sys) {
  for (auto const& id : sys) {
    if (!satisfies(M, id).holds) {
      return id;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Isoterm checking (a semi-decision).

struct IsotermResult {
  enum class Kind { IsIsoterm, CounterIdentity, UnknownWithinBound } kind;
  Word counter;  // set when kind == CounterIdentity
};

// Searches candidates w' != w with con(w') = con(w), |w'| <= |w| + slack
// and occ_x(w') <= max(occ_x(w), 2) + slack.  IsIsoterm is only claimed
// when the candidate space provably exhausts all identities M could
// satisfy, which we tie to the x^2 = x^3 aperiodicity test; otherwise a
// clean sweep reports UnknownWithinBound.
inline IsotermResult isoterm_check(FiniteMonoid const& M, Word const& w,
                                   size_t slack) {
  auto                 cont = content(w);
  std::vector<Letter>  alpha(cont.begin(), cont.end());
  std::vector<size_t>  cap;
  for (auto const& x : alpha) {
    cap.push_back(std::max<size_t>(occ(w, x), 2) + slack);
  }
  size_t              maxlen = w.size() + slack;
  std::vector<size_t> used(alpha.size(), 0);
  Word                cur;
  std::optional<Word> found;

  // shortlex enumeration of candidate words
  std::function<bool(size_t)> rec = [&](size_t target) -> bool {
    if (cur.size() == target) {
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (used[i] == 0) {
          return false;
        }
      }
      if (cur == w) {
        return false;
      }
      if (satisfies(M, Identity(w, cur)).holds) {
        found = cur;
        return true;
      }
      return false;
    }
    size_t remaining = target - cur.size();
    size_t missing   = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (used[i] == 0) {
        ++missing;
      }
    }
    if (missing > remaining) {
      return false;
    }
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (used[i] == cap[i]) {
        continue;
      }
      ++used[i];
      cur += alpha[i];
      if (rec(target)) {
        return true;
      }
      cur.ls.pop_back();
      --used[i];
    }
    return false;
  };
  for (size_t len = alpha.size(); len <= maxlen && !found; ++len) {
    rec(len);
  }
  if (found) {
    return IsotermResult{IsotermResult::Kind::CounterIdentity, *found};
  }
  bool aperiodic2 =
      satisfies(M, Identity(parse_word("xx"), parse_word("xxx"))).holds;
  return IsotermResult{aperiodic2 ? IsotermResult::Kind::IsIsoterm
                                  : IsotermResult::Kind::UnknownWithinBound,
                       Word()};
}

}  // namespace monoidlab

#endif  // MONOIDLAB_MONOID_HPP_
