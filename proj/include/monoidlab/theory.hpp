// Exact, total decision procedures for the equational theories of the
// tractable varieties, theta-class enumeration up to a length bound, and
// the decider-vs-finite-model audit.

#ifndef MONOIDLAB_THEORY_HPP_
#define MONOIDLAB_THEORY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "identity.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace monoidlab {

// Normal forms:
//   SL         con(u) = con(v)
//   A(n)       occ_x(u) = occ_x(v)  (mod n) for every letter
//   AvSL(n)    both of the above
//   C(n)       per letter: occ equal, or both >= n
//   COM(k,l)   per letter: occ equal, or both >= k and congruent mod (l-k)
//   LRB        ini(u) = ini(v)
//   TRIVIAL    every identity holds (the trivial variety)
//   FULL       the equality theory of the free monoid
struct ExactTheory {
  enum class Kind { SL, A, AvSL, C, COM, LRB, TRIVIAL, FULL } kind;
  int  n    = 0;  // A(n), AvSL(n), C(n); COM uses (n, m) as (k, l)
  int  m    = 0;
  bool dualized = false;  // decide on reversed words

  std::string str() const {
    std::string s;
    switch (kind) {
      case Kind::SL: s = "SL"; break;
      case Kind::A: s = "A:" + std::to_string(n); break;
      case Kind::AvSL: s = "A" + std::to_string(n) + "vSL"; break;
      case Kind::C: s = "C:" + std::to_string(n); break;
      case Kind::COM:
        s = "COM:" + std::to_string(n) + "," + std::to_string(m);
        break;
      case Kind::LRB: s = "LRB"; break;
      case Kind::TRIVIAL: s = "T"; break;
      case Kind::FULL: s = "FULL"; break;
    }
    return dualized ? "dual(" + s + ")" : s;
  }
};

inline ExactTheory theory_SL() { return {ExactTheory::Kind::SL}; }
inline ExactTheory theory_A(int n) {
  if (n < 2) {
    throw std::invalid_argument("A(n) needs n >= 2");
  }
  return {ExactTheory::Kind::A, n};
}
inline ExactTheory theory_AvSL(int n) {
  if (n < 2) {
    throw std::invalid_argument("A(n) v SL needs n >= 2");
  }
  return {ExactTheory::Kind::AvSL, n};
}
inline ExactTheory theory_C(int n) {
  if (n < 1) {
    throw std::invalid_argument("C(n) needs n >= 1");
  }
  return {ExactTheory::Kind::C, n};
}
inline ExactTheory theory_COM(int k, int l) {
  if (k < 1 || l <= k) {
    throw std::invalid_argument("COM(k,l) needs 1 <= k < l");
  }
  return {ExactTheory::Kind::COM, k, l};
}
inline ExactTheory theory_LRB() { return {ExactTheory::Kind::LRB}; }
inline ExactTheory theory_TRIVIAL() { return {ExactTheory::Kind::TRIVIAL}; }
inline ExactTheory theory_FULL() { return {ExactTheory::Kind::FULL}; }
inline ExactTheory dual(ExactTheory th) {
  th.dualized = !th.dualized;
  return th;
}

inline bool decide(ExactTheory const& th, Identity const& id) {
  Word const& u = th.dualized ? reversed(id.lhs) : id.lhs;
  Word const& v = th.dualized ? reversed(id.rhs) : id.rhs;
  switch (th.kind) {
    case ExactTheory::Kind::TRIVIAL:
      return true;
    case ExactTheory::Kind::FULL:
      return u == v;
    case ExactTheory::Kind::SL:
      return content(u) == content(v);
    case ExactTheory::Kind::LRB:
      return ini(u) == ini(v);
    default:
      break;
  }
  auto ls = content(u);
  for (auto const& x : content(v)) {
    ls.insert(x);
  }
  for (auto const& x : ls) {
    auto a = occ(u, x), b = occ(v, x);
    switch (th.kind) {
      case ExactTheory::Kind::A:
        if ((a % th.n) != (b % th.n)) {
          return false;
        }
        break;
      case ExactTheory::Kind::AvSL:
        if ((a % th.n) != (b % th.n) || (a == 0) != (b == 0)) {
          return false;
        }
        break;
      case ExactTheory::Kind::C:
        if (a != b && !(a >= static_cast<size_t>(th.n)
                        && b >= static_cast<size_t>(th.n))) {
          return false;
        }
        break;
      case ExactTheory::Kind::COM: {
        size_t k = static_cast<size_t>(th.n);
        int    d = th.m - th.n;
        if (a != b
            && !(a >= k && b >= k
                 && (a % d) == (b % d))) {
          return false;
        }
        break;
      }
      default:
        break;
    }
  }
  return true;
}

// All words v with |v| <= maxLen over con(w) plus the declared extra
// letters, theta-related to w.  Deterministic shortlex order.
inline std::vector<Word> theta_class(ExactTheory const& th, Word const& w,
                                     size_t maxLen,
                                     std::vector<Letter> const& extras = {}) {
  if (maxLen < w.size()) {
    throw std::invalid_argument("theta_class: maxLen < |w|");
  }
  auto cont = content(w);
  for (auto const& x : extras) {
    cont.insert(x);
  }
  std::vector<Letter> alpha(cont.begin(), cont.end());
  std::vector<Word>   out;
  Word                cur;
  std::function<void(size_t)> rec = [&](size_t target) {
    if (cur.size() == target) {
      if (decide(th, Identity(w, cur))) {
        out.push_back(cur);
      }
      return;
    }
    for (auto const& x : alpha) {
      cur += x;
      rec(target);
      cur.ls.pop_back();
    }
  };
  for (size_t len = 0; len <= maxLen; ++len) {
    rec(len);
  }
  return out;
}

// Exhaustive decide-vs-model cross-validation over all identities in two
// letters with both sides of length <= maxIdLen.
struct AuditReport {
  size_t                checked = 0;
  std::vector<Identity> disagreements;
  bool ok() const { return disagreements.empty(); }
};

inline AuditReport audit(ExactTheory const& th, FiniteMonoid const& oracle,
                         size_t maxIdLen) {
  std::vector<Word> words;
  {
    std::vector<Letter> alpha = {Letter('x'), Letter('y')};
    Word                cur;
    std::function<void(size_t)> rec = [&](size_t target) {
      if (cur.size() == target) {
        words.push_back(cur);
        return;
      }
      for (auto const& x : alpha) {
        cur += x;
        rec(target);
        cur.ls.pop_back();
      }
    };
    for (size_t len = 0; len <= maxIdLen; ++len) {
      rec(len);
    }
  }
  AuditReport rep;
  for (auto const& u : words) {
    for (auto const& v : words) {
      Identity id(u, v);
      ++rep.checked;
      if (decide(th, id) != satisfies(oracle, id).holds) {
        rep.disagreements.push_back(id);
      }
    }
  }
  return rep;
}

// CLI theory names: SL, A:3, A3vSL, C:2, COM:2,5, LRB, T, FULL, and
// dual(<name>).
inline ExactTheory parse_theory(std::string const& name) {
  if (name.rfind("dual(", 0) == 0 && name.back() == ')') {
    return dual(parse_theory(name.substr(5, name.size() - 6)));
  }
  if (name == "SL") return theory_SL();
  if (name == "LRB") return theory_LRB();
  if (name == "T") return theory_TRIVIAL();
  if (name == "FULL") return theory_FULL();
  if (name.rfind("A:", 0) == 0) return theory_A(std::stoi(name.substr(2)));
  if (name.rfind("C:", 0) == 0) return theory_C(std::stoi(name.substr(2)));
  if (name.rfind("COM:", 0) == 0) {
    auto body  = name.substr(4);
    auto comma = body.find(',');
    if (comma == std::string::npos) {
      throw parse_error("usage: COM:k,l");
    }
    return theory_COM(std::stoi(body.substr(0, comma)),
                      std::stoi(body.substr(comma + 1)));
  }
  auto v = name.find("vSL");
  if (v != std::string::npos && name[0] == 'A') {
    return theory_AvSL(std::stoi(name.substr(1, v - 1)));
  }
  throw parse_error("unknown theory name: '" + name + "'");
}

}  // namespace monoidlab

#endif  // MONOIDLAB_THEORY_HPP_
