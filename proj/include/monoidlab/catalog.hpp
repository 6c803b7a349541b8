// Generators for every named identity, identity family, word family and
// variety basis used by the rest of the library, plus CLI-style name
// resolution.  Same (name, cap) always regenerates the identical list.

#ifndef MONOIDLAB_CATALOG_HPP_
#define MONOIDLAB_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "identity.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace monoidlab {
namespace catalog {

inline Letter zi(int i) { return Letter("z", i); }
inline Letter ti(int i) { return Letter("t", i); }
inline Letter zpi(int i) { return Letter("zz", i); }  // z'_i
inline Letter tpi(int i) { return Letter("tt", i); }  // t'_i

// ---------------------------------------------------------------------
// Named identities.

inline Identity sigma(int i) {
  switch (i) {
    case 1: return Identity(parse_word("xysxty"), parse_word("yxsxty"), "sigma1");
    case 2: return Identity(parse_word("xsytxy"), parse_word("xsytyx"), "sigma2");
    case 3: return Identity(parse_word("xsxyty"), parse_word("xsyxty"), "sigma3");
    default: throw std::invalid_argument("sigma index must be 1..3");
  }
}

inline Identity alpha(int i) {
  switch (i) {
    case 1: return Identity(parse_word("xysxtxhy"), parse_word("yxsxtxhy"), "alpha1");
    case 2: return Identity(parse_word("xysxtyhx"), parse_word("yxsxtyhx"), "alpha2");
    case 3: return Identity(parse_word("xysytxhx"), parse_word("yxsytxhx"), "alpha3");
    default: throw std::invalid_argument("alpha index must be 1..3");
  }
}

inline Identity beta(int i) {
  auto b = dual(alpha(i));
  b.name = "beta" + std::to_string(i);
  return b;
}

// delta_k:  x t1 x t2 x ... tk x  =  x^2 t1 t2 ... tk   (k >= 1)
inline Identity delta(int k) {
  if (k < 1) {
    throw std::invalid_argument("delta_k needs k >= 1");
  }
  Word l, r;
  l += Letter('x');
  r += Letter('x');
  r += Letter('x');
  for (int i = 1; i <= k; ++i) {
    l += ti(i);
    l += Letter('x');
    r += ti(i);
  }
  return Identity(l, r, "delta" + std::to_string(k));
}

// gamma_{k,l}:  (prod_{i<=k} x t_i) xy (prod_{k<i<=k+l} t_i y)
//             = (prod_{i<=k} x t_i) yx (prod_{k<i<=k+l} t_i y)
inline Identity gamma(int k, int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("gamma_{k,l} needs k,l >= 1");
  }
  Word pre, post;
  for (int i = 1; i <= k; ++i) {
    pre += Letter('x');
    pre += ti(i);
  }
  for (int i = k + 1; i <= k + l; ++i) {
    post += ti(i);
    post += Letter('y');
  }
  Word mid_l = parse_word("xy");
  Word mid_r = parse_word("yx");
  return Identity(pre + mid_l + post, pre + mid_r + post,
                  "gamma" + std::to_string(k) + "," + std::to_string(l));
}

// ---------------------------------------------------------------------
// Word families.  Letters z1.., t1.., x, y, t as printed.

// c_{n,m,k}[rho], rho in S_{n+m+k}:
//   (prod_{i=1..n} z_i t_i) xyt (prod_{i=n+1..n+m} z_i t_i) x
//   (prod_{i=1..n+m+k} z_{i rho}) y (prod_{i=n+m+1..n+m+k} t_i z_i)
// and the primed variant starts yxt instead of xyt.
inline Word c_word(int n, int m, int k, Permutation const& rho, bool primed) {
  if (n < 0 || m < 0 || k < 0) {
    throw std::invalid_argument("c_{n,m,k} needs n,m,k >= 0");
  }
  if (rho.degree() != n + m + k) {
    throw std::invalid_argument("c_{n,m,k}[rho]: rho must lie in S_{n+m+k}");
  }
  Word w;
  for (int i = 1; i <= n; ++i) {
    w += zi(i);
    w += ti(i);
  }
  if (primed) {
    w += Letter('y');
    w += Letter('x');
  } else {
    w += Letter('x');
    w += Letter('y');
  }
  w += Letter('t');
  for (int i = n + 1; i <= n + m; ++i) {
    w += zi(i);
    w += ti(i);
  }
  w += Letter('x');
  for (int i = 1; i <= n + m + k; ++i) {
    w += zi(rho(i));
  }
  w += Letter('y');
  for (int i = n + m + 1; i <= n + m + k; ++i) {
    w += ti(i);
    w += zi(i);
  }
  return w;
}

inline Word c_word(int n, int m, Permutation const& rho, bool primed) {
  return c_word(n, m, 0, rho, primed);
}

inline Word d_word(int n, int m, int k, Permutation const& rho, bool primed) {
  return reversed(c_word(n, m, k, rho, primed));
}

// w_n^{k,l}[pi,tau] with w_n = w_n^{0,n} and w'_n = w_n^{0,0}:
//   (prod_{i=1..n} z_i t_i) (prod_{i=1..k} z_{i pi} z_{n+i tau}) x
//   (prod_{i=k+1..l} z_{i pi} z_{n+i tau}) x
//   (prod_{i=l+1..n} z_{i pi} z_{n+i tau}) (prod_{i=n+1..2n} t_i z_i)
inline Word w_word_kl(int n, int k, int l, Permutation const& pi,
                      Permutation const& tau) {
  if (n < 1 || k < 0 || k > l || l > n) {
    throw std::invalid_argument("w_n^{k,l} needs 0 <= k <= l <= n, n >= 1");
  }
  if (pi.degree() != n || tau.degree() != n) {
    throw std::invalid_argument("w_n[pi,tau]: pi, tau must lie in S_n");
  }
  Word w;
  for (int i = 1; i <= n; ++i) {
    w += zi(i);
    w += ti(i);
  }
  auto zpair = [&](int i) {
    w += zi(pi(i));
    w += zi(n + tau(i));
  };
  for (int i = 1; i <= k; ++i) {
    zpair(i);
  }
  w += Letter('x');
  for (int i = k + 1; i <= l; ++i) {
    zpair(i);
  }
  w += Letter('x');
  for (int i = l + 1; i <= n; ++i) {
    zpair(i);
  }
  for (int i = n + 1; i <= 2 * n; ++i) {
    w += ti(i);
    w += zi(i);
  }
  return w;
}

inline Word w_word(int n, Permutation const& pi, Permutation const& tau,
                   bool primed) {
  return primed ? w_word_kl(n, 0, 0, pi, tau) : w_word_kl(n, 0, n, pi, tau);
}

inline Identity c_identity(int n, int m, int k, Permutation const& rho) {
  return Identity(c_word(n, m, k, rho, false), c_word(n, m, k, rho, true),
                  "c" + std::to_string(n) + "," + std::to_string(m)
                      + (k ? "," + std::to_string(k) : "") + to_string(rho));
}

inline Identity d_identity(int n, int m, int k, Permutation const& rho) {
  auto id = dual(c_identity(n, m, k, rho));
  id.name = "d" + id.name.substr(1, id.name.size() - 3);
  return id;
}

inline Identity w_identity(int n, Permutation const& pi, Permutation const& tau) {
  return Identity(w_word(n, pi, tau, false), w_word(n, pi, tau, true),
                  "w" + std::to_string(n) + to_string(pi) + to_string(tau));
}

// ---------------------------------------------------------------------
// Variety bases.  Infinite families are truncated: an instance is emitted
// iff its generated (unprimed) word has at most `cap` letters, in a fixed
// enumeration order, so provenance (name, cap) regenerates the same list.

inline Identity ident(std::string const& text, std::string const& name = "") {
  auto id = parse_identity(text);
  id.name = name.empty() ? text : name;
  return id;
}

inline std::vector<Identity> w_family_upto(size_t cap) {
  std::vector<Identity> out;
  for (int n = 1; 6 * static_cast<size_t>(n) + 2 <= cap; ++n) {
    for (auto const& pi : all_permutations(n)) {
      for (auto const& tau : all_permutations(n)) {
        out.push_back(w_identity(n, pi, tau));
      }
    }
  }
  return out;
}

inline std::vector<Identity> c_family_upto(size_t cap, bool duals,
                                           bool with_k) {
  // |c_{n,m,k}| = 3(n+m+k) + 5 - k + ... computed directly below.
  std::vector<Identity> out;
  for (int s = 0;; ++s) {  // s = n + m (+ k)
    bool any = false;
    for (int n = 0; n <= s; ++n) {
      for (int m = 0; n + m <= s; ++m) {
        int k = s - n - m;
        if (!with_k && k != 0) {
          continue;
        }
        auto probe = c_word(n, m, k, Permutation::identity(s), false);
        if (probe.size() > cap) {
          continue;
        }
        any = true;
        for (auto const& rho : all_permutations(s)) {
          out.push_back(duals ? d_identity(n, m, k, rho)
                              : c_identity(n, m, k, rho));
        }
      }
    }
    if (!any && 3 * static_cast<size_t>(s) + 4 > cap) {
      break;
    }
  }
  return out;
}

enum class BasisName {
  SL, C, A, D, E, O, K, N, P, Pn, Q, R, Astar, Aprime, LRB,
};

constexpr int kInfinity = -1;  // D_k with k = infinity

// The finite basis (possibly truncated at `cap`) for a named variety.
inline IdentitySystem variety_basis(BasisName name, int p1 = 0, int p2 = 0,
                                    size_t cap = 0) {
  std::vector<Identity> xs;
  std::string           prov;
  auto                  xx_xxx  = ident("xx = xxx");
  auto                  xxy_yxx = ident("xxy = yxx");
  switch (name) {
    case BasisName::SL:
      xs  = {ident("xx = x"), ident("xy = yx")};
      prov = "SL";
      break;
    case BasisName::C: {
      if (p1 < 1) {
        throw std::invalid_argument("C_n needs n >= 1");
      }
      Word l(std::vector<Letter>(p1, Letter('x')));
      Word r = l;
      r += Letter('x');
      xs   = {Identity(l, r, "x^n=x^n+1"), ident("xy = yx")};
      prov = "C:" + std::to_string(p1);
      break;
    }
    case BasisName::A:
      xs   = {xx_xxx, xxy_yxx};
      prov = "A";
      break;
    case BasisName::D: {
      xs = {xx_xxx, xxy_yxx, sigma(1), sigma(2), sigma(3)};
      if (p1 != kInfinity) {
        if (p1 < 1) {
          throw std::invalid_argument("D_k needs k >= 1 or infinity");
        }
        xs.push_back(delta(p1));
      }
      prov = "D:" + (p1 == kInfinity ? "inf" : std::to_string(p1));
      break;
    }
    case BasisName::E:
      xs   = {xx_xxx, ident("xxyy = yyxx"), delta(1)};
      prov = "E";
      break;
    case BasisName::O:
      xs   = {sigma(2), sigma(3)};
      prov = "O";
      break;
    case BasisName::K:
      xs   = {ident("xxy = xxyx"), ident("xyx = xyxx"), ident("xxyy = yyxx")};
      prov = "K";
      break;
    case BasisName::N:
      xs   = {xx_xxx, xxy_yxx, ident("xyxzx = xxyz"), sigma(2), sigma(3)};
      prov = "N";
      break;
    case BasisName::P:
      xs   = {delta(1)};
      prov = "P";
      break;
    case BasisName::Pn: {
      if (p1 < 1) {
        throw std::invalid_argument("P_n needs n >= 1");
      }
      Word xn(std::vector<Letter>(p1, Letter('x')));
      Word xn1 = xn;
      xn1 += Letter('x');
      Word y   = parse_word("y");
      xs       = {Identity(xn, xn1, "x^n=x^n+1"),
                  Identity(xn + y, y + xn, "x^ny=yx^n"), ident("xxy = xyx")};
      prov     = "P:" + std::to_string(p1);
      break;
    }
    case BasisName::Q: {
      if (p1 < 1 || p1 > 3 || p2 < 1 || p2 > 3) {
        throw std::invalid_argument("Q_{r,s} needs 1 <= r,s <= 3");
      }
      if (cap < 5) {
        throw std::invalid_argument("Q_{r,s} basis needs cap >= 5");
      }
      xs = {xx_xxx, xxy_yxx, sigma(3)};
      for (int i = 1; i <= 3; ++i) {
        if (i != p1) {
          xs.push_back(alpha(i));
        }
      }
      for (int j = 1; j <= 3; ++j) {
        if (j != p2) {
          xs.push_back(beta(j));
        }
      }
      for (auto const& id : c_family_upto(cap, false, false)) {
        xs.push_back(id);
      }
      for (auto const& id : c_family_upto(cap, true, false)) {
        xs.push_back(id);
      }
      prov = "Q:" + std::to_string(p1) + "," + std::to_string(p2)
             + ":cap=" + std::to_string(cap);
      break;
    }
    case BasisName::R: {
      if (cap < 8) {
        throw std::invalid_argument("R basis needs cap >= 8");
      }
      xs = {xx_xxx, xxy_yxx, sigma(1), sigma(2)};
      for (auto const& id : w_family_upto(cap)) {
        xs.push_back(id);
      }
      prov = "R:cap=" + std::to_string(cap);
      break;
    }
    case BasisName::Astar: {
      if (cap < 8) {
        throw std::invalid_argument("A* basis needs cap >= 8");
      }
      xs = {xx_xxx, xxy_yxx};
      for (auto const& id : w_family_upto(cap)) {
        xs.push_back(id);
      }
      prov = "A*:cap=" + std::to_string(cap);
      break;
    }
    case BasisName::Aprime: {
      if (cap < 8) {
        throw std::invalid_argument("A' basis needs cap >= 8");
      }
      xs = {xx_xxx, xxy_yxx};
      for (auto const& id : w_family_upto(cap)) {
        xs.push_back(id);
      }
      for (auto const& id : c_family_upto(cap, false, true)) {
        xs.push_back(id);
      }
      for (auto const& id : c_family_upto(cap, true, true)) {
        xs.push_back(id);
      }
      prov = "A':cap=" + std::to_string(cap);
      break;
    }
    case BasisName::LRB:
      xs   = {ident("xy = xyx")};
      prov = "LRB";
      break;
  }
  return IdentitySystem(std::move(xs), prov);
}

// Generator words for the varieties defined as var S(W).
inline std::vector<Word> generator_words(std::string const& name, int k = 0) {
  if (name == "D") {
    if (k == 1) {
      return {parse_word("xy")};
    }
    if (k >= 2) {
      Word w;
      w += Letter('x');
      for (int i = 1; i <= k - 1; ++i) {
        w += ti(i);
        w += Letter('x');
      }
      return {w};
    }
    throw std::invalid_argument("generator for D_k needs k >= 1");
  }
  if (name == "L") {
    return {parse_word("xtxysy")};
  }
  if (name == "M") {
    return {parse_word("xytxsy")};
  }
  if (name == "Z1") {
    return {parse_word("xysxtxhy")};
  }
  if (name == "Z2") {
    return {parse_word("xysxtyhx")};
  }
  if (name == "Z3") {
    return {parse_word("xysytxhx")};
  }
  throw std::invalid_argument("unknown generator-monoid variety: " + name);
}

// ---------------------------------------------------------------------
// CLI name resolution for identities:
//   sigma1..3, alpha1..3, beta1..3, delta:K, gamma:K,L,
//   c:N,M[,K]:rho=[..], d:N,M[,K]:rho=[..], w:N:pi=[..]:tau=[..],
//   or a literal "LHS = RHS".

inline std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  size_t                   pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return out;
}

inline Identity named_identity(std::string const& name) {
  auto parts = split(name, ':');
  auto head  = parts[0];
  static const std::set<std::string> heads = {
      "sigma1", "sigma2", "sigma3", "alpha1", "alpha2", "alpha3",
      "beta1",  "beta2",  "beta3",  "delta",  "gamma",  "c", "d", "w"};
  if (!heads.count(head)) {
    if (name.find('=') != std::string::npos) {
      return parse_identity(name);
    }
    throw parse_error("unknown identity name: '" + name + "'");
  }
  if (head == "sigma1") return sigma(1);
  if (head == "sigma2") return sigma(2);
  if (head == "sigma3") return sigma(3);
  if (head == "alpha1") return alpha(1);
  if (head == "alpha2") return alpha(2);
  if (head == "alpha3") return alpha(3);
  if (head == "beta1") return beta(1);
  if (head == "beta2") return beta(2);
  if (head == "beta3") return beta(3);
  if (head == "delta") {
    if (parts.size() != 2) {
      throw parse_error("usage: delta:K");
    }
    return delta(std::stoi(parts[1]));
  }
  if (head == "gamma") {
    if (parts.size() != 2) {
      throw parse_error("usage: gamma:K,L");
    }
    auto kl = split(parts[1], ',');
    if (kl.size() != 2) {
      throw parse_error("usage: gamma:K,L");
    }
    return gamma(std::stoi(kl[0]), std::stoi(kl[1]));
  }
  if (head == "c" || head == "d") {
    if (parts.size() < 2) {
      throw parse_error("usage: c:N,M[,K][:rho=[..]]");
    }
    auto nm = split(parts[1], ',');
    if (nm.size() != 2 && nm.size() != 3) {
      throw parse_error("usage: c:N,M[,K][:rho=[..]]");
    }
    int n = std::stoi(nm[0]), m = std::stoi(nm[1]);
    int k = nm.size() == 3 ? std::stoi(nm[2]) : 0;
    Permutation rho = Permutation::identity(n + m + k);
    if (parts.size() == 3) {
      if (parts[2].rfind("rho=", 0) != 0) {
        throw parse_error("usage: c:N,M[,K]:rho=[..]");
      }
      rho = parse_permutation(parts[2].substr(4));
    }
    return head == "c" ? c_identity(n, m, k, rho) : d_identity(n, m, k, rho);
  }
  if (head == "w") {
    if (parts.size() < 2) {
      throw parse_error("usage: w:N[:pi=[..]:tau=[..]]");
    }
    int         n   = std::stoi(parts[1]);
    Permutation pi  = Permutation::identity(n);
    Permutation tau = Permutation::identity(n);
    for (size_t i = 2; i < parts.size(); ++i) {
      if (parts[i].rfind("pi=", 0) == 0) {
        pi = parse_permutation(parts[i].substr(3));
      } else if (parts[i].rfind("tau=", 0) == 0) {
        tau = parse_permutation(parts[i].substr(4));
      } else {
        throw parse_error("usage: w:N:pi=[..]:tau=[..]");
      }
    }
    return w_identity(n, pi, tau);
  }
  throw parse_error("unknown identity name: '" + name + "'");
}

// Basis names:  SL, C:n, D:k|D:inf, E, O, A, K, N, P, P:n, Q:r,s:cap=N,
// R:cap=N, Astar:cap=N, Aprime:cap=N, LRB.
inline IdentitySystem named_basis(std::string const& name) {
  auto parts = split(name, ':');
  auto head  = parts[0];
  auto cap_of = [&](size_t idx, size_t dflt) -> size_t {
    if (parts.size() > idx && parts[idx].rfind("cap=", 0) == 0) {
      return std::stoul(parts[idx].substr(4));
    }
    return dflt;
  };
  if (head == "SL") return variety_basis(BasisName::SL);
  if (head == "C") return variety_basis(BasisName::C, std::stoi(parts.at(1)));
  if (head == "A") return variety_basis(BasisName::A);
  if (head == "D") {
    int k = parts.at(1) == "inf" ? kInfinity : std::stoi(parts[1]);
    return variety_basis(BasisName::D, k);
  }
  if (head == "E") return variety_basis(BasisName::E);
  if (head == "O") return variety_basis(BasisName::O);
  if (head == "K") return variety_basis(BasisName::K);
  if (head == "N") return variety_basis(BasisName::N);
  if (head == "P") {
    if (parts.size() == 1) {
      return variety_basis(BasisName::P);
    }
    return variety_basis(BasisName::Pn, std::stoi(parts[1]));
  }
  if (head == "Q") {
    auto rs = split(parts.at(1), ',');
    return variety_basis(BasisName::Q, std::stoi(rs.at(0)),
                         std::stoi(rs.at(1)), cap_of(2, 14));
  }
  if (head == "R") return variety_basis(BasisName::R, 0, 0, cap_of(1, 14));
  if (head == "Astar") return variety_basis(BasisName::Astar, 0, 0, cap_of(1, 14));
  if (head == "Aprime") return variety_basis(BasisName::Aprime, 0, 0, cap_of(1, 11));
  if (head == "LRB") return variety_basis(BasisName::LRB);
  throw parse_error("unknown basis name: '" + name + "'");
}

}  // namespace catalog
}  // namespace monoidlab

#endif  // MONOIDLAB_CATALOG_HPP_
