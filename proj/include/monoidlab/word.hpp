// Words over an indexed alphabet and the combinatorial primitives used
// throughout the library: content, occurrence counts, simple/multiple
// letters, block decomposition, restriction/deletion, duals, substitution
// and factor tests.  All types are immutable values; operations are pure.

#ifndef MONOIDLAB_WORD_HPP_
#define MONOIDLAB_WORD_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoidlab {

struct parse_error : std::runtime_error {
  explicit parse_error(std::string const& what) : std::runtime_error(what) {}
};

// A letter is a nonempty ASCII base name plus an optional index (z1 is
// base "z", index 1).  Letters order by (base, index), absent index first.
struct Letter {
  std::string base;
  int64_t     index = -1;  // -1 means "no index"

  Letter() = default;
  Letter(std::string b, int64_t i = -1) : base(std::move(b)), index(i) {}
  Letter(char b) : base(1, b) {}

  friend auto operator<=>(Letter const& a, Letter const& b) {
    if (auto c = a.base <=> b.base; c != 0) {
      return c;
    }
    return a.index <=> b.index;
  }
  friend bool operator==(Letter const&, Letter const&) = default;

  std::string str() const {
    return index < 0 ? base : base + std::to_string(index);
  }
};

// A finite, possibly empty sequence of letters.  The empty word is a value
// (printed "@").  Concatenation is associative with the empty word as unit.
struct Word {
  std::vector<Letter> ls;

  Word() = default;
  explicit Word(std::vector<Letter> v) : ls(std::move(v)) {}

  size_t        size() const { return ls.size(); }
  bool          empty() const { return ls.empty(); }
  Letter const& operator[](size_t i) const { return ls[i]; }
  auto          begin() const { return ls.begin(); }
  auto          end() const { return ls.end(); }

  friend Word operator+(Word const& a, Word const& b) {
    Word r = a;
    r.ls.insert(r.ls.end(), b.ls.begin(), b.ls.end());
    return r;
  }
  Word& operator+=(Word const& b) {
    ls.insert(ls.end(), b.ls.begin(), b.ls.end());
    return *this;
  }
  Word& operator+=(Letter const& x) {
    ls.push_back(x);
    return *this;
  }

  friend bool operator==(Word const&, Word const&) = default;
  // Lexicographic under the letter order; downstream searches use this as
  // the deterministic tie-break.
  friend auto operator<=>(Word const& a, Word const& b) {
    return std::lexicographical_compare_three_way(
        a.ls.begin(), a.ls.end(), b.ls.begin(), b.ls.end());
  }
};

inline Word word_of(std::initializer_list<Letter> xs) {
  return Word(std::vector<Letter>(xs));
}

// Length first, then lexicographic.  Used for bounded enumerations.
inline bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

inline std::set<Letter> content(Word const& w) {
  return std::set<Letter>(w.begin(), w.end());
}

inline size_t occ(Word const& w, Letter const& x) {
  return static_cast<size_t>(std::count(w.begin(), w.end(), x));
}

inline std::set<Letter> simple_letters(Word const& w) {
  std::map<Letter, size_t> cnt;
  for (auto const& x : w) {
    ++cnt[x];
  }
  std::set<Letter> r;
  for (auto const& [x, c] : cnt) {
    if (c == 1) {
      r.insert(x);
    }
  }
  return r;
}

inline std::set<Letter> multiple_letters(Word const& w) {
  std::map<Letter, size_t> cnt;
  for (auto const& x : w) {
    ++cnt[x];
  }
  std::set<Letter> r;
  for (auto const& [x, c] : cnt) {
    if (c > 1) {
      r.insert(x);
    }
  }
  return r;
}

inline bool is_linear(Word const& w) {
  return multiple_letters(w).empty();
}

// w = w0 t1 w1 ... tm wm where t1..tm are the simple letters of w in order
// of occurrence and the blocks wi contain only letters multiple in w.
struct Decomposition {
  std::vector<Word>   blocks;      // m + 1 blocks, possibly empty
  std::vector<Letter> separators;  // m simple letters
};

inline Decomposition decompose(Word const& w) {
  auto          sim = simple_letters(w);
  Decomposition d;
  d.blocks.emplace_back();
  for (auto const& x : w) {
    if (sim.count(x)) {
      d.separators.push_back(x);
      d.blocks.emplace_back();
    } else {
      d.blocks.back() += x;
    }
  }
  return d;
}

inline Word join(Decomposition const& d) {
  Word w = d.blocks.at(0);
  for (size_t i = 0; i < d.separators.size(); ++i) {
    w += d.separators[i];
    w += d.blocks.at(i + 1);
  }
  return w;
}

// Keep exactly the positions whose letter lies in X, preserving order.
inline Word restrict_to(Word const& w, std::set<Letter> const& X) {
  Word r;
  for (auto const& x : w) {
    if (X.count(x)) {
      r += x;
    }
  }
  return r;
}

// Delete all positions whose letter lies in X.
inline Word delete_letters(Word const& w, std::set<Letter> const& X) {
  Word r;
  for (auto const& x : w) {
    if (!X.count(x)) {
      r += x;
    }
  }
  return r;
}

// Subsequence of first occurrences; the result is linear with the same
// content.
inline Word ini(Word const& w) {
  std::set<Letter> seen;
  Word             r;
  for (auto const& x : w) {
    if (seen.insert(x).second) {
      r += x;
    }
  }
  return r;
}

inline Word reversed(Word const& w) {
  Word r = w;
  std::reverse(r.ls.begin(), r.ls.end());
  return r;
}

using Substitution = std::map<Letter, Word>;

// The unique extension of m to a monoid endomorphism; letters outside the
// domain map to themselves.
inline Word substitute(Word const& w, Substitution const& m) {
  Word r;
  for (auto const& x : w) {
    auto it = m.find(x);
    if (it == m.end()) {
      r += x;
    } else {
      r += it->second;
    }
  }
  return r;
}

// Contiguous-factor test; the empty word is a factor of everything.
inline bool is_factor(Word const& u, Word const& w) {
  if (u.size() > w.size()) {
    return false;
  }
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end()
         || u.empty();
}

// ---------------------------------------------------------------------
// Text format.  Whitespace-separated tokens; a token is `base` or
// `base<digits>`; the single token `@` denotes the empty word.  A single
// all-alphabetic token of length >= 2 is read as the compact form, one
// letter per character.

inline Letter parse_letter_token(std::string const& tok) {
  if (tok.empty()) {
    throw parse_error("empty letter token");
  }
  size_t i = 0;
  while (i < tok.size() && std::isalpha(static_cast<unsigned char>(tok[i]))) {
    ++i;
  }
  if (i == 0) {
    throw parse_error("letter must start with a name: '" + tok + "'");
  }
  std::string base = tok.substr(0, i);
  if (i == tok.size()) {
    if (base.size() > 1) {
      // would collide with the compact form on re-parse
      throw parse_error("multi-character letter '" + tok
                        + "' needs an index (e.g. '" + tok + "1')");
    }
    return Letter(base);
  }
  for (size_t j = i; j < tok.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      throw parse_error("bad letter token '" + tok + "' at position "
                        + std::to_string(j));
    }
  }
  return Letter(base, std::stoll(tok.substr(i)));
}

inline Word parse_word(std::string const& text) {
  std::istringstream       in(text);
  std::vector<std::string> toks;
  std::string              t;
  while (in >> t) {
    toks.push_back(t);
  }
  if (toks.empty()) {
    throw parse_error("empty word text (use '@' for the empty word)");
  }
  if (toks.size() == 1 && toks[0] == "@") {
    return Word();
  }
  Word w;
  if (toks.size() == 1 && toks[0].size() >= 2
      && std::all_of(toks[0].begin(), toks[0].end(), [](unsigned char c) {
           return std::isalpha(c);
         })) {
    for (char c : toks[0]) {
      w += Letter(c);
    }
    return w;
  }
  for (auto const& tok : toks) {
    w += parse_letter_token(tok);
  }
  return w;
}

inline std::string to_string(Word const& w) {
  if (w.empty()) {
    return "@";
  }
  bool compact = w.size() >= 2;
  for (auto const& x : w) {
    if (x.index >= 0 || x.base.size() != 1) {
      compact = false;
      break;
    }
  }
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) {
      s += ' ';
    }
    s += w[i].str();
  }
  return s;
}

struct WordHash {
  size_t operator()(Word const& w) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto const& x : w) {
      for (char c : x.base) {
        h = (h ^ static_cast<size_t>(c)) * 1099511628211ull;
      }
      h = (h ^ static_cast<size_t>(x.index + 2)) * 1099511628211ull;
    }
    return h;
  }
};

}  // namespace monoidlab

#endif  // MONOIDLAB_WORD_HPP_
