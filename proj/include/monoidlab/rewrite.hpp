// Bounded derivability of identities from identity systems, and the
// structural predicates on identities (linear-balanced, n-invertible,
// efficient).
//
// Rule application works by factor matching: an instance of a rule side
// is located inside the current word by binding the rule's letters to
// contiguous segments (possibly empty), so substitution images are always
// words over the goal's letters.  Rules apply in both directions.  The
// search is a level-synchronized breadth-first sweep from both goal sides
// that meets in the middle; frontier expansion order is deterministic.

#ifndef MONOIDLAB_REWRITE_HPP_
#define MONOIDLAB_REWRITE_HPP_

#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "identity.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace monoidlab {

struct RewriteStep {
  size_t       rule = 0;  // index into the system
  std::string  rule_name;
  bool         forward = true;  // lhs -> rhs of the rule
  size_t       position = 0;    // start of the replaced factor
  Substitution subst;
  Word         before;
  Word         after;
};

struct DerivationResult {
  enum class Kind { Proved, RefutedByModel, Unknown } kind;
  std::vector<RewriteStep> chain;          // Proved
  size_t                   model = 0;      // RefutedByModel: index into models
  Assignment               model_witness;  // RefutedByModel
  size_t                   expansions = 0;
  std::string              note;
};

// One rewrite step replays iff the matched factor really is the
// substituted rule side and the replacement produces `after`.
inline bool replay_step(std::vector<Identity> const& sys, RewriteStep const& s) {
  if (s.rule >= sys.size()) {
    return false;
  }
  Word const& from = s.forward ? sys[s.rule].lhs : sys[s.rule].rhs;
  Word const& to   = s.forward ? sys[s.rule].rhs : sys[s.rule].lhs;
  Word        f    = substitute(from, s.subst);
  Word        t    = substitute(to, s.subst);
  if (s.position + f.size() > s.before.size()) {
    return false;
  }
  for (size_t i = 0; i < f.size(); ++i) {
    if (!(s.before[s.position + i] == f[i])) {
      return false;
    }
  }
  Word rebuilt(std::vector<Letter>(s.before.begin(),
                                   s.before.begin() + s.position));
  rebuilt += t;
  rebuilt += Word(std::vector<Letter>(s.before.begin() + s.position + f.size(),
                                      s.before.end()));
  return rebuilt == s.after;
}

inline bool replay_chain(std::vector<Identity> const& sys, Identity const& goal,
                         std::vector<RewriteStep> const& chain) {
  Word cur = goal.lhs;
  for (auto const& s : chain) {
    if (!(s.before == cur) || !replay_step(sys, s)) {
      return false;
    }
    cur = s.after;
  }
  return cur == goal.rhs;
}

namespace detail {

// Packed alphabet for the search: bytes index the goal's letters.
struct RuleShape {
  size_t           rule;
  bool             forward;
  std::vector<int> from, to;          // rule-letter ids
  std::vector<int> pre, core_f, core_t, suf;  // stripped shape
  std::vector<int> extra;             // letters of `to` absent from `from`
};

struct Deriver {
  std::vector<Identity> const& sys;
  std::vector<Letter>          alphabet;     // goal letters, sorted
  std::vector<Letter>          rule_letters; // all letters across rules
  std::vector<RuleShape>       shapes;
  size_t                       maxlen;

  Deriver(std::vector<Identity> const& s, Identity const& goal, size_t ml)
      : sys(s), maxlen(ml) {
    auto ls = letters_of(goal);
    alphabet.assign(ls.begin(), ls.end());
    std::set<Letter> rl;
    for (auto const& id : sys) {
      auto t = letters_of(id);
      rl.insert(t.begin(), t.end());
    }
    rule_letters.assign(rl.begin(), rl.end());
    std::map<Letter, int> rid;
    for (size_t i = 0; i < rule_letters.size(); ++i) {
      rid[rule_letters[i]] = static_cast<int>(i);
    }
    for (size_t r = 0; r < sys.size(); ++r) {
      for (bool fwd : {true, false}) {
        RuleShape sh;
        sh.rule    = r;
        sh.forward = fwd;
        for (auto const& x : (fwd ? sys[r].lhs : sys[r].rhs)) {
          sh.from.push_back(rid[x]);
        }
        for (auto const& x : (fwd ? sys[r].rhs : sys[r].lhs)) {
          sh.to.push_back(rid[x]);
        }
        size_t p = 0;
        while (p < sh.from.size() && p < sh.to.size()
               && sh.from[p] == sh.to[p]) {
          ++p;
        }
        size_t sf = sh.from.size(), st = sh.to.size();
        while (sf > p && st > p && sh.from[sf - 1] == sh.to[st - 1]) {
          --sf;
          --st;
        }
        sh.pre.assign(sh.from.begin(), sh.from.begin() + p);
        sh.core_f.assign(sh.from.begin() + p, sh.from.begin() + sf);
        sh.core_t.assign(sh.to.begin() + p, sh.to.begin() + st);
        sh.suf.assign(sh.from.begin() + sf, sh.from.end());
        // the greedy context matcher needs every letter that the core
        // does not bind to occur once across both contexts; otherwise
        // fall back to matching the unstripped sides exhaustively
        {
          std::set<int>      corels(sh.core_f.begin(), sh.core_f.end());
          std::set<int>      replls(sh.core_t.begin(), sh.core_t.end());
          std::map<int, int> cnt;
          for (int x : sh.pre) {
            ++cnt[x];
          }
          for (int x : sh.suf) {
            ++cnt[x];
          }
          bool fast = true;
          for (auto const& [x, c] : cnt) {
            if (!corels.count(x) && (c > 1 || replls.count(x))) {
              fast = false;  // a witness choice would leak into the result
            }
          }
          if (!fast) {
            sh.pre.clear();
            sh.suf.clear();
            sh.core_f = sh.from;
            sh.core_t = sh.to;
          }
        }
        std::set<int> fromset(sh.from.begin(), sh.from.end());
        for (int x : sh.core_t) {
          if (!fromset.count(x) && !std::count(sh.extra.begin(),
                                               sh.extra.end(), x)) {
            sh.extra.push_back(x);
          }
        }
        shapes.push_back(std::move(sh));
      }
    }
  }

  std::string pack(Word const& w) const {
    std::string s;
    s.reserve(w.size());
    for (auto const& x : w) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
      if (it == alphabet.end() || !(*it == x)) {
        throw std::invalid_argument("derive: word leaves the goal alphabet");
      }
      s += static_cast<char>(it - alphabet.begin());
    }
    return s;
  }

  Word unpack(std::string const& s) const {
    Word w;
    for (char c : s) {
      w += alphabet[static_cast<size_t>(c)];
    }
    return w;
  }

  // Bindings are views into the current word: (offset, length), with
  // offset -1 meaning unbound.  Every substitution image produced by
  // factor matching is a segment of the word being rewritten.
  struct Seg {
    int off = -1, len = 0;
    bool bound() const { return off >= 0; }
  };
  using Binding = std::vector<Seg>;

  static bool seg_eq(std::string const& w, Seg a, size_t at, size_t limit) {
    return at + a.len <= limit
           && w.compare(at, a.len, w, a.off, a.len) == 0;
  }

  // Existence-with-witness matcher for context patterns where every
  // letter is either bound by the core or occurs exactly once across both
  // contexts (and not in the replacement): maximal runs of bound letters
  // concatenate into segments that must occur in order with free letters
  // absorbing the gaps, so greedy placement from the anchored end is
  // complete.  Free letters toward the unanchored end take the empty
  // witness; the others take their whole gap.
  bool match_context(std::vector<int> const& pat, std::string const& w,
                     size_t lo, size_t hi, bool right_anchored, Binding& b,
                     size_t& start_or_end) const {
    struct Run {
      bool                                 bound;
      std::vector<std::pair<int, Seg>>     imgs;   // bound runs
      std::vector<int>                     frees;  // free runs
      size_t                               len = 0;
      size_t                               pos = 0;
    };
    std::vector<Run> runs;
    for (int ell : pat) {
      bool bound = b[ell].bound();
      if (runs.empty() || runs.back().bound != bound) {
        runs.push_back(Run{bound, {}, {}, 0, 0});
      }
      if (bound) {
        runs.back().imgs.emplace_back(ell, b[ell]);
        runs.back().len += b[ell].len;
      } else {
        runs.back().frees.push_back(ell);
      }
    }
    auto run_at = [&](Run const& run, size_t at) {
      size_t cur = at;
      for (auto const& [ell, seg] : run.imgs) {
        if (!seg_eq(w, seg, cur, w.size())) {
          return false;
        }
        cur += seg.len;
      }
      return true;
    };
    if (right_anchored) {
      size_t cur   = hi;
      bool   tight = true;
      for (size_t r = runs.size(); r-- > 0;) {
        if (!runs[r].bound) {
          tight = false;
          continue;
        }
        if (runs[r].len > cur - lo) {
          return false;
        }
        if (tight) {
          if (!run_at(runs[r], cur - runs[r].len)) {
            return false;
          }
          runs[r].pos = cur - runs[r].len;
        } else {
          bool found = false;
          for (size_t at = cur - runs[r].len + 1; at-- > lo;) {
            if (run_at(runs[r], at)) {
              runs[r].pos = at;
              found       = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
        }
        cur   = runs[r].pos;
        tight = true;
      }
    } else {
      size_t cur   = lo;
      bool   tight = true;
      for (size_t r = 0; r < runs.size(); ++r) {
        if (!runs[r].bound) {
          tight = false;
          continue;
        }
        if (cur + runs[r].len > hi) {
          return false;
        }
        if (tight) {
          if (!run_at(runs[r], cur)) {
            return false;
          }
          runs[r].pos = cur;
        } else {
          bool found = false;
          for (size_t at = cur; at + runs[r].len <= hi; ++at) {
            if (run_at(runs[r], at)) {
              runs[r].pos = at;
              found       = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
        }
        cur   = runs[r].pos + runs[r].len;
        tight = true;
      }
    }
    // free-run witnesses: the gap between neighbouring bound runs; the
    // run toward the unanchored end takes the empty witness
    for (size_t r = 0; r < runs.size(); ++r) {
      if (runs[r].bound) {
        continue;
      }
      bool   has_prev = r > 0, has_next = r + 1 < runs.size();
      size_t gap_begin, gap_end;
      if (right_anchored) {
        gap_end   = has_next ? runs[r + 1].pos : hi;
        gap_begin = has_prev ? runs[r - 1].pos + runs[r - 1].len : gap_end;
      } else {
        gap_begin = has_prev ? runs[r - 1].pos + runs[r - 1].len : lo;
        gap_end   = has_next ? runs[r + 1].pos : gap_begin;
      }
      for (size_t f = 0; f < runs[r].frees.size(); ++f) {
        b[runs[r].frees[f]] =
            f == 0 ? Seg{static_cast<int>(gap_begin),
                         static_cast<int>(gap_end - gap_begin)}
                   : Seg{static_cast<int>(gap_begin), 0};
      }
      runs[r].pos = gap_begin;
      runs[r].len = right_anchored && !has_prev ? 0 : gap_end - gap_begin;
    }
    if (right_anchored) {
      start_or_end = runs.empty() ? hi : runs.front().pos;
      if (!runs.empty() && !runs.front().bound && runs.size() == 1) {
        start_or_end = hi;
      }
    } else {
      start_or_end = lo;
      if (!runs.empty()) {
        start_or_end = runs.back().pos + runs.back().len;
      }
    }
    return true;
  }

  template <typename Fn>
  void enumerate_core(RuleShape const& sh, std::string const& w, size_t begin,
                      size_t pi, size_t cur, Binding& b, Fn&& emit) const {
    if (pi == sh.core_f.size()) {
      // core matched on [begin, cur); check the stripped context
      Binding bb     = b;
      size_t  pstart = begin, send = cur;
      if (!sh.pre.empty()
          && !match_context(sh.pre, w, 0, begin, true, bb, pstart)) {
        return;
      }
      if (!sh.suf.empty()
          && !match_context(sh.suf, w, cur, w.size(), false, bb, send)) {
        return;
      }
      for (int x : sh.extra) {
        if (!bb[x].bound()) {
          bb[x] = Seg{0, 0};  // letters on the target side only
        }
      }
      std::string result;
      result.reserve(w.size() + 2);
      result.append(w, 0, begin);
      for (int x : sh.core_t) {
        result.append(w, bb[x].off, bb[x].len);
      }
      result.append(w, cur, w.size() - cur);
      if (result.size() > maxlen) {
        return;
      }
      emit(std::move(result), pstart, send, std::move(bb));
      return;
    }
    int ell = sh.core_f[pi];
    if (b[ell].bound()) {
      if (seg_eq(w, b[ell], cur, w.size())) {
        enumerate_core(sh, w, begin, pi + 1, cur + b[ell].len, b, emit);
      }
      return;
    }
    for (size_t len = 0; cur + len <= w.size(); ++len) {
      b[ell] = Seg{static_cast<int>(cur), static_cast<int>(len)};
      enumerate_core(sh, w, begin, pi + 1, cur + len, b, emit);
    }
    b[ell] = Seg{};
  }

  // Every one-step rewrite of w, deduplicated, through a callback that
  // receives the packed result (cheap path for closure computations).
  template <typename Fn>
  void for_each_successor(std::string const& w, Fn&& fn) const {
    std::unordered_set<std::string> seen;
    for (auto const& sh : shapes) {
      for (size_t begin = 0; begin <= w.size(); ++begin) {
        Binding b(rule_letters.size());
        enumerate_core(sh, w, begin, 0, begin, b,
                       [&](std::string&& result, size_t pstart, size_t send,
                           Binding&& bb) {
                         if (result != w && seen.insert(result).second) {
                           fn(sh, result, pstart, send, bb);
                         }
                       });
      }
    }
  }

  // All one-step successors of w, with one representative full match
  // each, as replayable steps.  Deterministic order.
  std::vector<std::pair<std::string, RewriteStep>> successors(
      std::string const& w) const {
    std::vector<std::pair<std::string, RewriteStep>> out;
    for_each_successor(w, [&](RuleShape const& sh, std::string const& result,
                              size_t pstart, size_t send, Binding const& bb) {
      RewriteStep step;
      step.rule      = sh.rule;
      step.rule_name = sys[sh.rule].name.empty()
                           ? "#" + std::to_string(sh.rule)
                           : sys[sh.rule].name;
      step.forward  = sh.forward;
      step.position = pstart;
      for (size_t i = 0; i < rule_letters.size(); ++i) {
        if (bb[i].bound()) {
          step.subst[rule_letters[i]] =
              unpack(w.substr(bb[i].off, bb[i].len));
        }
      }
      step.before = unpack(w);
      step.after  = unpack(result);
      out.emplace_back(result, std::move(step));
    });
    return out;
  }
};


inline size_t memory_cap_bytes() {
  if (char const* env = std::getenv("MONOIDLAB_MAX_MEM_MB")) {
    return std::stoull(env) * 1024 * 1024;
  }
  return size_t(4096) * 1024 * 1024;  // 4 GiB default
}

}  // namespace detail

// Bidirectional breadth-first derivation of `goal` from `sys` over words
// of length <= maxLen.  Every supplied model that satisfies the whole
// system but fails the goal refutes it.  Exhausting maxSteps expansions
// (or the search space, or the memory cap) yields Unknown.
inline DerivationResult derive(IdentitySystem const& sys, Identity const& goal,
                               size_t maxLen, size_t maxSteps,
                               std::vector<FiniteMonoid> const& models = {}) {
  if (maxLen < std::max(goal.lhs.size(), goal.rhs.size())) {
    throw std::invalid_argument("derive: maxLen below the goal's sides");
  }
  DerivationResult res;
  for (size_t m = 0; m < models.size(); ++m) {
    if (first_failure(models[m], sys.items).has_value()) {
      continue;  // not a model of the system
    }
    auto sat = satisfies(models[m], goal);
    if (!sat.holds) {
      res.kind          = DerivationResult::Kind::RefutedByModel;
      res.model         = m;
      res.model_witness = sat.witness;
      return res;
    }
  }
  if (goal.trivial()) {
    res.kind = DerivationResult::Kind::Proved;
    return res;
  }

  detail::Deriver D(sys.items, goal, maxLen);
  using Parent = std::pair<std::string, RewriteStep>;  // predecessor, step
  std::unordered_map<std::string, Parent> tree[2];
  std::deque<std::string>                 frontier[2];
  std::string                             start[2] = {D.pack(goal.lhs),
                                                      D.pack(goal.rhs)};
  tree[0].emplace(start[0], Parent{});
  tree[1].emplace(start[1], Parent{});
  frontier[0].push_back(start[0]);
  frontier[1].push_back(start[1]);

  size_t      expansions = 0;
  size_t      mem        = 0;
  size_t      mem_cap    = detail::memory_cap_bytes();
  std::string meet;
  int         meet_side = -1;

  if (start[0] == start[1]) {
    res.kind = DerivationResult::Kind::Proved;
    return res;
  }

  while (meet_side < 0 && (!frontier[0].empty() || !frontier[1].empty())) {
    int side = 0;
    if (frontier[0].empty()
        || (!frontier[1].empty() && frontier[1].size() < frontier[0].size())) {
      side = 1;
    }
    std::deque<std::string> next;
    while (!frontier[side].empty() && meet_side < 0) {
      auto cur = frontier[side].front();
      frontier[side].pop_front();
      if (++expansions > maxSteps) {
        res.kind       = DerivationResult::Kind::Unknown;
        res.expansions = expansions;
        res.note       = "step budget exhausted";
        return res;
      }
      for (auto& [succ, step] : D.successors(cur)) {
        if (tree[side].count(succ)) {
          continue;
        }
        mem += succ.size() * 2 + 96;
        if (mem > mem_cap) {
          res.kind       = DerivationResult::Kind::Unknown;
          res.expansions = expansions;
          res.note       = "memory cap exceeded";
          return res;
        }
        tree[side].emplace(succ, Parent{cur, step});
        next.push_back(succ);
        if (tree[1 - side].count(succ)) {
          meet      = succ;
          meet_side = side;
          break;
        }
      }
    }
    frontier[side].swap(next);
  }

  res.expansions = expansions;
  if (meet_side < 0) {
    res.kind = DerivationResult::Kind::Unknown;
    res.note = "search space exhausted within bounds";
    return res;
  }

  // stitched chain: lhs -> meet -> rhs
  std::vector<RewriteStep> left, right;
  for (std::string cur = meet; cur != start[0];) {
    auto const& [prev, step] = tree[0].at(cur);
    left.push_back(step);
    cur = prev;
  }
  std::reverse(left.begin(), left.end());
  for (std::string cur = meet; cur != start[1];) {
    auto [prev, step] = tree[1].at(cur);
    std::swap(step.before, step.after);  // invert: runs toward rhs
    step.forward = !step.forward;
    right.push_back(step);
    cur = prev;
  }
  res.kind  = DerivationResult::Kind::Proved;
  res.chain = std::move(left);
  res.chain.insert(res.chain.end(), right.begin(), right.end());
  return res;
}

// ---------------------------------------------------------------------
// Structural predicates.

// Both sides share the simple-letter skeleton and every multiple letter
// occurs the same (at most one) number of times in corresponding blocks.
inline bool is_linear_balanced(Identity const& id) {
  if (content(id.lhs) != content(id.rhs)) {
    return false;
  }
  auto du = decompose(id.lhs), dv = decompose(id.rhs);
  if (du.separators != dv.separators) {
    return false;
  }
  auto mul = multiple_letters(id.lhs);
  for (auto const& x : multiple_letters(id.rhs)) {
    mul.insert(x);
  }
  for (auto const& x : mul) {
    for (size_t i = 0; i < du.blocks.size(); ++i) {
      auto a = occ(du.blocks[i], x), b = occ(dv.blocks[i], x);
      if (a != b || a > 1) {
        return false;
      }
    }
  }
  return true;
}

// u_i and v_i are never both empty, given identical separator sequences.
inline bool is_efficient(Identity const& id) {
  auto du = decompose(id.lhs), dv = decompose(id.rhs);
  if (du.separators != dv.separators) {
    return false;
  }
  for (size_t i = 0; i < du.blocks.size(); ++i) {
    if (du.blocks[i].empty() && dv.blocks[i].empty()) {
      return false;
    }
  }
  return true;
}

struct InvertibilityResult {
  enum class Kind { Degree, NotInvertible, UnknownWithinCap } kind;
  size_t degree = 0;
};

namespace detail {

// Adjacent transpositions of two letters that both occur in the rest of
// the word; one application is exactly a 1-invertible step.
inline std::vector<Word> invertible_moves(Word const& w) {
  std::vector<Word> out;
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] == w[p + 1]) {
      continue;
    }
    auto elsewhere = [&](Letter const& x) {
      for (size_t q = 0; q < w.size(); ++q) {
        if (q != p && q != p + 1 && w[q] == x) {
          return true;
        }
      }
      return false;
    };
    if (!elsewhere(w[p]) || !elsewhere(w[p + 1])) {
      continue;
    }
    Word v = w;
    std::swap(v.ls[p], v.ls[p + 1]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Least number of 1-invertible steps joining the sides: breadth-first
// search over the transposition graph, capped at `cap` steps.
inline InvertibilityResult invertibility_degree(Identity const& id,
                                                size_t cap = 64) {
  if (id.trivial()) {
    return {InvertibilityResult::Kind::Degree, 0};
  }
  std::unordered_set<Word, WordHash> seen{id.lhs};
  std::deque<Word>                   frontier{id.lhs};
  for (size_t depth = 1; depth <= cap; ++depth) {
    std::deque<Word> next;
    for (auto const& cur : frontier) {
      for (auto const& succ : detail::invertible_moves(cur)) {
        if (!seen.insert(succ).second) {
          continue;
        }
        if (succ == id.rhs) {
          return {InvertibilityResult::Kind::Degree, depth};
        }
        next.push_back(std::move(succ));
      }
    }
    if (next.empty()) {
      return {InvertibilityResult::Kind::NotInvertible, 0};
    }
    frontier.swap(next);
  }
  return {InvertibilityResult::Kind::UnknownWithinCap, 0};
}

}  // namespace monoidlab

#endif  // MONOIDLAB_REWRITE_HPP_
