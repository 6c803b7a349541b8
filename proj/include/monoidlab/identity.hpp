// Identities (ordered pairs of words) and finite identity systems.

#ifndef MONOIDLAB_IDENTITY_HPP_
#define MONOIDLAB_IDENTITY_HPP_

#include <string>
#include <vector>

#include "word.hpp"

namespace monoidlab {

struct Identity {
  Word        lhs;
  Word        rhs;
  std::string name;  // optional label

  Identity() = default;
  Identity(Word l, Word r, std::string n = "")
      : lhs(std::move(l)), rhs(std::move(r)), name(std::move(n)) {}

  bool trivial() const { return lhs == rhs; }

  friend bool operator==(Identity const& a, Identity const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

inline std::set<Letter> letters_of(Identity const& id) {
  auto s = content(id.lhs);
  auto t = content(id.rhs);
  s.insert(t.begin(), t.end());
  return s;
}

// Mirror image: reverse both sides.
inline Identity dual(Identity const& id) {
  std::string n = id.name.empty() ? "" : id.name + "^d";
  return Identity(reversed(id.lhs), reversed(id.rhs), n);
}

inline Identity rename(Identity const& id, Substitution const& m) {
  return Identity(substitute(id.lhs, m), substitute(id.rhs, m), id.name);
}

// `LHS = RHS`, word syntax from the word module.
inline Identity parse_identity(std::string const& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw parse_error("identity must contain '=': '" + text + "'");
  }
  if (text.find('=', eq + 1) != std::string::npos) {
    throw parse_error("identity must contain a single '=': '" + text + "'");
  }
  return Identity(parse_word(text.substr(0, eq)),
                  parse_word(text.substr(eq + 1)));
}

inline std::string to_string(Identity const& id) {
  return to_string(id.lhs) + " = " + to_string(id.rhs);
}

// A named, possibly parameter-capped, finite list of identities.  The
// provenance string records (name, cap) so the same list can be
// regenerated deterministically.
struct IdentitySystem {
  std::vector<Identity> items;
  std::string           provenance;

  IdentitySystem() = default;
  IdentitySystem(std::vector<Identity> xs, std::string prov)
      : items(std::move(xs)), provenance(std::move(prov)) {}
};

inline IdentitySystem dual(IdentitySystem const& sys) {
  IdentitySystem d;
  d.provenance = "dual(" + sys.provenance + ")";
  for (auto const& id : sys.items) {
    d.items.push_back(dual(id));
  }
  return d;
}

}  // namespace monoidlab

#endif  // MONOIDLAB_IDENTITY_HPP_
