// Permutations of {1..n}, with the empty permutation standing in for both
// S_0 and S_1 conventions used by the word families.

#ifndef MONOIDLAB_PERMUTATION_HPP_
#define MONOIDLAB_PERMUTATION_HPP_

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace monoidlab {

struct Permutation {
  // images[i-1] = image of i; a bijection on {1..n}.
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {
    if (!valid()) {
      throw std::invalid_argument("not a permutation of {1..n}");
    }
  }

  int    degree() const { return static_cast<int>(images.size()); }
  int    operator()(int i) const { return images.at(i - 1); }
  bool   valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > degree() || seen[v - 1]) {
        return false;
      }
      seen[v - 1] = true;
    }
    return true;
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  // (a then b): i -> b(a(i))
  friend Permutation compose(Permutation const& a, Permutation const& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<int> im(a.images.size());
    for (int i = 1; i <= a.degree(); ++i) {
      im[i - 1] = b(a(i));
    }
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images.size());
    for (int i = 1; i <= degree(); ++i) {
      im[images[i - 1] - 1] = i;
    }
    return Permutation(std::move(im));
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& a, Permutation const& b) {
    return a.images <=> b.images;
  }
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// "[2,1]" or "[]" for the empty permutation.
inline Permutation parse_permutation(std::string const& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw parse_error("permutation must look like [2,1]: '" + s + "'");
  }
  std::vector<int> im;
  std::string      body = s.substr(1, s.size() - 2);
  size_t           pos  = 0;
  while (pos < body.size()) {
    size_t next = body.find(',', pos);
    if (next == std::string::npos) {
      next = body.size();
    }
    im.push_back(std::stoi(body.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Permutation(std::move(im));
}

inline std::string to_string(Permutation const& p) {
  std::string s = "[";
  for (int i = 0; i < p.degree(); ++i) {
    if (i) {
      s += ',';
    }
    s += std::to_string(p.images[i]);
  }
  return s + "]";
}

}  // namespace monoidlab

#endif  // MONOIDLAB_PERMUTATION_HPP_
