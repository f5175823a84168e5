#pragma once

// Finite permutations on {0,...,k-1}, stored as image arrays.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "permext/error.hpp"

namespace permext {

class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v])
        throw ValidationError("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t k) {
    std::vector<std::size_t> im(k);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// 0-based image array, e.g. "[2,0,1]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<std::size_t> images_;
};

/// result(i) = s(t(i)).
inline Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw DimensionError("compose: length mismatch");
  std::vector<std::size_t> im(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) im[i] = s(t(i));
  return Permutation(std::move(im));
}

/// Swaps i and j, fixes everything else.
inline Permutation transposition(std::size_t k, std::size_t i, std::size_t j) {
  if (i >= k || j >= k) throw ValidationError("transposition: index out of range");
  if (i == j) throw ValidationError("transposition: equal indices");
  auto p = Permutation::identity(k).images();
  std::swap(p[i], p[j]);
  return Permutation(std::move(p));
}

/// The k-1 adjacent transpositions (0 1), (1 2), ..., which generate the
/// full symmetric group.
inline std::vector<Permutation> adjacent_transpositions(std::size_t k) {
  if (k < 2) throw ValidationError("adjacent_transpositions: need k >= 2");
  std::vector<Permutation> gens;
  gens.reserve(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) gens.push_back(transposition(k, i, i + 1));
  return gens;
}

/// All k! permutations in lexicographic order of their image arrays.
inline std::vector<Permutation> all_permutations(std::size_t k, std::size_t cap = 8) {
  if (k > cap)
    throw SizeLimitError("all_permutations: k = " + std::to_string(k) +
                         " exceeds cap " + std::to_string(cap));
  std::vector<std::size_t> im(k);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace permext
