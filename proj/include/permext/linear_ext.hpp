#pragma once

// Extendability of permutations on finite vector sets to invertible linear
// maps, and the classification of fully extendable sets: such a set is
// either linearly independent or of the form x_1,...,x_m, -(x_1+...+x_m).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/permutation.hpp"

namespace permext {

/// Ordered set of pairwise distinct vectors of a common length.
class VectorSet {
 public:
  VectorSet(FieldSpec field, std::size_t dim, std::vector<Vector> vectors)
      : field_(field), dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ < 1) throw ValidationError("vector set: dimension must be positive");
    for (const Vector& v : vectors_) {
      if (v.field() != field_) throw FieldMismatchError("vector set: mixed fields");
      if (v.size() != dim_) throw DimensionError("vector set: wrong vector length");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i)
      for (std::size_t j = i + 1; j < vectors_.size(); ++j)
        if (vectors_[i] == vectors_[j])
          throw ValidationError("vector set: duplicate vector at positions " +
                                std::to_string(i) + " and " + std::to_string(j));
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }

  /// dim x k matrix whose columns are the set's vectors, in order.
  Matrix column_matrix() const { return Matrix::from_columns(field_, vectors_); }

  std::size_t rank() const { return permext::rank(column_matrix()); }
  bool spans_ambient() const { return rank() == dim_; }

  /// Reordered copy: result[i] = (*this)[sigma(i)].
  VectorSet permuted(const Permutation& sigma) const {
    if (sigma.size() != size()) throw DimensionError("permuted: size mismatch");
    std::vector<Vector> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(vectors_[sigma(i)]);
    return VectorSet(field_, dim_, std::move(out));
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> vectors_;
};

enum class LinearKind { Independent, BasisPlusNegativeSum, NotHomogeneous };

inline std::string to_string(LinearKind k) {
  switch (k) {
    case LinearKind::Independent: return "independent";
    case LinearKind::BasisPlusNegativeSum: return "basis_plus_negsum";
    case LinearKind::NotHomogeneous: return "not_homogeneous";
  }
  return "?";
}

struct LinearClass {
  LinearKind kind;
  std::size_t rank = 0;                  // rank of the set; = m for the negsum form
  std::optional<Permutation> witness;    // a non-extendable transposition
};

struct Extendability {
  bool fully_extendable = false;
  std::optional<Permutation> witness;
};

namespace detail {

// Pivot columns of the set's column matrix: a maximal independent subset
// in input order, matching the deterministic pivot scan of rref.
inline std::vector<std::size_t> independent_subset_indices(const VectorSet& xs) {
  return rref(xs.column_matrix()).pivot_columns;
}

// Completes `basis` (independent) to a basis of the ambient space with
// standard basis vectors, chosen greedily in index order.
inline std::vector<Vector> complete_with_standard_basis(FieldSpec field, std::size_t dim,
                                                        std::vector<Vector> basis) {
  for (std::size_t t = 0; t < dim && basis.size() < dim; ++t) {
    std::vector<Vector> trial = basis;
    trial.push_back(Vector::unit(field, dim, t));
    if (span_rank(trial) == trial.size()) basis = std::move(trial);
  }
  if (basis.size() != dim) throw Error("basis completion failed");  // unreachable
  return basis;
}

}  // namespace detail

/// The invertible linear map u with u(x_i) = x_{sigma(i)} for all i, if one
/// exists. Existence is decided by checking that every basis relation of X
/// still vanishes after applying sigma to the tuple, i.e. that the relation
/// spaces of X and sigma X coincide (they always have equal dimension, so
/// one containment settles equality). Off the span of X the map fixes a
/// deterministic standard-basis completion.
inline std::optional<Matrix> extend_permutation_linear(const VectorSet& xs,
                                                       const Permutation& sigma) {
  if (sigma.size() != xs.size())
    throw DimensionError("extend_permutation_linear: permutation size mismatch");
  const std::size_t k = xs.size();
  const FieldSpec f = xs.field();

  const std::vector<Vector> rels = relation_space(xs.vectors());
  for (const Vector& c : rels) {
    Vector acc = Vector::zero(f, xs.dim());
    for (std::size_t i = 0; i < k; ++i) acc = acc + c[i] * xs[sigma(i)];
    if (!acc.is_zero()) return std::nullopt;
  }

  const std::vector<std::size_t> piv = detail::independent_subset_indices(xs);
  std::vector<Vector> domain, image;
  domain.reserve(xs.dim());
  image.reserve(xs.dim());
  for (std::size_t i : piv) {
    domain.push_back(xs[i]);
    image.push_back(xs[sigma(i)]);
  }
  domain = detail::complete_with_standard_basis(f, xs.dim(), std::move(domain));
  for (std::size_t t = piv.size(); t < domain.size(); ++t) image.push_back(domain[t]);

  const Matrix p = Matrix::from_columns(f, domain);
  const Matrix q = Matrix::from_columns(f, image);
  const auto p_inv = invert(p);
  if (!p_inv.has_value()) throw Error("completed basis not invertible");  // unreachable
  return q * *p_inv;
}

/// True iff every permutation on X extends. Only the k-1 transpositions
/// (0 i) are tested: extendable permutations form a subgroup of S(X), and a
/// subgroup containing those generators is all of S(X). On failure the
/// first failing transposition in scan order (0 1), (0 2), ... is returned.
inline Extendability is_fully_extendable_linear(const VectorSet& xs) {
  if (xs.size() < 2) throw ValidationError("is_fully_extendable_linear: need |X| >= 2");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Permutation t = transposition(xs.size(), 0, i);
    if (!extend_permutation_linear(xs, t).has_value()) return {false, std::move(t)};
  }
  return {true, std::nullopt};
}

/// The classification of fully extendable vector sets.
inline LinearClass classify_linear(const VectorSet& xs) {
  if (xs.size() < 2) throw ValidationError("classify_linear: need |X| >= 2");
  const std::size_t k = xs.size();
  const std::size_t r = xs.rank();
  if (r == k) return {LinearKind::Independent, r, std::nullopt};

  if (k == r + 1) {
    Vector sum = Vector::zero(xs.field(), xs.dim());
    for (std::size_t i = 0; i < k; ++i) sum = sum + xs[i];
    if (sum.is_zero()) {
      bool all_subsets_independent = true;
      for (std::size_t drop = 0; drop < k && all_subsets_independent; ++drop) {
        std::vector<Vector> subset;
        subset.reserve(k - 1);
        for (std::size_t i = 0; i < k; ++i)
          if (i != drop) subset.push_back(xs[i]);
        if (span_rank(subset) != k - 1) all_subsets_independent = false;
      }
      if (all_subsets_independent) return {LinearKind::BasisPlusNegativeSum, r, std::nullopt};
    }
  }

  Extendability e = is_fully_extendable_linear(xs);
  if (e.fully_extendable)
    throw Error("classify_linear: verdict contradicts extendability check");  // library bug
  return {LinearKind::NotHomogeneous, r, std::move(e.witness)};
}

/// The unique extension of sigma for a spanning, extendable X. Spanning
/// makes the extension unique (images on a spanning set determine the map).
inline Matrix unique_linear_extension(const VectorSet& xs, const Permutation& sigma) {
  if (!xs.spans_ambient())
    throw NotSpanningError("unique_linear_extension: set does not span (rank " +
                           std::to_string(xs.rank()) + " < dim " + std::to_string(xs.dim()) + ")");
  auto u = extend_permutation_linear(xs, sigma);
  if (!u.has_value())
    throw NoExtensionError("unique_linear_extension: permutation " + sigma.to_string() +
                           " has no linear extension");
  return std::move(*u);
}

/// All k! extension matrices of a spanning, fully extendable X, in the
/// lexicographic order of the permutations they extend.
inline std::vector<Matrix> extension_group(const VectorSet& xs, std::size_t perm_cap = 8) {
  if (!xs.spans_ambient()) throw NotSpanningError("extension_group: set does not span");
  if (auto e = is_fully_extendable_linear(xs); !e.fully_extendable)
    throw NoExtensionError("extension_group: set is not fully extendable (witness " +
                           e.witness->to_string() + ")");
  std::vector<Matrix> out;
  for (const Permutation& sigma : all_permutations(xs.size(), perm_cap))
    out.push_back(unique_linear_extension(xs, sigma));
  return out;
}

}  // namespace permext
