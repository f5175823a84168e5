#pragma once

// Projective points, independence / simplex / harmonic predicates, and
// extendability of permutations on finite point sets to invertible maps
// taken up to scalar multiples.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/linear_ext.hpp"
#include "permext/permutation.hpp"

namespace permext {

/// True iff b = c * a for some nonzero scalar c.
inline bool proportional(const Vector& a, const Vector& b) {
  if (a.field() != b.field() || a.size() != b.size())
    throw FieldMismatchError("proportional: incompatible vectors");
  std::size_t t = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      t = i;
      break;
    }
  if (t == a.size()) return false;  // a = 0
  const Scalar c = b[t] / a[t];
  if (c.is_zero()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c * a[i] != b[i]) return false;
  return true;
}

/// True iff the two invertible matrices differ by a nonzero scalar factor,
/// i.e. they induce the same transformation of the projective space.
inline bool pgl_equal(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatchError("pgl_equal: fields differ");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("pgl_equal: shapes differ");
  std::size_t ti = a.rows(), tj = 0;
  for (std::size_t i = 0; i < a.rows() && ti == a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) {
        ti = i;
        tj = j;
        break;
      }
  if (ti == a.rows()) return false;  // zero matrix, not invertible anyway
  if (b.at(ti, tj).is_zero()) return false;
  const Scalar c = b.at(ti, tj) / a.at(ti, tj);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (c * a.at(i, j) != b.at(i, j)) return false;
  return true;
}

/// A projective point: a 1-dimensional subspace, stored as the unique
/// representative whose first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(const Vector& rep) : rep_(normalize(rep)) {}

  const Vector& rep() const { return rep_; }
  const FieldSpec& field() const { return rep_.field(); }
  std::size_t dim() const { return rep_.size(); }

  /// True iff v spans this point.
  bool contains(const Vector& v) const { return proportional(rep_, v); }

  bool operator==(const ProjPoint& o) const { return rep_ == o.rep_; }
  bool operator!=(const ProjPoint& o) const { return rep_ != o.rep_; }

  std::string to_string() const { return "<" + rep_.to_string() + ">"; }

 private:
  static Vector normalize(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return v[i].inverse() * v;
    throw ValidationError("projective point: zero representative");
  }

  Vector rep_;
};

/// Ordered set of pairwise distinct projective points.
class ProjSet {
 public:
  ProjSet(FieldSpec field, std::size_t dim, std::vector<ProjPoint> points)
      : field_(field), dim_(dim), points_(std::move(points)) {
    for (const ProjPoint& p : points_) {
      if (p.field() != field_) throw FieldMismatchError("point set: mixed fields");
      if (p.dim() != dim_) throw DimensionError("point set: wrong point dimension");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw ValidationError("point set: duplicate point at positions " +
                                std::to_string(i) + " and " + std::to_string(j));
  }

  static ProjSet from_vectors(FieldSpec field, std::size_t dim,
                              const std::vector<Vector>& reps) {
    std::vector<ProjPoint> pts;
    pts.reserve(reps.size());
    for (const Vector& v : reps) pts.emplace_back(v);
    return ProjSet(field, dim, std::move(pts));
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjPoint>& points() const { return points_; }

  std::vector<Vector> reps() const {
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const ProjPoint& p : points_) out.push_back(p.rep());
    return out;
  }

  std::size_t rank() const { return span_rank(reps()); }

  std::optional<std::size_t> index_of(const ProjPoint& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i] == p) return i;
    return std::nullopt;
  }

  /// Reordered copy: result[i] = (*this)[sigma(i)].
  ProjSet permuted(const Permutation& sigma) const {
    if (sigma.size() != size()) throw DimensionError("permuted: size mismatch");
    std::vector<ProjPoint> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(points_[sigma(i)]);
    return ProjSet(field_, dim_, std::move(out));
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<ProjPoint> points_;
};

/// An element of the projective linear group: an invertible matrix taken
/// up to nonzero scalar multiples.
class PglElement {
 public:
  explicit PglElement(Matrix rep) : rep_(std::move(rep)) {
    if (!rep_.is_square() || !invert(rep_).has_value())
      throw ValidationError("pgl element: representative not invertible");
  }

  const Matrix& representative() const { return rep_; }

  ProjPoint apply(const ProjPoint& p) const { return ProjPoint(rep_ * p.rep()); }

  bool operator==(const PglElement& o) const { return pgl_equal(rep_, o.rep_); }
  bool operator!=(const PglElement& o) const { return !(*this == o); }

 private:
  Matrix rep_;
};

enum class ProjKind { Independent, Simplex, HarmonicChar3, NotHomogeneous };

inline std::string to_string(ProjKind k) {
  switch (k) {
    case ProjKind::Independent: return "independent";
    case ProjKind::Simplex: return "simplex";
    case ProjKind::HarmonicChar3: return "harmonic_char3";
    case ProjKind::NotHomogeneous: return "not_homogeneous";
  }
  return "?";
}

struct ProjClass {
  ProjKind kind;
  std::size_t simplex_m = 0;           // populated for Simplex
  std::optional<Permutation> witness;  // populated for NotHomogeneous
};

/// True iff the points' representatives are linearly independent.
inline bool is_independent(const ProjSet& xs) { return xs.rank() == xs.size(); }

/// m iff the set is an m-simplex: m+1 points, 2 <= m <= dim, not
/// independent, and every m-element subset independent.
inline std::optional<std::size_t> is_simplex(const ProjSet& xs) {
  if (xs.size() < 3) return std::nullopt;
  const std::size_t m = xs.size() - 1;
  if (m < 2 || m > xs.dim()) return std::nullopt;
  if (is_independent(xs)) return std::nullopt;
  const std::vector<Vector> reps = xs.reps();
  for (std::size_t drop = 0; drop < xs.size(); ++drop) {
    std::vector<Vector> subset;
    subset.reserve(m);
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (i != drop) subset.push_back(reps[i]);
    if (span_rank(subset) != m) return std::nullopt;
  }
  return m;
}

/// For an m-simplex P_1,...,P_{m+1}: vectors x_i in P_i (i <= m) with
/// x_1 + ... + x_m in P_{m+1}. Deterministic: the solution of a linear
/// system in the normalized representatives.
inline std::vector<Vector> simplex_normal_form(const ProjSet& xs) {
  const auto m = is_simplex(xs);
  if (!m.has_value()) throw NotSimplexError("simplex_normal_form: not a simplex");
  const std::vector<Vector> reps = xs.reps();
  std::vector<Vector> first(reps.begin(), reps.begin() + *m);
  const auto coeffs = solve(Matrix::from_columns(xs.field(), first), reps[*m]);
  if (!coeffs.has_value()) throw Error("simplex_normal_form: inconsistent system");  // unreachable
  std::vector<Vector> out;
  out.reserve(*m);
  for (std::size_t i = 0; i < *m; ++i) out.push_back((*coeffs)[i] * reps[i]);
  return out;
}

/// Witnesses (x, y) iff the set is {<x>, <y>, <x+y>, <x-y>} for some
/// independent x, y. All 24 ordered assignments of three points to the
/// roles (<x>, <y>, <x+y>) are tried; the fourth point must then carry
/// x-y. Always absent in characteristic 2, where x+y = x-y.
inline std::optional<std::pair<Vector, Vector>> is_harmonic(const ProjSet& xs) {
  if (xs.size() != 4) return std::nullopt;
  const std::vector<Vector> reps = xs.reps();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (std::size_t l = 0; l < 4; ++l) {
        if (l == i || l == j) continue;
        const std::size_t rest = 6 - i - j - l;
        // want x in P_i, y in P_j with x + y = rep_l: solve s a + t b = c
        const auto st = solve(Matrix::from_columns(xs.field(), {reps[i], reps[j]}), reps[l]);
        if (!st.has_value()) continue;
        const Scalar s = (*st)[0], t = (*st)[1];
        if (s.is_zero() || t.is_zero()) continue;
        const Vector x = s * reps[i];
        const Vector y = t * reps[j];
        if (proportional(x - y, reps[rest])) return std::make_pair(x, y);
      }
    }
  return std::nullopt;
}

namespace detail {

// Weighted union-find over basis positions: mu_i = weight(i) * mu_root(i).
class RatioUnionFind {
 public:
  explicit RatioUnionFind(std::size_t n, FieldSpec f)
      : parent_(n), weight_(n, Scalar::one(f)) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  // Impose mu_a = ratio * mu_b. Returns false on contradiction.
  bool merge(std::size_t a, std::size_t b, const Scalar& ratio) {
    auto [ra, wa] = find_pair(a);
    auto [rb, wb] = find_pair(b);
    if (ra == rb) return wa == ratio * wb;
    // attach ra under rb: mu_ra = (ratio * wb / wa) * mu_rb
    parent_[ra] = rb;
    weight_[ra] = ratio * wb / wa;
    return true;
  }

  // mu value with every root set to 1.
  Scalar value(std::size_t i) { return find_pair(i).second; }

 private:
  std::pair<std::size_t, Scalar> find_pair(std::size_t i) {
    if (parent_[i] == i) return {i, Scalar::one(weight_[i].field())};
    auto [r, w] = find_pair(parent_[i]);
    parent_[i] = r;
    weight_[i] = weight_[i] * w;
    return {r, weight_[i]};
  }

  std::vector<std::size_t> parent_;
  std::vector<Scalar> weight_;
};

}  // namespace detail

/// The projective extension of sigma, if one exists: an invertible A with
/// A rep(P_i) proportional to rep(P_{sigma(i)}) for every i.
///
/// A maximal independent subset B of the points (pivot order) is mapped
/// onto its sigma-images scaled by unknowns mu_j. Every non-basis point
/// adds support-matching and ratio constraints on the mu_j, propagated by
/// a weighted union-find; surviving free scalars default to 1. Off the
/// span of the set, the map fixes the standard-basis completion.
inline std::optional<PglElement> extend_permutation_projective(const ProjSet& xs,
                                                               const Permutation& sigma) {
  if (sigma.size() != xs.size())
    throw DimensionError("extend_permutation_projective: permutation size mismatch");
  const FieldSpec f = xs.field();
  const std::vector<Vector> reps = xs.reps();

  const std::vector<std::size_t> basis_idx =
      rref(Matrix::from_columns(f, reps)).pivot_columns;
  const std::size_t m = basis_idx.size();

  std::vector<Vector> domain_basis, image_basis;
  domain_basis.reserve(m);
  image_basis.reserve(m);
  for (std::size_t j : basis_idx) {
    domain_basis.push_back(reps[j]);
    image_basis.push_back(reps[sigma(j)]);
  }
  if (span_rank(image_basis) != m) return std::nullopt;  // images dependent

  const Matrix domain_mat = Matrix::from_columns(f, domain_basis);
  const Matrix image_mat = Matrix::from_columns(f, image_basis);

  detail::RatioUnionFind uf(m, f);
  std::vector<bool> in_basis(xs.size(), false);
  for (std::size_t j : basis_idx) in_basis[j] = true;

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (in_basis[i]) continue;
    const auto c = solve(domain_mat, reps[i]);
    const auto d = solve(image_mat, reps[sigma(i)]);
    if (!c.has_value() || !d.has_value())
      throw Error("extend_permutation_projective: coordinate solve failed");  // unreachable
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m; ++j) {
      const bool cj = !(*c)[j].is_zero(), dj = !(*d)[j].is_zero();
      if (cj != dj) return std::nullopt;  // support mismatch
      if (cj) support.push_back(j);
    }
    for (std::size_t t = 1; t < support.size(); ++t) {
      const std::size_t j = support[t], j0 = support[0];
      const Scalar ratio = ((*d)[j] * (*c)[j0]) / ((*c)[j] * (*d)[j0]);
      if (!uf.merge(j, j0, ratio)) return std::nullopt;  // inconsistent ratios
    }
  }

  std::vector<Vector> domain = domain_basis, image;
  image.reserve(xs.dim());
  for (std::size_t t = 0; t < m; ++t) image.push_back(uf.value(t) * image_basis[t]);
  domain = detail::complete_with_standard_basis(f, xs.dim(), std::move(domain));
  for (std::size_t t = m; t < domain.size(); ++t) image.push_back(domain[t]);

  const auto p_inv = invert(Matrix::from_columns(f, domain));
  if (!p_inv.has_value()) throw Error("completed basis not invertible");  // unreachable
  return PglElement(Matrix::from_columns(f, image) * *p_inv);
}

/// Transposition-generator test, as in the linear case.
inline Extendability is_fully_extendable_projective(const ProjSet& xs) {
  if (xs.size() < 2) throw ValidationError("is_fully_extendable_projective: need >= 2 points");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Permutation t = transposition(xs.size(), 0, i);
    if (!extend_permutation_projective(xs, t).has_value()) return {false, std::move(t)};
  }
  return {true, std::nullopt};
}

/// The classification of fully extendable point sets: independent, an
/// m-simplex, or (in characteristic 3 only) harmonic. Checked in that
/// order; everything else is not homogeneous and carries a witness.
inline ProjClass classify_projective(const ProjSet& xs) {
  if (xs.size() < 2) throw ValidationError("classify_projective: need >= 2 points");
  if (is_independent(xs)) return {ProjKind::Independent, 0, std::nullopt};
  if (auto m = is_simplex(xs); m.has_value()) return {ProjKind::Simplex, *m, std::nullopt};
  if (xs.field().characteristic() == 3 && is_harmonic(xs).has_value())
    return {ProjKind::HarmonicChar3, 0, std::nullopt};
  Extendability e = is_fully_extendable_projective(xs);
  if (e.fully_extendable)
    throw Error("classify_projective: verdict contradicts extendability check");  // library bug
  return {ProjKind::NotHomogeneous, 0, std::move(e.witness)};
}

/// Rescales u so that it maps x to y exactly, given u(x) proportional to y.
/// The result induces the same projective transformation as u.
inline Matrix normalize_lift(const Matrix& u, const Vector& x, const Vector& y) {
  if (x.is_zero() || y.is_zero()) throw ValidationError("normalize_lift: zero vector");
  const Vector ux = u * x;
  std::size_t t = y.size();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero()) {
      t = i;
      break;
    }
  const Scalar a = ux[t] / y[t];
  if (a.is_zero() || !(ux == a * y))
    throw NotCollinearError("normalize_lift: u(x) is not proportional to y");
  return a.inverse() * u;
}

/// The unique projective map sending the i-th point of one n-simplex to
/// the i-th point of another, built from both normal forms.
inline PglElement unique_simplex_map(const ProjSet& src, const ProjSet& dst) {
  const auto ms = is_simplex(src), md = is_simplex(dst);
  if (!ms.has_value() || *ms != src.dim())
    throw NotSimplexError("unique_simplex_map: source is not an n-simplex");
  if (!md.has_value() || *md != dst.dim())
    throw NotSimplexError("unique_simplex_map: destination is not an n-simplex");
  if (src.field() != dst.field()) throw FieldMismatchError("unique_simplex_map: fields differ");
  if (src.size() != dst.size()) throw DimensionError("unique_simplex_map: sizes differ");
  const Matrix x = Matrix::from_columns(src.field(), simplex_normal_form(src));
  const Matrix y = Matrix::from_columns(dst.field(), simplex_normal_form(dst));
  const auto x_inv = invert(x);
  if (!x_inv.has_value()) throw Error("unique_simplex_map: degenerate normal form");  // unreachable
  return PglElement(y * *x_inv);
}

}  // namespace permext
