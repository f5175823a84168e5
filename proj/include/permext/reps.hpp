#pragma once

// Symmetric groups acting by matrices: the negative-sum representation,
// presentation checks, orbits, faithfulness, invariant-subspace scans, and
// the verification reports tying a matrix group back to the extension
// group of its orbit, linearly and projectively.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/linear_ext.hpp"
#include "permext/oracle.hpp"
#include "permext/permutation.hpp"
#include "permext/projective.hpp"

namespace permext {

/// A matrix group presented by invertible generators over a common field.
class MatrixGroupGens {
 public:
  MatrixGroupGens(FieldSpec field, std::size_t dim, std::vector<Matrix> generators)
      : field_(field), dim_(dim), gens_(std::move(generators)) {
    if (gens_.empty()) throw ValidationError("matrix group: no generators");
    for (const Matrix& g : gens_) {
      if (g.field() != field_) throw FieldMismatchError("matrix group: mixed fields");
      if (g.rows() != dim_ || g.cols() != dim_)
        throw DimensionError("matrix group: generator shape mismatch");
      if (!invert(g).has_value())
        throw ValidationError("matrix group: singular generator");
    }
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return gens_.size(); }
  const Matrix& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Matrix>& generators() const { return gens_; }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Matrix> gens_;
};

/// Generators of a copy of S_{n+1} in dimension n: the adjacent basis
/// swaps, plus the map fixing e_1..e_{n-1} and sending e_n to
/// -(e_1 + ... + e_n). Each generator permutes {e_1,...,e_n, -sum}.
inline MatrixGroupGens standard_negsum_rep(std::size_t n, FieldSpec field) {
  if (n < 2) throw ValidationError("standard_negsum_rep: need n >= 2");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix s = Matrix::identity(field, n);
    s.set(i, i, Scalar::zero(field));
    s.set(i + 1, i + 1, Scalar::zero(field));
    s.set(i, i + 1, Scalar::one(field));
    s.set(i + 1, i, Scalar::one(field));
    gens.push_back(std::move(s));
  }
  Matrix v = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, n - 1, Scalar(field, -1));
  gens.push_back(std::move(v));
  return MatrixGroupGens(field, n, std::move(gens));
}

namespace detail {

inline bool is_identity_like(const Matrix& m, bool projective) {
  return projective ? pgl_equal(m, Matrix::identity(m.field(), m.rows()))
                    : m == Matrix::identity(m.field(), m.rows());
}

// Scales so the first nonzero entry (row-major) is 1: a canonical
// representative of the matrix's projective class.
inline Matrix pgl_canonical(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return m.at(i, j).inverse() * m;
  throw ValidationError("pgl_canonical: zero matrix");
}

}  // namespace detail

/// True iff the generators satisfy the symmetric-group presentation:
/// s_i^2 = 1, (s_i s_{i+1})^3 = 1, and (s_i s_j)^2 = 1 for |i-j| >= 2.
/// With `projective`, identities are read up to scalar factors.
inline bool coxeter_check(const MatrixGroupGens& gens, bool projective = false) {
  const std::size_t r = gens.size();
  for (std::size_t i = 0; i < r; ++i)
    if (!detail::is_identity_like(gens[i] * gens[i], projective)) return false;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const Matrix braid = gens[i] * gens[i + 1];
    if (!detail::is_identity_like(braid * braid * braid, projective)) return false;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 2; j < r; ++j) {
      const Matrix commuting = gens[i] * gens[j];
      if (!detail::is_identity_like(commuting * commuting, projective)) return false;
    }
  return true;
}

namespace detail {

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const {
    return Vector::compare(a, b) < 0;
  }
};

}  // namespace detail

/// Closure of the seed under the generators, in breadth-first discovery
/// order. For a finite generated group this is the group orbit.
inline std::vector<Vector> orbit(const MatrixGroupGens& gens, const Vector& seed,
                                 std::size_t cap = 10000) {
  if (seed.is_zero()) throw ValidationError("orbit: zero seed");
  std::vector<Vector> order{seed};
  std::set<Vector, detail::VectorLess> seen{seed};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Matrix& g : gens.generators()) {
      Vector next = g * order[head];
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw SizeLimitError("orbit: size exceeds cap " + std::to_string(cap));
      }
    }
  }
  return order;
}

/// Projective orbit: closure on normalized points.
inline std::vector<ProjPoint> orbit(const MatrixGroupGens& gens, const ProjPoint& seed,
                                    std::size_t cap = 10000) {
  std::vector<ProjPoint> order{seed};
  std::set<Vector, detail::VectorLess> seen{seed.rep()};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Matrix& g : gens.generators()) {
      ProjPoint next(g * order[head].rep());
      if (seen.insert(next.rep()).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw SizeLimitError("orbit: size exceeds cap " + std::to_string(cap));
      }
    }
  }
  return order;
}

/// The full generated matrix group, by closure under right multiplication
/// (in a finite group this reaches inverses), discovery order.
inline std::vector<Matrix> materialize_group(const MatrixGroupGens& gens,
                                             std::size_t cap = 40320) {
  std::vector<Matrix> order{Matrix::identity(gens.field(), gens.dim())};
  std::set<Matrix, MatrixLess> seen{order[0]};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Matrix& g : gens.generators()) {
      Matrix next = order[head] * g;
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw SizeLimitError("materialize_group: size exceeds cap " + std::to_string(cap));
      }
    }
  }
  return order;
}

/// The generated projective group, one canonical representative per class.
inline std::vector<Matrix> materialize_pgl_group(const MatrixGroupGens& gens,
                                                 std::size_t cap = 40320) {
  std::vector<Matrix> order{Matrix::identity(gens.field(), gens.dim())};
  std::set<Matrix, MatrixLess> seen{order[0]};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Matrix& g : gens.generators()) {
      Matrix next = detail::pgl_canonical(order[head] * g);
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw SizeLimitError("materialize_pgl_group: size exceeds cap " +
                               std::to_string(cap));
      }
    }
  }
  return order;
}

/// True iff only the identity of the generated group fixes every listed
/// vector.
inline bool is_faithful_on(const MatrixGroupGens& gens, const std::vector<Vector>& points,
                           std::size_t group_cap = 40320) {
  for (const Matrix& g : materialize_group(gens, group_cap)) {
    if (g == Matrix::identity(gens.field(), gens.dim())) continue;
    bool fixes_all = true;
    for (const Vector& x : points)
      if (g * x != x) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return false;
  }
  return true;
}

/// Projective variant: only the identity class may fix every point.
inline bool is_faithful_on(const MatrixGroupGens& gens, const std::vector<ProjPoint>& points,
                           std::size_t group_cap = 40320) {
  const Matrix id = Matrix::identity(gens.field(), gens.dim());
  for (const Matrix& g : materialize_pgl_group(gens, group_cap)) {
    if (pgl_equal(g, id)) continue;
    bool fixes_all = true;
    for (const ProjPoint& x : points)
      if (!proportional(x.rep(), g * x.rep())) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return false;
  }
  return true;
}

struct InvariantScanResult {
  std::optional<std::vector<Vector>> subspace;  // basis of a proper invariant subspace
  /// True when a negative answer is conclusive. Over a finite field the
  /// scan enumerates every line, so it always is; over Q a negative is
  /// only heuristic. A positive answer is sound in either mode.
  bool complete = false;
};

namespace detail {

// Smallest invariant subspace containing the seed: repeatedly apply the
// generators and close under span.
inline std::vector<Vector> spin(const MatrixGroupGens& gens, const Vector& seed) {
  std::vector<Vector> basis{seed};
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (const Matrix& g : gens.generators()) {
      Vector t = g * basis[head];
      std::vector<Vector> extended = basis;
      extended.push_back(t);
      if (span_rank(extended) > basis.size()) basis.push_back(std::move(t));
      if (basis.size() == gens.dim()) return basis;  // already everything
    }
  }
  return basis;
}

}  // namespace detail

/// Searches for a proper subspace mapped into itself by every generator.
/// Over a finite field every 1-dimensional subspace is spun, which is
/// exhaustive: any proper invariant subspace contains a line, and the spin
/// closure of that line stays inside it. Over Q the scan spins the
/// standard basis, their pairwise differences, and any caller seeds.
inline InvariantScanResult invariant_subspace_scan(const MatrixGroupGens& gens,
                                                   const std::vector<Vector>& extra_seeds = {}) {
  const std::size_t n = gens.dim();
  std::vector<Vector> seeds;
  if (gens.field().is_prime_field()) {
    for (const ProjPoint& p : projective_points(gens.field(), n)) seeds.push_back(p.rep());
  } else {
    for (std::size_t i = 0; i < n; ++i) seeds.push_back(Vector::unit(gens.field(), n, i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        seeds.push_back(Vector::unit(gens.field(), n, i) - Vector::unit(gens.field(), n, j));
    for (const Vector& s : extra_seeds)
      if (!s.is_zero()) seeds.push_back(s);
  }
  for (const Vector& seed : seeds) {
    std::vector<Vector> w = detail::spin(gens, seed);
    if (w.size() < n) return {std::move(w), true};
  }
  return {std::nullopt, gens.field().is_prime_field()};
}

/// Hypothesis and conclusion record for the symmetric-group verification
/// commands. Conclusion fields are populated only when every hypothesis
/// check passed.
struct CorollaryReport {
  std::size_t degree = 0;  // the claimed symmetric degree m
  bool generator_count_ok = false;
  bool relations_ok = false;
  std::uint64_t group_order = 0;
  bool group_order_ok = false;
  std::size_t orbit_size = 0;
  bool orbit_ok = false;
  bool faithful = false;
  bool no_proper_invariant_subspace = false;
  bool scan_complete = false;
  std::optional<std::vector<Vector>> invariant_subspace;
  bool hypotheses_ok = false;
  std::optional<std::string> classification;
  std::optional<bool> classification_ok;
  std::optional<bool> group_matches_extensions;
  bool conclusions_ok = false;
};

struct CorollaryOptions {
  std::size_t group_cap = 40320;
  std::size_t orbit_cap = 10000;
};

namespace detail {

inline std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Verifies that generators presenting S_m, with a faithful m-point orbit
/// and no proper invariant subspace, act on an orbit that is a basis of
/// the space or a basis plus its negative sum, and coincide with the
/// orbit's extension group elementwise.
inline CorollaryReport verify_corollary1(const MatrixGroupGens& gens, std::size_t m,
                                         const Vector& seed,
                                         const CorollaryOptions& opts = {}) {
  CorollaryReport r;
  r.degree = m;
  r.generator_count_ok = (m >= 2 && gens.size() == m - 1);
  r.relations_ok = coxeter_check(gens, false);

  const std::vector<Matrix> group = materialize_group(gens, opts.group_cap);
  r.group_order = group.size();
  r.group_order_ok = (r.group_order == detail::factorial(m));

  const std::vector<Vector> orb = orbit(gens, seed, opts.orbit_cap);
  r.orbit_size = orb.size();
  r.orbit_ok = (r.orbit_size == m);

  r.faithful = is_faithful_on(gens, orb, opts.group_cap);

  const InvariantScanResult scan = invariant_subspace_scan(gens);
  r.no_proper_invariant_subspace = !scan.subspace.has_value();
  r.scan_complete = scan.complete;
  r.invariant_subspace = scan.subspace;

  r.hypotheses_ok = r.generator_count_ok && r.relations_ok && r.group_order_ok && r.orbit_ok &&
                    r.faithful && r.no_proper_invariant_subspace;
  if (!r.hypotheses_ok) return r;

  const VectorSet xs(gens.field(), gens.dim(), orb);
  const LinearClass cls = classify_linear(xs);
  r.classification = to_string(cls.kind);
  r.classification_ok =
      (cls.kind == LinearKind::Independent && xs.size() == gens.dim()) ||
      (cls.kind == LinearKind::BasisPlusNegativeSum && cls.rank == gens.dim());

  bool matches = *r.classification_ok;
  if (matches) {
    for (const Matrix& g : group) {
      std::vector<std::size_t> images;
      for (std::size_t i = 0; i < xs.size() && matches; ++i) {
        bool found = false;
        const Vector image = g * xs[i];
        for (std::size_t j = 0; j < xs.size(); ++j)
          if (xs[j] == image) {
            images.push_back(j);
            found = true;
            break;
          }
        if (!found) matches = false;
      }
      if (!matches) break;
      // g extends the permutation i -> index of g(x_i)
      if (g != unique_linear_extension(xs, Permutation(images))) {
        matches = false;
        break;
      }
    }
  }
  r.group_matches_extensions = matches;
  r.conclusions_ok = *r.classification_ok && matches;
  return r;
}

/// Projective analogue: presentation, order, orbit, and faithfulness are
/// read in PGL; the orbit must be a maximal independent set, an n-simplex,
/// or (characteristic 3) harmonic; and when it is not independent the
/// group must equal the set of unique permutation extensions.
inline CorollaryReport verify_corollary2(const MatrixGroupGens& gens, std::size_t m,
                                         const ProjPoint& seed,
                                         const CorollaryOptions& opts = {}) {
  CorollaryReport r;
  r.degree = m;
  r.generator_count_ok = (m >= 2 && gens.size() == m - 1);
  r.relations_ok = coxeter_check(gens, true);

  const std::vector<Matrix> group = materialize_pgl_group(gens, opts.group_cap);
  r.group_order = group.size();
  r.group_order_ok = (r.group_order == detail::factorial(m));

  const std::vector<ProjPoint> orb = orbit(gens, seed, opts.orbit_cap);
  r.orbit_size = orb.size();
  r.orbit_ok = (r.orbit_size == m);

  r.faithful = is_faithful_on(gens, orb, opts.group_cap);

  const InvariantScanResult scan = invariant_subspace_scan(gens);
  r.no_proper_invariant_subspace = !scan.subspace.has_value();
  r.scan_complete = scan.complete;
  r.invariant_subspace = scan.subspace;

  r.hypotheses_ok = r.generator_count_ok && r.relations_ok && r.group_order_ok && r.orbit_ok &&
                    r.faithful && r.no_proper_invariant_subspace;
  if (!r.hypotheses_ok) return r;

  const ProjSet xs(gens.field(), gens.dim(), orb);
  const ProjClass cls = classify_projective(xs);
  std::string verdict = to_string(cls.kind);
  if (cls.kind == ProjKind::Simplex) verdict += "(" + std::to_string(cls.simplex_m) + ")";
  r.classification = verdict;
  r.classification_ok =
      (cls.kind == ProjKind::Independent && xs.size() == gens.dim()) ||
      (cls.kind == ProjKind::Simplex && cls.simplex_m == gens.dim()) ||
      cls.kind == ProjKind::HarmonicChar3;

  if (cls.kind == ProjKind::Independent) {
    r.conclusions_ok = *r.classification_ok;
    return r;
  }

  // G = G(X): every unique extension lies in the group, and the orders agree.
  bool matches = *r.classification_ok && group.size() == detail::factorial(xs.size());
  if (matches) {
    for (const Permutation& sigma : all_permutations(xs.size())) {
      std::optional<PglElement> extension =
          cls.kind == ProjKind::Simplex
              ? std::optional<PglElement>(unique_simplex_map(xs, xs.permuted(sigma)))
              : extend_permutation_projective(xs, sigma);
      if (!extension.has_value()) {
        matches = false;
        break;
      }
      const Matrix& ext = extension->representative();
      bool in_group = false;
      for (const Matrix& g : group)
        if (pgl_equal(g, ext)) {
          in_group = true;
          break;
        }
      if (!in_group) {
        matches = false;
        break;
      }
    }
  }
  r.group_matches_extensions = matches;
  r.conclusions_ok = *r.classification_ok && matches;
  return r;
}

/// For a spanning basis-plus-negative-sum set X, the projective classes of
/// X's extension group coincide with the unique extensions of every
/// permutation of the induced n-simplex.
inline bool projectivized_group_equality(const VectorSet& xs, std::size_t perm_cap = 8) {
  const LinearClass cls = classify_linear(xs);
  if (cls.kind != LinearKind::BasisPlusNegativeSum || !xs.spans_ambient())
    throw ValidationError(
        "projectivized_group_equality: set must be a spanning basis plus negative sum");

  std::vector<ProjPoint> pts;
  pts.reserve(xs.size());
  for (const Vector& v : xs.vectors()) pts.emplace_back(v);
  const ProjSet proj(xs.field(), xs.dim(), std::move(pts));

  std::vector<Matrix> lhs;
  for (const Matrix& u : extension_group(xs, perm_cap)) lhs.push_back(u);
  std::vector<Matrix> rhs;
  for (const Permutation& sigma : all_permutations(proj.size(), perm_cap))
    rhs.push_back(unique_simplex_map(proj, proj.permuted(sigma)).representative());

  auto contains_class = [](const std::vector<Matrix>& set, const Matrix& m) {
    for (const Matrix& g : set)
      if (pgl_equal(g, m)) return true;
    return false;
  };
  for (const Matrix& u : lhs)
    if (!contains_class(rhs, u)) return false;
  for (const Matrix& u : rhs)
    if (!contains_class(lhs, u)) return false;
  return true;
}

}  // namespace permext
