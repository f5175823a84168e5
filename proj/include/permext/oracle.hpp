#pragma once

// Brute-force ground truth over small finite fields: enumerate every
// invertible matrix, decide extendability by exhaustion, and sweep all
// small subsets to certify the two classification theorems against the
// constructive algorithms.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/linear_ext.hpp"
#include "permext/permutation.hpp"
#include "permext/projective.hpp"

namespace permext {

struct SearchBudget {
  std::uint64_t max_group_order = 100'000'000;
  unsigned workers = 1;
};

/// |GL(n, p)| = (p^n - 1)(p^n - p)...(p^n - p^{n-1}), saturating at 2^63.
inline std::uint64_t gl_order(std::size_t n, std::int64_t p) {
  const unsigned __int128 cap = (unsigned __int128)1 << 63;
  unsigned __int128 pn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pn *= (unsigned __int128)p;
    if (pn >= cap) return std::uint64_t(1) << 63;
  }
  unsigned __int128 order = 1, pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= (unsigned __int128)p;
    if (order >= cap) return std::uint64_t(1) << 63;
  }
  return static_cast<std::uint64_t>(order);
}

/// Enumerates GL(n, p) exactly once per element, rows generated in
/// lexicographic order with each new row outside the span of the previous
/// ones. Refuses to start when the group order exceeds the budget.
class GlEnumerator {
 public:
  GlEnumerator(std::size_t n, std::int64_t p, const SearchBudget& budget = {})
      : n_(n), p_(FieldSpec::prime_field(p).prime()), order_(gl_order(n, p)) {
    if (order_ > budget.max_group_order)
      throw SizeLimitError("GL(" + std::to_string(n) + "," + std::to_string(p) +
                           ") order " + std::to_string(order_) + " exceeds budget " +
                           std::to_string(budget.max_group_order));
    pn_ = 1;
    for (std::size_t i = 0; i < n_; ++i) pn_ *= p_;
  }

  std::uint64_t order() const { return order_; }

  /// Next invertible matrix, or nullopt when exhausted.
  std::optional<Matrix> next() {
    if (!advance()) return std::nullopt;
    const FieldSpec f = FieldSpec::prime_field(p_);
    Matrix m(f, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto row = decode(rows_[i]);
      for (std::size_t j = 0; j < n_; ++j) m.set(i, j, Scalar(f, long(row[j])));
    }
    return m;
  }

 private:
  std::vector<std::int64_t> decode(std::int64_t code) const {
    std::vector<std::int64_t> row(n_);
    for (std::size_t j = n_; j-- > 0;) {
      row[j] = code % p_;
      code /= p_;
    }
    return row;
  }

  // Reduce `row` by the echelon rows of `basis`; returns true if nonzero
  // remains (i.e. row independent of basis) and appends the reduced row.
  static bool try_extend(std::vector<std::vector<std::int64_t>>& basis,
                         std::vector<std::int64_t> row, std::int64_t p) {
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (lead < b.size() && b[lead] == 0) ++lead;
      if (lead < b.size() && row[lead] != 0) {
        const std::int64_t factor = row[lead];  // b is normalized to lead 1
        for (std::size_t j = lead; j < b.size(); ++j)
          row[j] = ((row[j] - factor * b[j]) % p + p) % p;
      }
    }
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) return false;
    const std::int64_t inv = detail::mod_inverse(row[lead], p);
    for (std::size_t j = lead; j < row.size(); ++j) row[j] = (row[j] * inv) % p;
    basis.push_back(std::move(row));
    return true;
  }

  bool row_valid(std::size_t level, std::int64_t code) {
    auto basis = stack_[level];
    return try_extend(basis, decode(code), p_);
  }

  // Advances to the next valid row assignment (depth-first, lexicographic).
  bool advance() {
    if (!started_) {
      started_ = true;
      rows_.assign(n_, 0);
      stack_.assign(n_ + 1, {});
      std::size_t level = 0;
      while (level < n_) {
        if (!descend(level, 1)) return false;  // empty group cannot happen
        ++level;
      }
      return true;
    }
    std::size_t level = n_;
    while (level > 0) {
      --level;
      if (descend(level, rows_[level] + 1)) {
        for (std::size_t l = level + 1; l < n_; ++l)
          if (!descend(l, 1)) return false;  // lower levels always refillable
        return true;
      }
    }
    return false;
  }

  // Finds the smallest valid row code >= from at `level`; updates state.
  bool descend(std::size_t level, std::int64_t from) {
    for (std::int64_t code = from; code < pn_; ++code) {
      auto basis = stack_[level];
      if (try_extend(basis, decode(code), p_)) {
        rows_[level] = code;
        stack_[level + 1] = std::move(basis);
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::int64_t p_;
  std::uint64_t order_;
  std::int64_t pn_ = 0;
  bool started_ = false;
  std::vector<std::int64_t> rows_;
  std::vector<std::vector<std::vector<std::int64_t>>> stack_;
};

/// All nonzero vectors of GF(p)^n in lexicographic coordinate order.
inline std::vector<Vector> nonzero_vectors(FieldSpec f, std::size_t n) {
  if (!f.is_prime_field()) throw UnsupportedFieldError("nonzero_vectors: finite fields only");
  const std::int64_t p = f.prime();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vector> out;
  out.reserve(total - 1);
  for (std::int64_t code = 1; code < total; ++code) {
    std::vector<Scalar> coords(n, Scalar::zero(f));
    std::int64_t c = code;
    for (std::size_t j = n; j-- > 0;) {
      coords[j] = Scalar(f, long(c % p));
      c /= p;
    }
    out.emplace_back(f, std::move(coords));
  }
  return out;
}

/// All points of the projective space of GF(p)^n: normalized
/// representatives in lexicographic coordinate order.
inline std::vector<ProjPoint> projective_points(FieldSpec f, std::size_t n) {
  std::vector<ProjPoint> out;
  for (const Vector& v : nonzero_vectors(f, n)) {
    ProjPoint p(v);
    if (p.rep() == v) out.push_back(std::move(p));  // already normalized: keep once
  }
  return out;
}

/// Exhaustive decision of linear extendability over a finite field: scans
/// GL until a matrix extending sigma is found. Finite fields only.
inline std::optional<Matrix> oracle_extend_linear(const VectorSet& xs, const Permutation& sigma,
                                                  const SearchBudget& budget = {}) {
  if (!xs.field().is_prime_field())
    throw UnsupportedFieldError("oracle_extend_linear: finite fields only");
  if (sigma.size() != xs.size()) throw DimensionError("oracle_extend_linear: size mismatch");
  GlEnumerator gl(xs.dim(), xs.field().prime(), budget);
  while (auto u = gl.next()) {
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i)
      if (*u * xs[i] != xs[sigma(i)]) ok = false;
    if (ok) return u;
  }
  return std::nullopt;
}

/// Projective variant: acceptance up to proportionality.
inline std::optional<Matrix> oracle_extend_projective(const ProjSet& xs, const Permutation& sigma,
                                                      const SearchBudget& budget = {}) {
  if (!xs.field().is_prime_field())
    throw UnsupportedFieldError("oracle_extend_projective: finite fields only");
  if (sigma.size() != xs.size()) throw DimensionError("oracle_extend_projective: size mismatch");
  GlEnumerator gl(xs.dim(), xs.field().prime(), budget);
  while (auto u = gl.next()) {
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i)
      if (!proportional(xs[sigma(i)].rep(), *u * xs[i].rep())) ok = false;
    if (ok) return u;
  }
  return std::nullopt;
}

/// Outcome of one exhaustive certification sweep. `discrepancies` must be
/// empty; any entry is by definition a library bug.
struct SweepReport {
  int theorem = 0;
  std::size_t n = 0;
  std::int64_t p = 0;
  std::size_t max_size = 0;
  std::uint64_t group_order = 0;
  std::size_t universe_size = 0;
  std::size_t subsets_checked = 0;
  std::size_t pairs_checked = 0;
  std::map<std::string, std::size_t> verdict_counts;
  std::vector<std::string> discrepancies;
  double elapsed_seconds = 0.0;  // informational; excluded from canonical output
};

namespace detail {

inline std::vector<std::vector<std::uint32_t>> size_bounded_subsets(std::size_t universe,
                                                                    std::size_t max_size) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t s = 2; s <= max_size && s <= universe; ++s) {
    std::vector<std::uint32_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = std::uint32_t(i);
    while (true) {
      out.push_back(idx);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == universe - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

inline std::string subset_string(const std::vector<std::uint32_t>& subset) {
  std::string s = "[";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "]";
}

// Is there a group element whose index action realizes the transposition
// (0 t) on the subset, fixing the other members?
inline bool action_realizes_transposition(const std::vector<std::vector<std::uint32_t>>& actions,
                                          const std::vector<std::uint32_t>& subset,
                                          std::size_t t) {
  for (const auto& act : actions) {
    bool ok = act[subset[0]] == subset[t] && act[subset[t]] == subset[0];
    for (std::size_t j = 1; j < subset.size() && ok; ++j)
      if (j != t && act[subset[j]] != subset[j]) ok = false;
    if (ok) return true;
  }
  return false;
}

struct SweepSlice {
  std::map<std::string, std::size_t> verdict_counts;
  std::vector<std::string> discrepancies;
  std::size_t pairs_checked = 0;
};

// Runs `body` over contiguous slices of the subset list; slice results are
// merged in slice order, so the report is independent of worker count.
template <typename Body>
inline SweepSlice run_sliced(std::size_t total, unsigned workers, const Body& body) {
  if (workers < 1) workers = 1;
  std::vector<SweepSlice> slices(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(total, w * chunk);
    const std::size_t end = std::min(total, (w + 1) * chunk);
    threads.emplace_back([&, w, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i, slices[w]);
    });
  }
  for (auto& t : threads) t.join();
  SweepSlice merged;
  for (const auto& s : slices) {
    for (const auto& [k, v] : s.verdict_counts) merged.verdict_counts[k] += v;
    merged.discrepancies.insert(merged.discrepancies.end(), s.discrepancies.begin(),
                                s.discrepancies.end());
    merged.pairs_checked += s.pairs_checked;
  }
  return merged;
}

}  // namespace detail

/// Sweeps every subset of nonzero vectors of GF(p)^n with 2 <= size <=
/// max_size and asserts that the constructive classification and per-
/// transposition extension decisions agree with GL exhaustion.
inline SweepReport exhaustive_theorem1_check(std::size_t n, std::int64_t p,
                                             std::size_t max_size,
                                             const SearchBudget& budget = {}) {
  if (max_size > 6) throw ValidationError("exhaustive_theorem1_check: max_size must be <= 6");
  const auto start = std::chrono::steady_clock::now();
  const FieldSpec f = FieldSpec::prime_field(p);
  SweepReport report;
  report.theorem = 1;
  report.n = n;
  report.p = p;
  report.max_size = max_size;
  report.group_order = gl_order(n, p);

  const std::vector<Vector> universe = nonzero_vectors(f, n);
  report.universe_size = universe.size();

  // One pass over GL: each element becomes its permutation of vector indices.
  std::map<Vector, std::uint32_t, decltype([](const Vector& a, const Vector& b) {
             return Vector::compare(a, b) < 0;
           })>
      index_of;
  for (std::uint32_t i = 0; i < universe.size(); ++i) index_of.emplace(universe[i], i);
  std::vector<std::vector<std::uint32_t>> actions;
  actions.reserve(report.group_order);
  GlEnumerator gl(n, p, budget);
  while (auto u = gl.next()) {
    std::vector<std::uint32_t> act(universe.size());
    for (std::uint32_t i = 0; i < universe.size(); ++i) act[i] = index_of.at(*u * universe[i]);
    actions.push_back(std::move(act));
  }

  const auto subsets = detail::size_bounded_subsets(universe.size(), max_size);
  report.subsets_checked = subsets.size();

  auto slice = detail::run_sliced(
      subsets.size(), budget.workers, [&](std::size_t si, detail::SweepSlice& out) {
        const auto& subset = subsets[si];
        std::vector<Vector> vs;
        vs.reserve(subset.size());
        for (std::uint32_t i : subset) vs.push_back(universe[i]);
        const VectorSet xs(f, n, vs);
        const LinearClass cls = classify_linear(xs);
        out.verdict_counts[to_string(cls.kind)]++;

        bool oracle_all = true;
        for (std::size_t t = 1; t < subset.size(); ++t) {
          out.pairs_checked++;
          const Permutation sigma = transposition(subset.size(), 0, t);
          const bool oracle_has = detail::action_realizes_transposition(actions, subset, t);
          oracle_all = oracle_all && oracle_has;
          const auto constructed = extend_permutation_linear(xs, sigma);
          if (constructed.has_value() != oracle_has)
            out.discrepancies.push_back("subset=" + detail::subset_string(subset) + " sigma=" +
                                        sigma.to_string() + ": constructive=" +
                                        (constructed ? "present" : "absent") + " oracle=" +
                                        (oracle_has ? "present" : "absent"));
          if (constructed.has_value()) {
            for (std::size_t i = 0; i < xs.size(); ++i)
              if (*constructed * xs[i] != xs[sigma(i)]) {
                out.discrepancies.push_back("subset=" + detail::subset_string(subset) +
                                            " sigma=" + sigma.to_string() +
                                            ": unsound constructive extension");
                break;
              }
          }
        }
        const bool classified_homogeneous = cls.kind != LinearKind::NotHomogeneous;
        if (classified_homogeneous != oracle_all)
          out.discrepancies.push_back("subset=" + detail::subset_string(subset) +
                                      ": classify=" + to_string(cls.kind) +
                                      " oracle_fully_extendable=" +
                                      (oracle_all ? "true" : "false"));
      });

  report.verdict_counts = std::move(slice.verdict_counts);
  report.discrepancies = std::move(slice.discrepancies);
  report.pairs_checked = slice.pairs_checked;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Projective analogue over the points of P(GF(p)^n).
inline SweepReport exhaustive_theorem2_check(std::size_t n, std::int64_t p,
                                             std::size_t max_size,
                                             const SearchBudget& budget = {}) {
  if (max_size > 6) throw ValidationError("exhaustive_theorem2_check: max_size must be <= 6");
  const auto start = std::chrono::steady_clock::now();
  const FieldSpec f = FieldSpec::prime_field(p);
  SweepReport report;
  report.theorem = 2;
  report.n = n;
  report.p = p;
  report.max_size = max_size;
  report.group_order = gl_order(n, p);

  const std::vector<ProjPoint> universe = projective_points(f, n);
  report.universe_size = universe.size();

  std::map<Vector, std::uint32_t, decltype([](const Vector& a, const Vector& b) {
             return Vector::compare(a, b) < 0;
           })>
      index_of;
  for (std::uint32_t i = 0; i < universe.size(); ++i) index_of.emplace(universe[i].rep(), i);
  std::vector<std::vector<std::uint32_t>> actions;
  actions.reserve(report.group_order);
  GlEnumerator gl(n, p, budget);
  while (auto u = gl.next()) {
    std::vector<std::uint32_t> act(universe.size());
    for (std::uint32_t i = 0; i < universe.size(); ++i)
      act[i] = index_of.at(ProjPoint(*u * universe[i].rep()).rep());
    actions.push_back(std::move(act));
  }

  const auto subsets = detail::size_bounded_subsets(universe.size(), max_size);
  report.subsets_checked = subsets.size();

  auto slice = detail::run_sliced(
      subsets.size(), budget.workers, [&](std::size_t si, detail::SweepSlice& out) {
        const auto& subset = subsets[si];
        std::vector<ProjPoint> pts;
        pts.reserve(subset.size());
        for (std::uint32_t i : subset) pts.push_back(universe[i]);
        const ProjSet xs(f, n, pts);
        const ProjClass cls = classify_projective(xs);
        std::string verdict = to_string(cls.kind);
        if (cls.kind == ProjKind::Simplex) verdict += "(" + std::to_string(cls.simplex_m) + ")";
        out.verdict_counts[verdict]++;

        bool oracle_all = true;
        for (std::size_t t = 1; t < subset.size(); ++t) {
          out.pairs_checked++;
          const Permutation sigma = transposition(subset.size(), 0, t);
          const bool oracle_has = detail::action_realizes_transposition(actions, subset, t);
          oracle_all = oracle_all && oracle_has;
          const auto constructed = extend_permutation_projective(xs, sigma);
          if (constructed.has_value() != oracle_has)
            out.discrepancies.push_back("subset=" + detail::subset_string(subset) + " sigma=" +
                                        sigma.to_string() + ": constructive=" +
                                        (constructed ? "present" : "absent") + " oracle=" +
                                        (oracle_has ? "present" : "absent"));
          if (constructed.has_value()) {
            const Matrix& a = constructed->representative();
            for (std::size_t i = 0; i < xs.size(); ++i)
              if (!proportional(xs[sigma(i)].rep(), a * xs[i].rep())) {
                out.discrepancies.push_back("subset=" + detail::subset_string(subset) +
                                            " sigma=" + sigma.to_string() +
                                            ": unsound constructive extension");
                break;
              }
          }
        }
        const bool classified_homogeneous = cls.kind != ProjKind::NotHomogeneous;
        if (classified_homogeneous != oracle_all)
          out.discrepancies.push_back("subset=" + detail::subset_string(subset) +
                                      ": classify=" + verdict + " oracle_fully_extendable=" +
                                      (oracle_all ? "true" : "false"));
      });

  report.verdict_counts = std::move(slice.verdict_counts);
  report.discrepancies = std::move(slice.discrepancies);
  report.pairs_checked = slice.pairs_checked;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace permext
