#pragma once

// Exact scalar arithmetic over Q (arbitrary precision via GMP) and over
// prime fields GF(p), 2 <= p < 2^31. Values are kept in canonical form at
// all times (reduced fraction with positive denominator, least residue),
// so equality is structural.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "permext/error.hpp"

namespace permext {

namespace detail {

inline bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Least nonnegative residue of x mod p.
inline std::int64_t mod_norm(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a must be a unit.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error("mod_inverse: not a unit mod " + std::to_string(p));
  return mod_norm(t, p);
}

}  // namespace detail

/// The scalar domain: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }

  static FieldSpec prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
      throw ValidationError("prime_field: modulus out of range: " + std::to_string(p));
    if (!detail::is_small_prime(p))
      throw ValidationError("prime_field: modulus is composite: " + std::to_string(p));
    return FieldSpec(p);
  }

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// 0 for Q, p for GF(p).
  std::int64_t characteristic() const { return p_; }

  std::int64_t prime() const {
    if (p_ == 0) throw Error("prime(): field is Q");
    return p_;
  }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  /// "Q" or "GF(p)".
  std::string to_string() const {
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
  }

  static FieldSpec parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() > 4 && text.compare(0, 3, "GF(") == 0 && text.back() == ')') {
      const std::string digits = text.substr(3, text.size() - 4);
      if (digits.empty() || digits.size() > 10) throw ParseError("bad field spec: " + text);
      for (char c : digits)
        if (c < '0' || c > '9') throw ParseError("bad field spec: " + text);
      return prime_field(std::stoll(digits));
    }
    throw ParseError("bad field spec: " + text);
  }

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_;  // 0 = rationals
};

/// One exact field element, tagged with its FieldSpec.
class Scalar {
 public:
  Scalar(FieldSpec field, long value) : field_(field) {
    if (field_.is_rationals())
      v_ = mpq_class(value);
    else
      v_ = detail::mod_norm(value, field_.prime());
  }

  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  /// Rational from an mpq value (canonicalized).
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    Scalar s(FieldSpec::rationals(), 0);
    s.v_ = std::move(q);
    return s;
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    return field_.is_rationals() ? sgn(rat()) == 0 : res() == 0;
  }
  bool is_one() const {
    return field_.is_rationals() ? rat() == 1 : res() == 1;
  }

  Scalar operator+(const Scalar& o) const {
    require_same_field(o, "+");
    if (field_.is_rationals()) return rational(rat() + o.rat());
    return residue(field_, (res() + o.res()) % field_.prime());
  }

  Scalar operator-(const Scalar& o) const {
    require_same_field(o, "-");
    if (field_.is_rationals()) return rational(rat() - o.rat());
    return residue(field_, detail::mod_norm(res() - o.res(), field_.prime()));
  }

  Scalar operator*(const Scalar& o) const {
    require_same_field(o, "*");
    if (field_.is_rationals()) return rational(rat() * o.rat());
    return residue(field_, (res() * o.res()) % field_.prime());
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar operator-() const {
    if (field_.is_rationals()) return rational(-rat());
    return residue(field_, detail::mod_norm(-res(), field_.prime()));
  }

  Scalar inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (field_.is_rationals()) return rational(1 / rat());
    return residue(field_, detail::mod_inverse(res(), field_.prime()));
  }

  bool operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat() == o.rat() : res() == o.res();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order (used for deterministic container keys). Same-field
  /// comparisons order by value; fields themselves order by characteristic.
  static int compare(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
      return a.field_.characteristic() < b.field_.characteristic() ? -1 : 1;
    if (a.field_.is_rationals()) return cmp(a.rat(), b.rat());
    return a.res() < b.res() ? -1 : (a.res() > b.res() ? 1 : 0);
  }

  /// "a", "a/b" (reduced, b > 1) over Q; least residue over GF(p).
  std::string to_string() const {
    if (field_.is_prime_field()) return std::to_string(res());
    const mpq_class& q = rat();
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
  }

  /// Parses the serialization above. Rational input is canonicalized;
  /// GF(p) input must already be a least residue.
  static Scalar parse(FieldSpec f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.is_prime_field()) {
      if (text.size() > 10) throw ParseError("bad residue: " + text);
      for (char c : text)
        if (c < '0' || c > '9') throw ParseError("bad residue: " + text);
      const std::int64_t v = std::stoll(text);
      if (v >= f.prime())
        throw ParseError("residue " + text + " out of range for " + f.to_string());
      return residue(f, v);
    }
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) throw ParseError("bad rational: " + text);
    mpz_class num(text.substr(0, pos));
    mpz_class den(1);
    if (pos < text.size()) {
      if (text[pos] != '/') throw ParseError("bad rational: " + text);
      const std::string den_text = text.substr(pos + 1);
      if (den_text.empty()) throw ParseError("bad rational: " + text);
      for (char c : den_text)
        if (c < '0' || c > '9') throw ParseError("bad rational: " + text);
      den = mpz_class(den_text);
      if (den == 0) throw ParseError("zero denominator: " + text);
    }
    return rational(mpq_class(num, den));
  }

  /// Underlying rational value (field must be Q).
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  /// Underlying least residue (field must be GF(p)).
  std::int64_t res() const { return std::get<std::int64_t>(v_); }

 private:
  static Scalar residue(FieldSpec f, std::int64_t v) {
    Scalar s(f, 0);
    s.v_ = v;
    return s;
  }

  void require_same_field(const Scalar& o, const char* op) const {
    if (field_ != o.field_)
      throw FieldMismatchError(std::string("scalar ") + op + ": " + field_.to_string() +
                               " vs " + o.field_.to_string());
  }

  FieldSpec field_;
  std::variant<mpq_class, std::int64_t> v_;
};

}  // namespace permext
