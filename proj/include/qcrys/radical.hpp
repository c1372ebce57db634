#pragma once

#include <map>
#include <span>
#include <string>

#include "qcrys/rational.hpp"

namespace qcrys {

/// Exact scalar sum_m c_m sqrt(m) with squarefree integer radicands m
/// (negative allowed, branch sqrt(m) = i sqrt(|m|)). Distinct squarefree
/// radicands are linearly independent over Q, so a Radical is zero iff it
/// stores no terms.
class Radical {
 public:
  using Terms = std::map<Integer, Rational>;

  Radical() = default;
  Radical(const Rational& r);  // NOLINT(google-explicit-constructor)
  Radical(long v) : Radical(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// c * sqrt(m); m must be squarefree and nonzero.
  static Radical term(const Rational& c, const Integer& squarefree_m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of sqrt(1).
  Rational rational_part() const;

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  Radical& operator*=(const Radical& o);

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b);
  friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }

  /// Multiplicative inverse of a single-term value. Multi-term inverses are
  /// never needed (every diagonal factor is a single term) and throw.
  Radical inverse() const;

  /// "c*sqrt(m)" terms joined by " + " / " - "; sqrt(1) terms print as "c".
  std::string to_string() const;

 private:
  void accumulate(const Integer& m, const Rational& c);
  Terms terms_;
};

/// Square root of a rational under the fixed branch: sqrt_rat(r)^2 == r.
Radical sqrt_rat(const Rational& r);

/// sqrt_rat of the product of the factors, factoring each one separately.
/// Equal to sqrt_rat(product) for any signs.
Radical sqrt_of_product(std::span<const Rational> factors);

}  // namespace qcrys
