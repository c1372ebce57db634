#pragma once

// Exact Laurent polynomials in q and a fixed number of formal symbols
// Q_k = q^{N_k}. Variable 0 is always q.

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcrys/rational.hpp"

namespace qcrys {

template <std::size_t Vars>
class Laurent {
  static_assert(Vars >= 1, "Laurent needs at least the variable q");

 public:
  using Exponent = std::array<int, Vars>;
  using Terms = std::map<Exponent, Rational>;

  Laurent() = default;
  explicit Laurent(const Rational& c) {
    if (c != 0) terms_.emplace(Exponent{}, c);
  }

  static Laurent monomial(const Exponent& e, const Rational& c = Rational(1)) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  /// q^k
  static Laurent q_power(int k, const Rational& c = Rational(1)) {
    Exponent e{};
    e[0] = k;
    return monomial(e, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the monomial with exponent e (zero when absent).
  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Laurent operator-() const {
    Laurent out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }
  Laurent& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Rational& s) { return a *= s; }
  friend Laurent operator*(const Rational& s, Laurent a) { return a *= s; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < Vars; ++k) e[k] = ea[k] + eb[k];
        out.accumulate(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Substitutes the formal symbol `var` (1 <= var < Vars) by q^k.
  Laurent<Vars - 1> specialize(std::size_t var, int k) const
    requires(Vars > 1)
  {
    if (var == 0 || var >= Vars) throw std::out_of_range("specialize: not a formal symbol");
    Laurent<Vars - 1> out;
    for (const auto& [e, c] : terms_) {
      typename Laurent<Vars - 1>::Exponent f{};
      std::size_t w = 0;
      for (std::size_t v = 0; v < Vars; ++v)
        if (v != var) f[w++] = e[v];
      f[0] += k * e[var];
      out += Laurent<Vars - 1>::monomial(f, c);
    }
    return out;
  }

  /// Exact value at a rational q.
  Rational evaluate(const Rational& q) const
    requires(Vars == 1)
  {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(q, e[0]);
    return acc;
  }

  /// Adds trailing zero exponents so the polynomial lives in a ring with
  /// more formal symbols.
  template <std::size_t Wider>
  Laurent<Wider> embed() const {
    static_assert(Wider >= Vars);
    Laurent<Wider> out;
    for (const auto& [e, c] : terms_) {
      typename Laurent<Wider>::Exponent f{};
      for (std::size_t v = 0; v < Vars; ++v) f[v] = e[v];
      out += Laurent<Wider>::monomial(f, c);
    }
    return out;
  }

  /// Exact quotient by (q - q^{-1}), or nullopt when it does not divide.
  std::optional<Laurent> divided_by_qdiff() const {
    // Group by the exponents of the formal symbols; each group is a
    // univariate polynomial in q divided independently.
    std::map<Exponent, std::map<int, Rational>> groups;
    for (const auto& [e, c] : terms_) {
      Exponent key = e;
      key[0] = 0;
      groups[key][e[0]] = c;
    }
    Laurent out;
    for (auto& [key, rem] : groups) {
      const int low = rem.begin()->first;
      while (!rem.empty()) {
        const auto top = std::prev(rem.end());
        const int top_e = top->first;
        const Rational c = top->second;
        // (q - q^{-1}) c q^{top-1} = c q^top - c q^{top-2}
        if (top_e - 2 < low) return std::nullopt;
        rem.erase(top);
        auto& below = rem[top_e - 2];
        below += c;
        if (below == 0) rem.erase(top_e - 2);
        Exponent e = key;
        e[0] = top_e - 1;
        out.accumulate(e, c);
      }
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      first = false;
      std::string mono;
      for (std::size_t v = 0; v < Vars; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += symbol_name(v);
        if (e[v] != 1) mono += "^" + std::to_string(e[v]);
      }
      if (mono.empty()) {
        os << qcrys::to_string(mag);
      } else {
        if (mag != 1) os << qcrys::to_string(mag) << '*';
        os << mono;
      }
    }
    return os.str();
  }

 private:
  static std::string symbol_name(std::size_t v) {
    if (v == 0) return "q";
    if (Vars == 2) return "Q";
    return "Q" + std::to_string(v);
  }

  void accumulate(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

using LaurentPoly = Laurent<1>;
using BiLaurent = Laurent<2>;
using TriLaurent = Laurent<3>;

/// Exact quotient num / den of univariate Laurent polynomials, or nullopt
/// when den does not divide num.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// A Laurent polynomial over (q - q^{-1})^depth. Symbolic brackets [N + c]_q
/// are not Laurent polynomials in (q, Q = q^N), so they are carried in this
/// form; the depth is kept minimal.
template <std::size_t Vars>
class QFraction {
 public:
  QFraction() = default;
  explicit QFraction(Laurent<Vars> numerator, int depth = 0) : num_(std::move(numerator)), depth_(depth) {
    normalize();
  }

  const Laurent<Vars>& numerator() const { return num_; }
  int depth() const { return depth_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The Laurent polynomial itself when the denominator has cancelled.
  std::optional<Laurent<Vars>> as_laurent() const {
    if (depth_ == 0) return num_;
    return std::nullopt;
  }

  QFraction operator-() const { return QFraction(-num_, depth_); }

  friend QFraction operator+(const QFraction& a, const QFraction& b) {
    const int d = std::max(a.depth_, b.depth_);
    return QFraction(a.lifted(d) + b.lifted(d), d);
  }
  friend QFraction operator-(const QFraction& a, const QFraction& b) { return a + (-b); }
  friend QFraction operator*(const QFraction& a, const QFraction& b) {
    return QFraction(a.num_ * b.num_, a.depth_ + b.depth_);
  }
  friend QFraction operator*(const Laurent<Vars>& p, const QFraction& a) { return QFraction(p * a.num_, a.depth_); }
  friend bool operator==(const QFraction& a, const QFraction& b) {
    return a.depth_ == b.depth_ && a.num_ == b.num_;
  }

  QFraction<Vars - 1> specialize(std::size_t var, int k) const
    requires(Vars > 1)
  {
    return QFraction<Vars - 1>(num_.specialize(var, k), depth_);
  }

  std::string to_string() const {
    if (depth_ == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(q - q^-1)^" + std::to_string(depth_);
  }

 private:
  static Laurent<Vars> qdiff() {
    typename Laurent<Vars>::Exponent up{}, down{};
    up[0] = 1;
    down[0] = -1;
    return Laurent<Vars>::monomial(up) - Laurent<Vars>::monomial(down);
  }

  Laurent<Vars> lifted(int d) const {
    Laurent<Vars> out = num_;
    for (int k = depth_; k < d; ++k) out *= qdiff();
    return out;
  }

  void normalize() {
    if (num_.is_zero()) {
      depth_ = 0;
      return;
    }
    while (depth_ > 0) {
      auto reduced = num_.divided_by_qdiff();
      if (!reduced) break;
      num_ = std::move(*reduced);
      --depth_;
    }
  }

  Laurent<Vars> num_;
  int depth_ = 0;
};

}  // namespace qcrys
