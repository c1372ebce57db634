#include "qcrys/radical.hpp"

#include <sstream>
#include <stdexcept>

#include "qcrys/squarefree.hpp"

namespace qcrys {

Radical::Radical(const Rational& r) {
  if (r != 0) terms_.emplace(Integer(1), r);
}

Radical Radical::term(const Rational& c, const Integer& squarefree_m) {
  if (squarefree_m == 0) throw std::domain_error("Radical::term: zero radicand");
  Radical out;
  out.accumulate(squarefree_m, c);
  return out;
}

bool Radical::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Rational Radical::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Radical::accumulate(const Integer& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Radical Radical::operator-() const {
  Radical out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Radical& Radical::operator+=(const Radical& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

Radical& Radical::operator-=(const Radical& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
  Radical out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      // sqrt(ma) sqrt(mb) = sign * g * sqrt((ma/g)(mb/g)), g = gcd; the
      // cofactors are coprime and squarefree, so the product is too.
      const Integer g = gcd(ma, mb);
      const Integer m = (ma / g) * (mb / g);
      Rational c = ca * cb * g;
      if (ma < 0 && mb < 0) c = -c;
      out.accumulate(m, c);
    }
  return out;
}

Radical& Radical::operator*=(const Radical& o) {
  *this = *this * o;
  return *this;
}

Radical Radical::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("Radical::inverse: only single-term values are invertible here");
  const auto& [m, c] = *terms_.begin();
  // (c sqrt(m))^{-1} = sqrt(m) / (c m)
  return term(1 / (c * m), m);
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    os << qcrys::to_string(mag);
    if (m != 1) os << "*sqrt(" << m.get_str() << ")";
  }
  return os.str();
}

Radical sqrt_rat(const Rational& r) {
  if (r == 0) return Radical();
  // sqrt(a/b) = sqrt(a b) / b with a, b coprime, so the squarefree kernels
  // of |a| and b are coprime and their product is squarefree.
  const Integer a = abs(r.get_num());
  const Integer& b = r.get_den();
  const SquareSplit sa = square_split(a);
  const SquareSplit sb = square_split(b);
  Integer m = sa.kernel * sb.kernel;
  if (r < 0) m = -m;
  Rational c(sa.root * sb.root, b);
  c.canonicalize();
  return Radical::term(c, m);
}

Radical sqrt_of_product(std::span<const Rational> factors) {
  Radical acc(Rational(1));
  bool negative = false;
  for (const auto& f : factors) {
    if (f == 0) return Radical();
    if (f < 0) negative = !negative;
    acc *= sqrt_rat(abs(f));
  }
  if (negative) acc *= Radical::term(1, Integer(-1));
  return acc;
}

}  // namespace qcrys
