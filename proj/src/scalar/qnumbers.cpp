#include "qcrys/qnumbers.hpp"

#include <stdexcept>
#include <string>

namespace qcrys {

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  const auto& dterms = den.terms();
  const int den_top = dterms.rbegin()->first[0];
  const int den_low = dterms.begin()->first[0];
  const Rational den_lead = dterms.rbegin()->second;
  const int floor = num.terms().begin()->first[0] - den_low;

  LaurentPoly rem = num;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const auto& [top_e, top_c] = *rem.terms().rbegin();
    const int e = top_e[0] - den_top;
    if (e < floor) return std::nullopt;
    const LaurentPoly step = LaurentPoly::q_power(e, top_c / den_lead);
    quotient += step;
    rem -= step * den;
  }
  return quotient;
}

LaurentPoly qint(int x) {
  if (x == 0) return LaurentPoly();
  if (x < 0) return -qint(-x);
  LaurentPoly out;
  for (int e = x - 1; e >= 1 - x; e -= 2) out += LaurentPoly::q_power(e);
  return out;
}

LaurentPoly qfactorial(int m) {
  if (m < 0) throw std::domain_error("qfactorial: negative argument");
  LaurentPoly out(Rational(1));
  for (int j = 2; j <= m; ++j) out *= qint(j);
  return out;
}

LaurentPoly qbinom(int m, int k) {
  if (m < 0 || k < 0 || k > m)
    throw std::domain_error("qbinom: need 0 <= k <= m, got m=" + std::to_string(m) + " k=" + std::to_string(k));
  auto quotient = divide_exact(qfactorial(m), qfactorial(m - k) * qfactorial(k));
  if (!quotient) throw std::logic_error("qbinom: q-factorial quotient is not a Laurent polynomial");
  return *quotient;
}

QFraction<2> qint_sym(int c, int z_coeff) { return qint_formal<2>(c, {z_coeff}); }

QFraction<2> serre_identity_residual(int a, int z) {
  if (a < 1) throw std::domain_error("serre identity: need a >= 1");
  const int m = 1 + a;
  QFraction<2> acc;
  for (int n = 0; n <= m; ++n) {
    BiLaurent coeff = qbinom(m, n).embed<2>();
    if (n % 2 == 1) coeff = -coeff;
    acc = acc + coeff * qint_sym(-n * z, 1);
  }
  return acc;
}

bool check_serre_identity(int a, int z, IdentityScope scope) {
  if (scope == IdentityScope::AllQ) return serre_identity_residual(a, z).is_zero();

  // q = 1: [m; n] -> C(m, n) and [N - n z] -> N - n z. The sum is linear in
  // N, so it vanishes for every N iff both coefficients vanish.
  if (a < 1) throw std::domain_error("serre identity: need a >= 1");
  const int m = 1 + a;
  Integer n_coeff = 0, const_coeff = 0, binom = 1;
  for (int n = 0; n <= m; ++n) {
    const int sign = n % 2 == 0 ? 1 : -1;
    n_coeff += sign * binom;
    const_coeff -= sign * binom * n * z;
    binom = binom * (m - n) / (n + 1);
  }
  return n_coeff == 0 && const_coeff == 0;
}

bool check_bracket_identity_A() {
  // Q1 = q^{N_i}, Q2 = q^{N_{i+1}}
  const auto n1 = qint_formal<3>(0, {1, 0});
  const auto n1p = qint_formal<3>(1, {1, 0});
  const auto n2 = qint_formal<3>(0, {0, 1});
  const auto n2p = qint_formal<3>(1, {0, 1});
  const auto diff = qint_formal<3>(0, {1, -1});
  return (n1 * n2p - n1p * n2 - diff).is_zero();
}

bool check_bracket_identity_C() {
  const BiLaurent q_plus_qinv = BiLaurent::q_power(1) + BiLaurent::q_power(-1);
  const auto lhs = qint_sym(-1, 1) * qint_sym(0, -1) - qint_sym(1, 1) * qint_sym(-2, -1);
  const auto rhs = q_plus_qinv * qint_sym(1, 2);
  return (lhs - rhs).is_zero();
}

namespace {

void require_positive(const Rational& q) {
  if (q <= 0) throw std::domain_error("q must be a positive rational, got " + to_string(q));
}

}  // namespace

Rational qint_at(int x, const Rational& q) {
  require_positive(q);
  if (q == 1) return Rational(x);
  return (pow(q, x) - pow(q, -x)) / (q - 1 / q);
}

Rational qint_half_at(int twice_x, int d, const Rational& q) {
  if (d < 1 || (d * twice_x) % 2 != 0)
    throw std::domain_error("qint_half_at: d * x must be an integer");
  return qint_at(d * twice_x / 2, q) / qint_at(d, q);
}

Rational qint_product_half_at(int twice_a, int twice_b, const Rational& q) {
  require_positive(q);
  if ((twice_a + twice_b) % 2 != 0)
    throw std::domain_error("qint_product_half_at: a + b must be an integer");
  if (twice_a % 2 == 0) return qint_at(twice_a / 2, q) * qint_at(twice_b / 2, q);
  if (q == 1) return make_rational(long(twice_a) * twice_b, 4);
  const int sum = (twice_a + twice_b) / 2;
  const int diff = (twice_a - twice_b) / 2;
  const Rational d = q - 1 / q;
  return (pow(q, sum) + pow(q, -sum) - pow(q, diff) - pow(q, -diff)) / (d * d);
}

Rational qbinom_at(int m, int k, int d, const Rational& q) {
  require_positive(q);
  return qbinom(m, k).evaluate(pow(q, d));
}

}  // namespace qcrys
