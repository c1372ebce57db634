#pragma once

// q-integers, q-binomials and the scalar identities behind the Serre and
// ladder relations. Brackets are explicit exponent sums, so q = 1 is a
// regular point everywhere.

#include <array>
#include <cstddef>

#include "qcrys/laurent.hpp"
#include "qcrys/rational.hpp"

namespace qcrys {

/// [x]_q = q^{x-1} + q^{x-3} + ... + q^{1-x}, with [0] = 0 and [-x] = -[x].
LaurentPoly qint(int x);

/// [m]_q! = [1]_q [2]_q ... [m]_q.
LaurentPoly qfactorial(int m);

/// Balanced Gaussian binomial [m; k]_q = [m]! / ([m-k]! [k]!), computed by
/// exact polynomial division. Throws std::domain_error unless 0 <= k <= m.
LaurentPoly qbinom(int m, int k);

/// Symbolic bracket [c + z_1 N_1 + ... ]_q with Q_k = q^{N_k}, as a fraction
/// over (q - q^{-1}).
template <std::size_t Vars>
QFraction<Vars> qint_formal(int c, const std::array<int, Vars - 1>& z) {
  typename Laurent<Vars>::Exponent up{}, down{};
  up[0] = c;
  down[0] = -c;
  for (std::size_t k = 1; k < Vars; ++k) {
    up[k] = z[k - 1];
    down[k] = -z[k - 1];
  }
  return QFraction<Vars>(Laurent<Vars>::monomial(up) - Laurent<Vars>::monomial(down), 1);
}

/// [z_coeff * N + c]_q in (q, Q = q^N).
QFraction<2> qint_sym(int c, int z_coeff);

/// Where an identity in q is asserted.
enum class IdentityScope {
  AllQ,            ///< as a polynomial identity in q (and every formal N)
  ClassicalLimit,  ///< only at q = 1 (every N)
};

/// Sum_{n=0}^{1+a} (-1)^n [1+a; n]_q [N - n z]_q == 0, decided exactly.
bool check_serre_identity(int a, int z, IdentityScope scope = IdentityScope::AllQ);

/// The residual polynomial of the identity above (zero iff it holds for all q).
QFraction<2> serre_identity_residual(int a, int z);

/// [N_i]_q [N_{i+1} + 1]_q - [N_i + 1]_q [N_{i+1}]_q = [N_i - N_{i+1}]_q,
/// symbolically in (q, Q_1, Q_2).
bool check_bracket_identity_A();

/// [N - 1]_q [-N]_q - [N + 1]_q [-N - 2]_q = [2N + 1]_q (q + q^{-1}),
/// symbolically in (q, Q).
bool check_bracket_identity_C();

// ---- exact values at rational q ----

/// [x]_q at a rational q > 0.
Rational qint_at(int x, const Rational& q);

/// [x]_{q^d} for x = twice_x / 2, which must make d*x an integer. Used for
/// the half-integer Cartan eigenvalues of type C.
Rational qint_half_at(int twice_x, int d, const Rational& q);

/// [a]_q [b]_q for half-integers a = twice_a/2, b = twice_b/2 with a + b an
/// integer; the product is rational even when the factors are not.
Rational qint_product_half_at(int twice_a, int twice_b, const Rational& q);

/// [m; k]_{q^d} at a rational q.
Rational qbinom_at(int m, int k, int d, const Rational& q);

}  // namespace qcrys
