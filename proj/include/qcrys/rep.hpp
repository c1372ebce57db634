#pragma once

// Matrix realizations of the crystal, classical and q-deformed generators on
// a crystal model, plus the diagonal deforming maps between them.

#include <optional>
#include <string>
#include <vector>

#include "qcrys/crystal.hpp"
#include "qcrys/linop.hpp"

namespace qcrys {

/// 0/1 matrix of e-hat^{+-}_i. Raising moves cut off by the cap mark their
/// source as a leak.
LinOp op_hat(const CrystalModel& model, int i, Sign sign);

/// diag(l_i), i = 1..n.
LinOp op_num(const CrystalModel& model, int i);
/// diag(H_i), i = 1..nodes.
LinOp op_H(const CrystalModel& model, int i);

/// E^+_i = e-hat^+_i D and E^-_i = D e-hat^-_i with D = sqrt((l_i + 1) l_{i+1}),
/// or D = sqrt((l_n + 1)(-l_n - 2)) / 2 at type C node n.
LinOp op_E_classical(const CrystalModel& model, int i, Sign sign);

/// Same shape with every factor x replaced by [x]_q and the 1/2 prefactor by
/// 1/(q + 1/q). Throws std::domain_error unless q > 0.
LinOp op_e_deformed(const CrystalModel& model, int i, Sign sign, const Rational& q);

/// The coefficient D of node i on a state (the diagonal factor above);
/// q = nullopt gives the classical value.
Radical generator_factor(const CrystalModel& model, int i, const CrystalState& s, const std::optional<Rational>& q);

/// Diagonal F with E^+ F = e^+ and F E^- = e^-; F = 1 where the classical
/// factor vanishes.
LinOp deform_factor(const CrystalModel& model, int i, const Rational& q);
/// F^{-1} on the same support.
LinOp deform_factor_inverse(const CrystalModel& model, int i, const Rational& q);

enum class CzVariant {
  EQ2,   ///< the sl(2) ratio of [J0 + J][J0 - J - 1] over (j0 + j)(j0 - j - 1)
  EQ1A,  ///< deform_factor of node 1
};

/// Deforming diagonal of an sl(2) model (type A, n = 2). EQ2 is indexed by
/// the image state of j+, so EQ2 * E^+ = e^+; EQ1A is indexed by the source,
/// so E^+ * EQ1A = e^+. J and j act as the scalar Lambda / 2.
LinOp cz_factor(const CrystalModel& model, const Rational& q, CzVariant variant);

/// Casimir scalar j(j + 1) (classical) or [j]_q [j + 1]_q (deformed) times
/// the identity, j = Lambda / 2. Type A, n = 2 only.
LinOp casimir(const CrystalModel& model, bool deformed, const Rational& q);
/// E^- E^+ + f(H) with f(H) = (H/2)(H/2 + 1), or [H/2]_q [H/2 + 1]_q.
LinOp casimir_from_generators(const CrystalModel& model, bool deformed, const Rational& q);

/// The Chevalley triple of every node. Classical generators when
/// !deformed (q is then ignored by the generators).
struct GeneratorSet {
  bool deformed = false;
  Rational q = 1;
  std::vector<LinOp> raise;  ///< index i - 1
  std::vector<LinOp> lower;
  std::vector<LinOp> h;
  std::vector<int> d;  ///< q_i = q^{d_i}
};

GeneratorSet build_generators(const CrystalModel& model, bool deformed, const Rational& q);

/// diag([H_i]_{q_i}) (or diag(H_i) classically): the right-hand side of
/// [e^+_i, e^-_i].
LinOp ladder_diagonal(const CrystalModel& model, int i, bool deformed, const Rational& q);

}  // namespace qcrys
