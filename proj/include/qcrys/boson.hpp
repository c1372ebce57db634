#pragma once

// Truncated three-mode Fock space (modes 1, 0, -1), standard and
// q-deformed bosons, and two so_q(3) realizations built from them.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcrys/linop.hpp"

namespace qcrys {

/// Occupations (n_1, n_0, n_{-1}).
using FockState = std::array<int, 3>;

class FockSpace {
 public:
  /// All states with n_1 + n_0 + n_{-1} <= cutoff, ordered by total
  /// occupation and then by descending n_1, n_0.
  explicit FockSpace(int cutoff);

  int cutoff() const { return cutoff_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<FockState>& states() const { return states_; }
  const FockState& state(std::size_t k) const { return states_.at(k); }
  std::optional<std::size_t> index_of(const FockState& s) const;
  static int total(const FockState& s) { return s[0] + s[1] + s[2]; }

 private:
  int cutoff_;
  std::vector<FockState> states_;
  std::map<FockState, std::size_t> index_;
};

std::string fock_label(const FockState& s);

enum class BosonKind {
  Standard,   ///< b^+ |n> = sqrt(n + 1) |n + 1>
  QDeformed,  ///< b^+ |n> = sqrt([n + 1]_q) |n + 1>, so b^+ b = [N]_q
};

struct BosonOps {
  LinOp annihilator;
  LinOp creator;  ///< creation past the cutoff gives zero and marks a leak
  LinOp number;
};

/// Mode is 1, 0 or -1. q must be positive for QDeformed.
BosonOps boson_ops(const FockSpace& space, int mode, BosonKind kind, const Rational& q);

struct So3Generators {
  LinOp plus;
  LinOp minus;
  LinOp zero;
};

/// The q-boson realization:
///   L+ = D1 b1^+ b0 + b0^+ b_{-1} D2,  L- = b0^+ b1 D1 + D2 b_{-1}^+ b0,
///   D1 = q^{N_{-1}} q^{-N_0/2} sqrt(q^{N_1} + q^{-N_1}),
///   D2 = q^{N_1} q^{-N_0/2} sqrt(q^{N_{-1}} + q^{-N_{-1}}),  L0 = N_1 - N_{-1}.
So3Generators vdj_so3(const FockSpace& space, const Rational& q);

/// The standard-boson realization:
///   L+ = sqrt(2) (b1^+ b0 + b0^+ b_{-1}) F,  L- = F sqrt(2) (b1 b0^+ + b0 b_{-1}^+),
///   L0 = N_1' - N_{-1}' with F the sl(2) deforming diagonal in the composite
///   numbers N1 = 2 n_1 + n_0 and N2 = 2 n_{-1} + n_0.
So3Generators standard_so3(const FockSpace& space, const Rational& q);

/// The diagonal F above: sqrt([N1 + 1]_q [N2]_q / ((N1 + 1) N2)), 1 where N2 = 0.
LinOp standard_so3_factor(const FockSpace& space, const Rational& q);

/// diag([2 L0]_q).
LinOp so3_ladder_diagonal(const FockSpace& space, const Rational& q);

/// Vectors as sparse maps ordinal -> coefficient.
using FockVector = std::map<std::size_t, Radical>;
FockVector apply_to(const LinOp& op, const FockVector& v);

/// Result of checking [L+, L-] = [2 L0]_q on one classical so(3) irrep.
struct IrrepCheck {
  int total = 0;    ///< boson number of the block
  int spin = 0;     ///< j of the irrep inside the block
  int vectors = 0;  ///< 2j + 1 weight vectors checked
  bool pass = false;
};

/// Decomposes every block of total boson number below the cutoff into
/// classical so(3) irreps, with highest-weight vectors
/// (b1^+)^j (b0^+ b0^+ - 2 b1^+ b_{-1}^+)^k |0>, n = j + 2k, and their
/// strings under the classical L-. Each weight vector is tested exactly
/// against the given generators.
std::vector<IrrepCheck> analyze_irreps(const FockSpace& space, const So3Generators& gens, const Rational& q);

}  // namespace qcrys
