#pragma once

// State spaces of the symmetric irreps (Dynkin labels (Lambda, 0, ..., 0))
// of sl(n) and sp(2n), and the crystal moves between them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcrys/rational.hpp"

namespace qcrys {

enum class AlgebraType { A, C };

enum class Sign { Plus, Minus };

struct CrystalSpec {
  AlgebraType type = AlgebraType::A;
  int n = 2;       ///< sl(n) for A (n >= 2), sp(2n) for C (n >= 1)
  int lambda = 0;  ///< highest weight Lambda >= 0
  int cap = -1;    ///< bound on l_1 + ... + l_n; type C only, must be >= Lambda
};

/// Occupations (l_1, ..., l_n), the eigenvalues of N_1, ..., N_n.
using CrystalState = std::vector<int>;

/// Why a move has no image.
enum class MoveStatus {
  Ok,
  Annihilated,  ///< some l_i would become negative (end of a string)
  Truncated,    ///< the image exceeds the type C cap
};

struct MoveResult {
  MoveStatus status = MoveStatus::Ok;
  std::size_t target = 0;  ///< meaningful only when status == Ok
  bool ok() const { return status == MoveStatus::Ok; }
};

class CrystalModel {
 public:
  const CrystalSpec& spec() const { return spec_; }
  AlgebraType type() const { return spec_.type; }
  int rank() const { return spec_.n; }
  /// Number of Dynkin nodes: n - 1 for A, n for C.
  int num_nodes() const { return spec_.type == AlgebraType::A ? spec_.n - 1 : spec_.n; }

  std::size_t size() const { return states_.size(); }
  const std::vector<CrystalState>& states() const { return states_; }
  const CrystalState& state(std::size_t k) const { return states_.at(k); }
  std::optional<std::size_t> index_of(const CrystalState& s) const;

  /// The move of node i (1-based) on the state with the given ordinal.
  /// Throws std::domain_error for a node out of range.
  MoveResult move(int i, Sign sign, std::size_t ordinal) const;

 private:
  friend CrystalModel build_model(const CrystalSpec& spec);
  CrystalSpec spec_;
  std::vector<CrystalState> states_;
  std::map<CrystalState, std::size_t> index_;
  // moves_[i - 1][sign][ordinal]
  std::vector<std::vector<std::vector<MoveResult>>> moves_;
};

/// Validates the spec and enumerates the state space. Type A holds the
/// compositions of Lambda into n parts, highest weight first. Type C holds
/// every l >= 0 with sum l <= cap and sum l = Lambda (mod 2), in ascending
/// lexicographic order. Invalid specs throw std::domain_error.
CrystalModel build_model(const CrystalSpec& spec);

/// The increment of l under the raising move of node i; the lowering move
/// subtracts it.
std::vector<int> move_vector(AlgebraType type, int n, int i);

/// e-hat of node i applied to s; nullopt when the image leaves the space.
std::optional<CrystalState> e_hat(const CrystalModel& model, int i, Sign sign, const CrystalState& s);

std::vector<int> weight_N(const CrystalModel& model, const CrystalState& s);
/// H_i = l_i - l_{i+1} for i < n; type C adds H_n = l_n + 1/2.
std::vector<Rational> weight_H(const CrystalModel& model, const CrystalState& s);

enum class BoundaryClass { Interior, CapMargin };

/// CapMargin iff type C and sum l > cap - margin.
BoundaryClass boundary_class(const CrystalModel& model, const CrystalState& s, int margin);

/// shift[i][j]: the change of the H_i eigenvalue under the raising move of
/// node j, read off the model's weights. This is the Kac-indexed Cartan
/// matrix, [h_i, e_j] = shift[i][j] e_j. Throws std::logic_error if a move
/// shifts some H_i inconsistently across states.
std::vector<std::vector<int>> cartan_from_shifts(const CrystalModel& model);

/// The textbook Cartan matrix in the same indexing (A_{n-1}, or C_n with the
/// long root at node n).
std::vector<std::vector<int>> expected_cartan(AlgebraType type, int n);

/// Symmetrizing integers d_i: 1 everywhere except type C node n (d_n = 2).
std::vector<int> symmetrizer(AlgebraType type, int n);

std::string to_string(AlgebraType type);
AlgebraType parse_algebra_type(const std::string& text);
std::string state_label(const CrystalState& s);

/// Crystal graph with edges s -> e-hat^-_i(s) labeled i.
std::string export_graph_json(const CrystalModel& model);
std::string export_graph_dot(const CrystalModel& model);

}  // namespace qcrys
