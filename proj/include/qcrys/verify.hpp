#pragma once

// Relation verification: every relation is a sum of operator words whose
// residual is evaluated exactly and classified state by state.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qcrys/boson.hpp"
#include "qcrys/crystal_json.hpp"
#include "qcrys/rep.hpp"

namespace qcrys {

enum class StateClass { Pass, Fail, Boundary };
std::string to_string(StateClass c);

enum class Flavor { Classical, Deformed };
std::string to_string(Flavor f);

struct Letter {
  std::string name;
  std::shared_ptr<const LinOp> op;
};

/// coeff * word[0] word[1] ... (the rightmost letter acts first).
struct Term {
  Radical coeff;
  std::vector<Letter> word;
};

/// A relation asserted to vanish: sum of terms == 0.
struct Relation {
  std::string id;
  std::vector<Term> terms;
  std::string expression() const;
};

/// How the states of a carrier space are named and which of them sit next
/// to a truncation.
struct Carrier {
  std::size_t size = 0;
  std::function<Json(std::size_t)> state_json;
  std::function<std::string(std::size_t)> label;
  /// True where a nonzero residual caused by a leak counts as BOUNDARY.
  std::function<bool(std::size_t)> near_truncation;
  /// Distance to the truncation (cap - sum l, or cutoff - total).
  std::function<int(std::size_t)> truncation_distance;
};

Carrier crystal_carrier(const CrystalModel& model, int margin);
Carrier fock_carrier(const FockSpace& space);

struct Failure {
  Json state;
  std::string relation;
  std::string word;
  std::vector<std::string> path;  ///< per term: the states the word visits
  Json residual;                  ///< [{"target", "coeff"}]
};

struct RelationReport {
  std::string relation_id;
  Json spec;
  std::string flavor;
  Rational q = 1;
  std::vector<StateClass> per_state;
  std::size_t pass = 0, fail = 0, boundary = 0;
  std::vector<Failure> failures;
  Json boundary_states = Json::array();  ///< [{"state", "distance"}]
  Json extra = Json::object();

  bool ok() const { return fail == 0; }
  Json to_json() const;
};

/// Evaluates the relations on every state of the carrier. A state passes
/// when every residual column is exactly zero; a nonzero residual whose
/// word path leaked out of the space on a state flagged near_truncation is
/// BOUNDARY; anything else fails.
RelationReport evaluate_relations(const std::vector<Relation>& relations, const Carrier& carrier);

/// [h_i, e^{+-}_j] = +-a_ij e^{+-}_j and [h_i, h_j] = 0, with a_ij read off
/// the crystal weight shifts.
RelationReport check_cartan(const CrystalModel& model, Flavor flavor, const Rational& q, int margin = 6);
/// [e^+_i, e^-_j] = delta_ij [H_i]_{q_i}.
RelationReport check_ladder(const CrystalModel& model, Flavor flavor, const Rational& q, int margin = 6);
/// sum_n (-1)^n [1 - a_ij; n]_{q_i} e_i^{1 - a_ij - n} e_j e_i^n = 0 for every
/// ordered pair i != j and both signs (ordinary binomials classically).
RelationReport check_serre(const CrystalModel& model, Flavor flavor, const Rational& q, int margin = 6);
/// E^+ F = e^+, F E^- = e^-, their inverses on support, and for sl(2) the
/// Curtright-Zachos form of the map.
RelationReport check_map(const CrystalModel& model, const Rational& q, int margin = 6);
/// sl(2) only: the CZ diagonal against the deformed generators and both
/// Casimir cross-checks.
RelationReport check_cz(const CrystalModel& model, const Rational& q);
/// e^{+-}_i at q = 1 against the classical generators.
RelationReport check_q1_limit(const CrystalModel& model, int margin = 6);

/// [L0, L+-] = +-L+- and [L+, L-] = [2 L0]_q. The report's extra field
/// carries the irrep-resolved analysis.
RelationReport check_so3(const std::string& realization, const So3Generators& gens, const FockSpace& space,
                         const Rational& q);

}  // namespace qcrys
