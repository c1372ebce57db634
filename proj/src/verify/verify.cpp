#include "qcrys/verify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcrys/qnumbers.hpp"
#include "qcrys/rep_export.hpp"

namespace qcrys {

namespace {

Letter letter(std::string name, LinOp op) { return {std::move(name), std::make_shared<const LinOp>(std::move(op))}; }

std::string node_name(const std::string& stem, Sign sign, int i) {
  return stem + (sign == Sign::Plus ? "+" : "-") + "_" + std::to_string(i);
}

// [a, b] as two terms scaled by c.
void push_commutator(Relation& r, const Radical& c, const Letter& a, const Letter& b) {
  r.terms.push_back({c, {a, b}});
  r.terms.push_back({-c, {b, a}});
}

LinOp word_product(const std::vector<Letter>& word, std::size_t dim) {
  if (word.empty()) return LinOp::identity(dim);
  LinOp acc = *word.back().op;
  for (std::size_t k = word.size() - 1; k-- > 0;) acc = *word[k].op * acc;
  return acc;
}

std::string word_string(const std::vector<Letter>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (const auto& l : word) s += (s.empty() ? "" : " ") + l.name;
  return s;
}

std::string support_string(const FockVector& v, const Carrier& carrier) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) s += (s.empty() ? "" : "+") + carrier.label(k);
  return v.size() > 1 ? "{" + s + "}" : s;
}

std::vector<std::string> trace_terms(const Relation& r, std::size_t source, const Carrier& carrier) {
  std::vector<std::string> out;
  for (const auto& t : r.terms) {
    FockVector v;
    v.emplace(source, Radical(1));
    std::string line = word_string(t.word) + ": " + carrier.label(source);
    for (std::size_t k = t.word.size(); k-- > 0;) {
      bool leaked = false;
      for (const auto& [s, c] : v) leaked = leaked || t.word[k].op->leaks_from(s);
      v = apply_to(*t.word[k].op, v);
      line += " -" + t.word[k].name + "-> " + support_string(v, carrier) + (leaked ? " (left the space)" : "");
    }
    out.push_back(line);
  }
  return out;
}

Json residual_json(const LinOp::Column& col, const Carrier& carrier) {
  Json out = Json::array();
  for (const auto& [t, c] : col) out.push_back(Json{{"target", carrier.state_json(t)}, {"coeff", radical_to_json(c)}});
  return out;
}

int state_total(const CrystalState& s) { return std::accumulate(s.begin(), s.end(), 0); }

struct NodeLetters {
  std::vector<Letter> raise, lower, h;
};

NodeLetters generator_letters(const CrystalModel& model, Flavor flavor, const Rational& q) {
  const GeneratorSet g = build_generators(model, flavor == Flavor::Deformed, q);
  NodeLetters out;
  for (int i = 1; i <= model.num_nodes(); ++i) {
    out.raise.push_back(letter(node_name("e", Sign::Plus, i), g.raise[i - 1]));
    out.lower.push_back(letter(node_name("e", Sign::Minus, i), g.lower[i - 1]));
    out.h.push_back(letter("h_" + std::to_string(i), g.h[i - 1]));
  }
  return out;
}

RelationReport finish(RelationReport r, const std::string& id, const Json& spec, Flavor flavor, const Rational& q) {
  r.relation_id = id;
  r.spec = spec;
  r.flavor = to_string(flavor);
  r.q = flavor == Flavor::Classical ? Rational(1) : q;
  return r;
}

}  // namespace

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::Pass:
      return "PASS";
    case StateClass::Fail:
      return "FAIL";
    case StateClass::Boundary:
      return "BOUNDARY";
  }
  return "?";
}

std::string to_string(Flavor f) { return f == Flavor::Classical ? "classical" : "deformed"; }

std::string Relation::expression() const {
  std::string s;
  for (const auto& t : terms) {
    const bool negative = t.coeff.is_rational() && t.coeff.rational_part() < 0;
    const Radical mag = negative ? -t.coeff : t.coeff;
    s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (mag != Radical(1)) s += "(" + mag.to_string() + ") ";
    s += word_string(t.word);
  }
  return s.empty() ? "0" : s;
}

Carrier crystal_carrier(const CrystalModel& model, int margin) {
  Carrier c;
  c.size = model.size();
  c.state_json = [&model](std::size_t k) { return state_to_json(model.state(k)); };
  c.label = [&model](std::size_t k) { return state_label(model.state(k)); };
  c.near_truncation = [&model, margin](std::size_t k) {
    return boundary_class(model, model.state(k), margin) == BoundaryClass::CapMargin;
  };
  c.truncation_distance = [&model](std::size_t k) {
    return model.type() == AlgebraType::C ? model.spec().cap - state_total(model.state(k)) : -1;
  };
  return c;
}

Carrier fock_carrier(const FockSpace& space) {
  Carrier c;
  c.size = space.size();
  c.state_json = [&space](std::size_t k) { return Json(space.state(k)); };
  c.label = [&space](std::size_t k) { return fock_label(space.state(k)); };
  c.near_truncation = [](std::size_t) { return true; };
  c.truncation_distance = [&space](std::size_t k) { return space.cutoff() - FockSpace::total(space.state(k)); };
  return c;
}

Json RelationReport::to_json() const {
  Json j;
  j["relation_id"] = relation_id;
  j["spec"] = spec;
  j["flavor"] = flavor;
  j["q"] = to_string(q);
  j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"boundary", boundary}};
  j["failures"] = Json::array();
  for (const auto& f : failures)
    j["failures"].push_back(
        Json{{"state", f.state}, {"relation", f.relation}, {"word", f.word}, {"path", f.path}, {"residual", f.residual}});
  j["boundary"] = boundary_states;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

RelationReport evaluate_relations(const std::vector<Relation>& relations, const Carrier& carrier) {
  RelationReport report;
  report.per_state.assign(carrier.size, StateClass::Pass);
  for (const auto& rel : relations) {
    LinOp residual(carrier.size);
    for (const auto& t : rel.terms) residual += t.coeff * word_product(t.word, carrier.size);
    for (std::size_t s = 0; s < carrier.size; ++s) {
      const auto& col = residual.column(s);
      if (col.empty()) continue;
      const bool boundary = residual.leaks_from(s) && carrier.near_truncation(s);
      if (boundary) {
        if (report.per_state[s] == StateClass::Pass) report.per_state[s] = StateClass::Boundary;
        continue;
      }
      report.per_state[s] = StateClass::Fail;
      report.failures.push_back(
          {carrier.state_json(s), rel.id, rel.expression(), trace_terms(rel, s, carrier), residual_json(col, carrier)});
    }
  }
  for (std::size_t s = 0; s < carrier.size; ++s) {
    switch (report.per_state[s]) {
      case StateClass::Pass:
        ++report.pass;
        break;
      case StateClass::Fail:
        ++report.fail;
        break;
      case StateClass::Boundary:
        ++report.boundary;
        report.boundary_states.push_back(Json{{"state", carrier.state_json(s)}, {"distance", carrier.truncation_distance(s)}});
        break;
    }
  }
  return report;
}

RelationReport check_cartan(const CrystalModel& model, Flavor flavor, const Rational& q, int margin) {
  const NodeLetters g = generator_letters(model, flavor, q);
  const auto shift = cartan_from_shifts(model);
  const int nodes = model.num_nodes();
  std::vector<Relation> rels;
  for (int i = 1; i <= nodes; ++i)
    for (int j = 1; j <= nodes; ++j) {
      const int a = shift[i - 1][j - 1];
      for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const Letter& e = sg == Sign::Plus ? g.raise[j - 1] : g.lower[j - 1];
        Relation r{"[h_" + std::to_string(i) + ", " + e.name + "]", {}};
        push_commutator(r, Radical(1), g.h[i - 1], e);
        r.terms.push_back({Radical(sg == Sign::Plus ? -a : a), {e}});
        rels.push_back(std::move(r));
      }
      Relation hh{"[h_" + std::to_string(i) + ", h_" + std::to_string(j) + "]", {}};
      push_commutator(hh, Radical(1), g.h[i - 1], g.h[j - 1]);
      rels.push_back(std::move(hh));
    }
  RelationReport r = finish(evaluate_relations(rels, crystal_carrier(model, margin)), "cartan", spec_to_json(model.spec()),
                            flavor, q);
  r.extra["cartan_from_shifts"] = shift;
  r.extra["cartan_matches_textbook"] = shift == expected_cartan(model.type(), model.rank());
  return r;
}

RelationReport check_ladder(const CrystalModel& model, Flavor flavor, const Rational& q, int margin) {
  const NodeLetters g = generator_letters(model, flavor, q);
  const bool deformed = flavor == Flavor::Deformed;
  const auto d = symmetrizer(model.type(), model.rank());
  std::vector<Relation> rels;
  for (int i = 1; i <= model.num_nodes(); ++i)
    for (int j = 1; j <= model.num_nodes(); ++j) {
      Relation r{"[" + g.raise[i - 1].name + ", " + g.lower[j - 1].name + "]", {}};
      push_commutator(r, Radical(1), g.raise[i - 1], g.lower[j - 1]);
      if (i == j) {
        const std::string name = deformed ? "[H_" + std::to_string(i) + "]_q^" + std::to_string(d[i - 1]) : "H_" + std::to_string(i);
        r.terms.push_back({Radical(-1), {letter(name, ladder_diagonal(model, i, deformed, q))}});
      }
      rels.push_back(std::move(r));
    }
  return finish(evaluate_relations(rels, crystal_carrier(model, margin)), "ladder", spec_to_json(model.spec()), flavor, q);
}

RelationReport check_serre(const CrystalModel& model, Flavor flavor, const Rational& q, int margin) {
  const NodeLetters g = generator_letters(model, flavor, q);
  const bool deformed = flavor == Flavor::Deformed;
  const auto shift = cartan_from_shifts(model);
  const auto d = symmetrizer(model.type(), model.rank());
  std::vector<Relation> rels;
  for (int i = 1; i <= model.num_nodes(); ++i)
    for (int j = 1; j <= model.num_nodes(); ++j) {
      if (i == j) continue;
      const int m = 1 - shift[i - 1][j - 1];
      for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const Letter& ei = sg == Sign::Plus ? g.raise[i - 1] : g.lower[i - 1];
        const Letter& ej = sg == Sign::Plus ? g.raise[j - 1] : g.lower[j - 1];
        Relation r{"serre(" + ei.name + ", " + ej.name + ")", {}};
        for (int n = 0; n <= m; ++n) {
          const Rational binom = qbinom_at(m, n, d[i - 1], deformed ? q : Rational(1));
          std::vector<Letter> word(m - n, ei);
          word.push_back(ej);
          word.insert(word.end(), n, ei);
          r.terms.push_back({Radical(n % 2 == 0 ? binom : Rational(-binom)), std::move(word)});
        }
        rels.push_back(std::move(r));
      }
    }
  return finish(evaluate_relations(rels, crystal_carrier(model, margin)), "serre", spec_to_json(model.spec()), flavor, q);
}

namespace {

std::vector<Relation> cz_relations(const CrystalModel& model, const Rational& q) {
  const Letter eq2 = letter("Q_cz", cz_factor(model, q, CzVariant::EQ2));
  const Letter eq1a = letter("F_1", cz_factor(model, q, CzVariant::EQ1A));
  const Letter up_c = letter("E+_1", op_E_classical(model, 1, Sign::Plus));
  const Letter down_c = letter("E-_1", op_E_classical(model, 1, Sign::Minus));
  const Letter up_q = letter("e+_1", op_e_deformed(model, 1, Sign::Plus, q));
  const Letter down_q = letter("e-_1", op_e_deformed(model, 1, Sign::Minus, q));
  const Letter hat = letter("ê+_1", op_hat(model, 1, Sign::Plus));
  std::vector<Relation> rels;
  rels.push_back({"cz raise", {{Radical(1), {eq2, up_c}}, {Radical(-1), {up_q}}}});
  rels.push_back({"cz lower", {{Radical(1), {down_c, eq2}}, {Radical(-1), {down_q}}}});
  rels.push_back({"cz equivalence", {{Radical(1), {eq2, hat}}, {Radical(-1), {hat, eq1a}}}});
  return rels;
}

}  // namespace

RelationReport check_map(const CrystalModel& model, const Rational& q, int margin) {
  std::vector<Relation> rels;
  for (int i = 1; i <= model.num_nodes(); ++i) {
    const std::string n = std::to_string(i);
    const Letter f = letter("F_" + n, deform_factor(model, i, q));
    const Letter fi = letter("F^-1_" + n, deform_factor_inverse(model, i, q));
    const Letter up_c = letter("E+_" + n, op_E_classical(model, i, Sign::Plus));
    const Letter down_c = letter("E-_" + n, op_E_classical(model, i, Sign::Minus));
    const Letter up_q = letter("e+_" + n, op_e_deformed(model, i, Sign::Plus, q));
    const Letter down_q = letter("e-_" + n, op_e_deformed(model, i, Sign::Minus, q));
    rels.push_back({"map+ " + n, {{Radical(1), {up_c, f}}, {Radical(-1), {up_q}}}});
    rels.push_back({"map- " + n, {{Radical(1), {f, down_c}}, {Radical(-1), {down_q}}}});
    rels.push_back({"inverse+ " + n, {{Radical(1), {up_q, fi}}, {Radical(-1), {up_c}}}});
    rels.push_back({"inverse- " + n, {{Radical(1), {fi, down_q}}, {Radical(-1), {down_c}}}});
  }
  if (model.type() == AlgebraType::A && model.rank() == 2) {
    auto cz = cz_relations(model, q);
    rels.insert(rels.end(), cz.begin(), cz.end());
  }
  return finish(evaluate_relations(rels, crystal_carrier(model, margin)), "map", spec_to_json(model.spec()),
                Flavor::Deformed, q);
}

RelationReport check_cz(const CrystalModel& model, const Rational& q) {
  if (model.type() != AlgebraType::A || model.rank() != 2) throw std::domain_error("check_cz needs an sl(2) model");
  std::vector<Relation> rels = cz_relations(model, q);
  const Letter c_gen = letter("C_q", casimir_from_generators(model, true, q));
  const Letter c_scalar = letter("[j]_q[j+1]_q", casimir(model, true, q));
  const Letter up_q = letter("e+_1", op_e_deformed(model, 1, Sign::Plus, q));
  const Letter down_q = letter("e-_1", op_e_deformed(model, 1, Sign::Minus, q));
  rels.push_back({"casimir scalar", {{Radical(1), {c_gen}}, {Radical(-1), {c_scalar}}}});
  Relation cu{"[C_q, e+_1]", {}}, cd{"[C_q, e-_1]", {}};
  push_commutator(cu, Radical(1), c_gen, up_q);
  push_commutator(cd, Radical(1), c_gen, down_q);
  rels.push_back(std::move(cu));
  rels.push_back(std::move(cd));
  return finish(evaluate_relations(rels, crystal_carrier(model, 0)), "cz", spec_to_json(model.spec()), Flavor::Deformed,
                q);
}

RelationReport check_q1_limit(const CrystalModel& model, int margin) {
  std::vector<Relation> rels;
  for (int i = 1; i <= model.num_nodes(); ++i)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const Letter e = letter(node_name("e", sg, i) + "(q=1)", op_e_deformed(model, i, sg, 1));
      const Letter big = letter(node_name("E", sg, i), op_E_classical(model, i, sg));
      rels.push_back({"q1 " + node_name("e", sg, i), {{Radical(1), {e}}, {Radical(-1), {big}}}});
    }
  return finish(evaluate_relations(rels, crystal_carrier(model, margin)), "q1_limit", spec_to_json(model.spec()),
                Flavor::Deformed, 1);
}

RelationReport check_so3(const std::string& realization, const So3Generators& gens, const FockSpace& space,
                         const Rational& q) {
  const Letter plus = letter("L+", gens.plus), minus = letter("L-", gens.minus), zero = letter("L0", gens.zero);
  const Letter two = letter("[2L0]_q", so3_ladder_diagonal(space, q));
  std::vector<Relation> rels;
  Relation r1{"[L0, L+]", {}}, r2{"[L0, L-]", {}}, r3{"[L+, L-]", {}};
  push_commutator(r1, Radical(1), zero, plus);
  r1.terms.push_back({Radical(-1), {plus}});
  push_commutator(r2, Radical(1), zero, minus);
  r2.terms.push_back({Radical(1), {minus}});
  push_commutator(r3, Radical(1), plus, minus);
  r3.terms.push_back({Radical(-1), {two}});
  rels = {std::move(r1), std::move(r2), std::move(r3)};

  RelationReport r = evaluate_relations(rels, fock_carrier(space));
  r.relation_id = "so3";
  r.spec = Json{{"realization", realization}, {"cutoff", space.cutoff()}};
  r.flavor = "boson";
  r.q = q;
  Json irreps = Json::array();
  for (const auto& c : analyze_irreps(space, gens, q))
    irreps.push_back(Json{{"bosons", c.total}, {"spin", c.spin}, {"vectors", c.vectors}, {"pass", c.pass}});
  r.extra["irreps"] = irreps;
  return r;
}

}  // namespace qcrys
