#include "qcrys/crystal.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcrys/crystal_json.hpp"

namespace qcrys {

namespace {

// All compositions of total into parts >= 0, in descending lexicographic order.
void compositions(int total, int parts, CrystalState& prefix, std::vector<CrystalState>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Tuples with sum <= budget, ascending lexicographic order.
void bounded_tuples(int budget, int parts, CrystalState& prefix, std::vector<CrystalState>& out) {
  if (parts == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 0; first <= budget; ++first) {
    prefix.push_back(first);
    bounded_tuples(budget - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

void validate(const CrystalSpec& spec) {
  if (spec.lambda < 0) throw std::domain_error("lambda must be >= 0");
  if (spec.type == AlgebraType::A) {
    if (spec.n < 2) throw std::domain_error("type A needs n >= 2");
    return;
  }
  if (spec.n < 1) throw std::domain_error("type C needs n >= 1");
  if (spec.cap < spec.lambda) throw std::domain_error("type C needs cap >= lambda");
}

int total(const CrystalState& s) { return std::accumulate(s.begin(), s.end(), 0); }

}  // namespace

std::vector<int> move_vector(AlgebraType type, int n, int i) {
  const int nodes = type == AlgebraType::A ? n - 1 : n;
  if (i < 1 || i > nodes) throw std::domain_error("node " + std::to_string(i) + " out of range 1.." + std::to_string(nodes));
  std::vector<int> v(n, 0);
  if (type == AlgebraType::C && i == n) {
    v[n - 1] = 2;
  } else {
    v[i - 1] = 1;
    v[i] = -1;
  }
  return v;
}

CrystalModel build_model(const CrystalSpec& spec) {
  validate(spec);
  CrystalModel m;
  m.spec_ = spec;
  CrystalState prefix;
  if (spec.type == AlgebraType::A) {
    compositions(spec.lambda, spec.n, prefix, m.states_);
  } else {
    std::vector<CrystalState> all;
    bounded_tuples(spec.cap, spec.n, prefix, all);
    for (auto& s : all)
      if ((total(s) - spec.lambda) % 2 == 0) m.states_.push_back(std::move(s));
  }
  for (std::size_t k = 0; k < m.states_.size(); ++k) m.index_.emplace(m.states_[k], k);

  const int nodes = m.num_nodes();
  m.moves_.assign(nodes, std::vector<std::vector<MoveResult>>(2, std::vector<MoveResult>(m.size())));
  for (int i = 1; i <= nodes; ++i) {
    const auto v = move_vector(spec.type, spec.n, i);
    for (int sg = 0; sg < 2; ++sg) {
      const int dir = sg == 0 ? 1 : -1;
      for (std::size_t k = 0; k < m.size(); ++k) {
        CrystalState img = m.states_[k];
        bool negative = false;
        for (int c = 0; c < spec.n; ++c) {
          img[c] += dir * v[c];
          negative = negative || img[c] < 0;
        }
        MoveResult& r = m.moves_[i - 1][sg][k];
        if (negative) {
          r.status = MoveStatus::Annihilated;
        } else if (auto it = m.index_.find(img); it != m.index_.end()) {
          r.target = it->second;
        } else {
          r.status = MoveStatus::Truncated;
        }
      }
    }
  }
  return m;
}

std::optional<std::size_t> CrystalModel::index_of(const CrystalState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MoveResult CrystalModel::move(int i, Sign sign, std::size_t ordinal) const {
  if (i < 1 || i > num_nodes())
    throw std::domain_error("node " + std::to_string(i) + " out of range 1.." + std::to_string(num_nodes()));
  return moves_[i - 1][sign == Sign::Plus ? 0 : 1].at(ordinal);
}

std::optional<CrystalState> e_hat(const CrystalModel& model, int i, Sign sign, const CrystalState& s) {
  const auto k = model.index_of(s);
  if (!k) throw std::domain_error("state " + state_label(s) + " is not in the model");
  const MoveResult r = model.move(i, sign, *k);
  if (!r.ok()) return std::nullopt;
  return model.state(r.target);
}

std::vector<int> weight_N(const CrystalModel&, const CrystalState& s) { return s; }

std::vector<Rational> weight_H(const CrystalModel& model, const CrystalState& s) {
  const int n = model.rank();
  std::vector<Rational> h;
  for (int i = 0; i + 1 < n; ++i) h.emplace_back(s[i] - s[i + 1]);
  if (model.type() == AlgebraType::C) h.push_back(Rational(s[n - 1]) + make_rational(1, 2));
  return h;
}

BoundaryClass boundary_class(const CrystalModel& model, const CrystalState& s, int margin) {
  if (model.type() == AlgebraType::A) return BoundaryClass::Interior;
  return total(s) > model.spec().cap - margin ? BoundaryClass::CapMargin : BoundaryClass::Interior;
}

std::vector<std::vector<int>> cartan_from_shifts(const CrystalModel& model) {
  const int nodes = model.num_nodes();
  std::vector<std::vector<std::optional<Rational>>> seen(nodes, std::vector<std::optional<Rational>>(nodes));
  for (std::size_t k = 0; k < model.size(); ++k) {
    const auto before = weight_H(model, model.state(k));
    for (int j = 1; j <= nodes; ++j) {
      const MoveResult r = model.move(j, Sign::Plus, k);
      if (!r.ok()) continue;
      const auto after = weight_H(model, model.state(r.target));
      for (int i = 0; i < nodes; ++i) {
        const Rational d = after[i] - before[i];
        auto& slot = seen[i][j - 1];
        if (slot && *slot != d) throw std::logic_error("inconsistent weight shift");
        slot = d;
      }
    }
  }
  std::vector<std::vector<int>> shift(nodes, std::vector<int>(nodes, 0));
  // A column stays unset only when node j never acts (trivial irreps); the
  // shift is then read off the move vector directly.
  for (int j = 1; j <= nodes; ++j) {
    const auto v = move_vector(model.type(), model.rank(), j);
    for (int i = 0; i < nodes; ++i) {
      const auto& slot = seen[i][j - 1];
      if (slot) {
        if (slot->get_den() != 1) throw std::logic_error("non-integral weight shift");
        shift[i][j - 1] = static_cast<int>(slot->get_num().get_si());
      } else {
        shift[i][j - 1] = v[i] - (i + 1 < model.rank() ? v[i + 1] : 0);
      }
    }
  }
  return shift;
}

std::vector<std::vector<int>> expected_cartan(AlgebraType type, int n) {
  const int nodes = type == AlgebraType::A ? n - 1 : n;
  std::vector<std::vector<int>> a(nodes, std::vector<int>(nodes, 0));
  for (int i = 0; i < nodes; ++i) {
    a[i][i] = 2;
    if (i > 0) a[i][i - 1] = -1;
    if (i + 1 < nodes) a[i][i + 1] = -1;
  }
  // C_n: the long simple root sits at node n, so h_{n-1} sees e_n with -2.
  if (type == AlgebraType::C && n >= 2) a[n - 2][n - 1] = -2;
  return a;
}

std::vector<int> symmetrizer(AlgebraType type, int n) {
  const int nodes = type == AlgebraType::A ? n - 1 : n;
  std::vector<int> d(nodes, 1);
  if (type == AlgebraType::C) d[n - 1] = 2;
  return d;
}

std::string to_string(AlgebraType type) { return type == AlgebraType::A ? "A" : "C"; }

AlgebraType parse_algebra_type(const std::string& text) {
  if (text == "A" || text == "a") return AlgebraType::A;
  if (text == "C" || text == "c") return AlgebraType::C;
  throw std::invalid_argument("algebra type must be A or C, got '" + text + "'");
}

std::string state_label(const CrystalState& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + ")";
}

Json spec_to_json(const CrystalSpec& spec) {
  Json j;
  j["type"] = to_string(spec.type);
  j["n"] = spec.n;
  j["lambda"] = spec.lambda;
  if (spec.type == AlgebraType::C) j["cap"] = spec.cap;
  return j;
}

Json state_to_json(const CrystalState& s) { return Json(s); }

std::string export_graph_json(const CrystalModel& model) {
  Json doc;
  doc["spec"] = spec_to_json(model.spec());
  doc["states"] = Json::array();
  for (const auto& s : model.states()) doc["states"].push_back(state_to_json(s));
  doc["edges"] = Json::array();
  for (std::size_t k = 0; k < model.size(); ++k)
    for (int i = 1; i <= model.num_nodes(); ++i)
      if (const MoveResult r = model.move(i, Sign::Minus, k); r.ok())
        doc["edges"].push_back(Json{{"from", k}, {"to", r.target}, {"node", i}});
  return doc.dump(2) + "\n";
}

std::string export_graph_dot(const CrystalModel& model) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < model.size(); ++k) {
    const auto& s = model.state(k);
    os << "  s" << k << " [label=\"" << state_label(s) << "\\nH=(";
    const auto h = weight_H(model, s);
    for (std::size_t c = 0; c < h.size(); ++c) os << (c ? "," : "") << to_string(h[c]);
    os << ")\"];\n";
  }
  for (std::size_t k = 0; k < model.size(); ++k)
    for (int i = 1; i <= model.num_nodes(); ++i)
      if (const MoveResult r = model.move(i, Sign::Minus, k); r.ok())
        os << "  s" << k << " -> s" << r.target << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcrys
