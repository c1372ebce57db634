#include "qcrys/rep.hpp"

#include <array>
#include <stdexcept>

#include "qcrys/qnumbers.hpp"

namespace qcrys {

namespace {

bool is_long_root(const CrystalModel& model, int i) { return model.type() == AlgebraType::C && i == model.rank(); }

void require_node(const CrystalModel& model, int i) {
  if (i < 1 || i > model.num_nodes())
    throw std::domain_error("node " + std::to_string(i) + " out of range 1.." + std::to_string(model.num_nodes()));
}

void require_positive(const Rational& q) {
  if (q <= 0) throw std::domain_error("q must be a positive rational, got " + to_string(q));
}

void require_sl2(const CrystalModel& model, const char* what) {
  if (model.type() != AlgebraType::A || model.rank() != 2)
    throw std::domain_error(std::string(what) + " needs an sl(2) model (type A, n = 2)");
}

// The two integers whose product sits under the square root of node i.
std::array<int, 2> radicand_args(const CrystalModel& model, int i, const CrystalState& s) {
  if (is_long_root(model, i)) {
    const int l = s[model.rank() - 1];
    return {l + 1, -l - 2};
  }
  return {s[i - 1] + 1, s[i]};
}

Rational q_plus_inverse(const Rational& q) { return q + 1 / q; }

// Generator built from the diagonal factor: E^+ = hat^+ D, E^- = D hat^-.
LinOp dressed_generator(const CrystalModel& model, int i, Sign sign, const std::optional<Rational>& q) {
  require_node(model, i);
  LinOp out(model.size());
  for (std::size_t k = 0; k < model.size(); ++k) {
    const MoveResult r = model.move(i, sign, k);
    if (!r.ok()) {
      if (r.status == MoveStatus::Truncated) out.mark_leak(k);
      continue;
    }
    const std::size_t at = sign == Sign::Plus ? k : r.target;
    out.add(k, r.target, generator_factor(model, i, model.state(at), q));
  }
  return out;
}

}  // namespace

LinOp op_hat(const CrystalModel& model, int i, Sign sign) {
  require_node(model, i);
  LinOp out(model.size());
  for (std::size_t k = 0; k < model.size(); ++k) {
    const MoveResult r = model.move(i, sign, k);
    if (r.ok())
      out.add(k, r.target, Radical(1));
    else if (r.status == MoveStatus::Truncated)
      out.mark_leak(k);
  }
  return out;
}

LinOp op_num(const CrystalModel& model, int i) {
  if (i < 1 || i > model.rank()) throw std::domain_error("number operator index out of range");
  std::vector<Radical> d;
  for (const auto& s : model.states()) d.emplace_back(Rational(s[i - 1]));
  return LinOp::diagonal(d);
}

LinOp op_H(const CrystalModel& model, int i) {
  require_node(model, i);
  std::vector<Radical> d;
  for (const auto& s : model.states()) d.emplace_back(weight_H(model, s)[i - 1]);
  return LinOp::diagonal(d);
}

Radical generator_factor(const CrystalModel& model, int i, const CrystalState& s, const std::optional<Rational>& q) {
  const auto [a, b] = radicand_args(model, i, s);
  std::array<Rational, 2> f;
  if (q) {
    f = {qint_at(a, *q), qint_at(b, *q)};
  } else {
    f = {Rational(a), Rational(b)};
  }
  Radical d = sqrt_of_product(f);
  if (is_long_root(model, i)) d = Radical(q ? Rational(1 / q_plus_inverse(*q)) : make_rational(1, 2)) * d;
  return d;
}

LinOp op_E_classical(const CrystalModel& model, int i, Sign sign) { return dressed_generator(model, i, sign, std::nullopt); }

LinOp op_e_deformed(const CrystalModel& model, int i, Sign sign, const Rational& q) {
  require_positive(q);
  return dressed_generator(model, i, sign, q);
}

LinOp deform_factor(const CrystalModel& model, int i, const Rational& q) {
  require_node(model, i);
  require_positive(q);
  std::vector<Radical> d;
  for (const auto& s : model.states()) {
    const auto [a, b] = radicand_args(model, i, s);
    const Rational classical = Rational(a) * b;
    if (classical == 0) {
      d.emplace_back(1);
      continue;
    }
    Radical f = sqrt_rat(qint_at(a, q) * qint_at(b, q) / classical);
    if (is_long_root(model, i)) f = Radical(Rational(2 / q_plus_inverse(q))) * f;
    d.push_back(f);
  }
  return LinOp::diagonal(d);
}

LinOp deform_factor_inverse(const CrystalModel& model, int i, const Rational& q) {
  const LinOp f = deform_factor(model, i, q);
  std::vector<Radical> d;
  for (std::size_t k = 0; k < f.dim(); ++k) d.push_back(f.entry(k, k).inverse());
  return LinOp::diagonal(d);
}

LinOp cz_factor(const CrystalModel& model, const Rational& q, CzVariant variant) {
  require_positive(q);
  if (variant == CzVariant::EQ1A) return deform_factor(model, 1, q);
  require_sl2(model, "cz_factor(EQ2)");
  const int twice_j = model.spec().lambda;
  std::vector<Radical> d;
  for (const auto& s : model.states()) {
    // evaluated on the image state of j+: j0 = (l1 - l2) / 2, j = J = Lambda / 2
    const int twice_j0 = s[0] - s[1];
    const int ta = twice_j0 + twice_j, tb = twice_j0 - twice_j - 2;
    const Rational classical = make_rational(long(ta) * tb, 4);
    if (classical == 0) {
      d.emplace_back(1);
      continue;
    }
    d.push_back(sqrt_rat(qint_product_half_at(ta, tb, q) / classical));
  }
  return LinOp::diagonal(d);
}

LinOp casimir(const CrystalModel& model, bool deformed, const Rational& q) {
  require_sl2(model, "casimir");
  const int lam = model.spec().lambda;
  const Rational c = deformed ? qint_product_half_at(lam, lam + 2, q) : make_rational(long(lam) * (lam + 2), 4);
  return Radical(c) * LinOp::identity(model.size());
}

LinOp casimir_from_generators(const CrystalModel& model, bool deformed, const Rational& q) {
  require_sl2(model, "casimir_from_generators");
  const LinOp up = deformed ? op_e_deformed(model, 1, Sign::Plus, q) : op_E_classical(model, 1, Sign::Plus);
  const LinOp down = deformed ? op_e_deformed(model, 1, Sign::Minus, q) : op_E_classical(model, 1, Sign::Minus);
  std::vector<Radical> f;
  for (const auto& s : model.states()) {
    const int h = s[0] - s[1];
    f.emplace_back(deformed ? qint_product_half_at(h, h + 2, q) : make_rational(long(h) * (h + 2), 4));
  }
  return down * up + LinOp::diagonal(f);
}

GeneratorSet build_generators(const CrystalModel& model, bool deformed, const Rational& q) {
  GeneratorSet g;
  g.deformed = deformed;
  g.q = q;
  g.d = symmetrizer(model.type(), model.rank());
  for (int i = 1; i <= model.num_nodes(); ++i) {
    g.raise.push_back(deformed ? op_e_deformed(model, i, Sign::Plus, q) : op_E_classical(model, i, Sign::Plus));
    g.lower.push_back(deformed ? op_e_deformed(model, i, Sign::Minus, q) : op_E_classical(model, i, Sign::Minus));
    g.h.push_back(op_H(model, i));
  }
  return g;
}

LinOp ladder_diagonal(const CrystalModel& model, int i, bool deformed, const Rational& q) {
  require_node(model, i);
  const int d = symmetrizer(model.type(), model.rank())[i - 1];
  std::vector<Radical> out;
  for (const auto& s : model.states()) {
    const Rational h = weight_H(model, s)[i - 1];
    if (!deformed) {
      out.emplace_back(h);
      continue;
    }
    const Rational twice = 2 * h;
    out.emplace_back(qint_half_at(static_cast<int>(twice.get_num().get_si()), d, q));
  }
  return LinOp::diagonal(out);
}

}  // namespace qcrys
