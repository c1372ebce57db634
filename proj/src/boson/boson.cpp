#include "qcrys/boson.hpp"

#include <stdexcept>

#include "qcrys/qnumbers.hpp"

namespace qcrys {

namespace {

std::size_t slot(int mode) {
  switch (mode) {
    case 1:
      return 0;
    case 0:
      return 1;
    case -1:
      return 2;
    default:
      throw std::domain_error("boson mode must be 1, 0 or -1");
  }
}

LinOp fock_diagonal(const FockSpace& space, auto&& value) {
  std::vector<Radical> d;
  for (const auto& s : space.states()) d.push_back(value(s));
  return LinOp::diagonal(d);
}

}  // namespace

FockSpace::FockSpace(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::domain_error("cutoff must be >= 0");
  for (int t = 0; t <= cutoff; ++t)
    for (int a = t; a >= 0; --a)
      for (int b = t - a; b >= 0; --b) states_.push_back({a, b, t - a - b});
  for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k], k);
}

std::optional<std::size_t> FockSpace::index_of(const FockState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string fock_label(const FockState& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")";
}

BosonOps boson_ops(const FockSpace& space, int mode, BosonKind kind, const Rational& q) {
  const std::size_t m = slot(mode);
  if (kind == BosonKind::QDeformed && q <= 0) throw std::domain_error("q must be a positive rational");
  auto amplitude = [&](int n) {
    return kind == BosonKind::Standard ? sqrt_rat(Rational(n)) : sqrt_rat(qint_at(n, q));
  };
  BosonOps ops{LinOp(space.size()), LinOp(space.size()), LinOp(space.size())};
  for (std::size_t k = 0; k < space.size(); ++k) {
    const FockState& s = space.state(k);
    const int n = s[m];
    ops.number.add(k, k, Radical(n));
    if (n > 0) {
      FockState down = s;
      --down[m];
      ops.annihilator.add(k, *space.index_of(down), amplitude(n));
    }
    FockState up = s;
    ++up[m];
    if (auto t = space.index_of(up))
      ops.creator.add(k, *t, amplitude(n + 1));
    else
      ops.creator.mark_leak(k);
  }
  return ops;
}

So3Generators vdj_so3(const FockSpace& space, const Rational& q) {
  if (q <= 0) throw std::domain_error("q must be a positive rational");
  const auto b1 = boson_ops(space, 1, BosonKind::QDeformed, q);
  const auto b0 = boson_ops(space, 0, BosonKind::QDeformed, q);
  const auto bm = boson_ops(space, -1, BosonKind::QDeformed, q);
  // q^{N_a} q^{-N_0/2} sqrt(q^{N_b} + q^{-N_b}) = q^{N_a} sqrt(q^{-N_0} (q^{N_b} + q^{-N_b}))
  auto dressing = [&](std::size_t a, std::size_t b) {
    return fock_diagonal(space, [&](const FockState& s) {
      return Radical(pow(q, s[a])) * sqrt_rat(pow(q, -s[1]) * (pow(q, s[b]) + pow(q, -s[b])));
    });
  };
  const LinOp d1 = dressing(2, 0), d2 = dressing(0, 2);
  So3Generators g;
  g.plus = d1 * b1.creator * b0.annihilator + b0.creator * bm.annihilator * d2;
  g.minus = b0.creator * b1.annihilator * d1 + d2 * bm.creator * b0.annihilator;
  g.zero = b1.number - bm.number;
  return g;
}

LinOp standard_so3_factor(const FockSpace& space, const Rational& q) {
  if (q <= 0) throw std::domain_error("q must be a positive rational");
  return fock_diagonal(space, [&](const FockState& s) {
    const int n1 = 2 * s[0] + s[1], n2 = 2 * s[2] + s[1];
    const Rational classical = Rational(n1 + 1) * n2;
    if (classical == 0) return Radical(1);
    return sqrt_rat(qint_at(n1 + 1, q) * qint_at(n2, q) / classical);
  });
}

So3Generators standard_so3(const FockSpace& space, const Rational& q) {
  const auto b1 = boson_ops(space, 1, BosonKind::Standard, q);
  const auto b0 = boson_ops(space, 0, BosonKind::Standard, q);
  const auto bm = boson_ops(space, -1, BosonKind::Standard, q);
  const LinOp f = standard_so3_factor(space, q);
  const Radical root2 = sqrt_rat(2);
  So3Generators g;
  g.plus = root2 * (b1.creator * b0.annihilator + b0.creator * bm.annihilator) * f;
  g.minus = f * (root2 * (b1.annihilator * b0.creator + b0.annihilator * bm.creator));
  g.zero = b1.number - bm.number;
  return g;
}

LinOp so3_ladder_diagonal(const FockSpace& space, const Rational& q) {
  return fock_diagonal(space, [&](const FockState& s) { return Radical(qint_at(2 * (s[0] - s[2]), q)); });
}

FockVector apply_to(const LinOp& op, const FockVector& v) {
  FockVector out;
  for (const auto& [src, c] : v)
    for (const auto& [t, e] : op.column(src)) {
      auto [it, inserted] = out.emplace(t, e * c);
      if (!inserted) {
        it->second += e * c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

std::vector<IrrepCheck> analyze_irreps(const FockSpace& space, const So3Generators& gens, const Rational& q) {
  const auto b1 = boson_ops(space, 1, BosonKind::Standard, 1);
  const auto b0 = boson_ops(space, 0, BosonKind::Standard, 1);
  const auto bm = boson_ops(space, -1, BosonKind::Standard, 1);
  const LinOp classical_minus = standard_so3(space, 1).minus;
  const LinOp pair = b0.creator * b0.creator - Radical(2) * b1.creator * bm.creator;
  const LinOp residual = commutator(gens.plus, gens.minus) - so3_ladder_diagonal(space, q);

  std::vector<IrrepCheck> out;
  for (int total = 0; total < space.cutoff(); ++total)
    for (int spin = total; spin >= 0; spin -= 2) {
      FockVector v;
      v.emplace(*space.index_of({0, 0, 0}), Radical(1));
      for (int k = 0; k < (total - spin) / 2; ++k) v = apply_to(pair, v);
      for (int k = 0; k < spin; ++k) v = apply_to(b1.creator, v);
      IrrepCheck check{total, spin, 0, true};
      for (int step = 0; step <= 2 * spin; ++step) {
        if (v.empty()) throw std::logic_error("analyze_irreps: string ended early");
        check.pass = check.pass && apply_to(residual, v).empty();
        ++check.vectors;
        v = apply_to(classical_minus, v);
      }
      if (!v.empty()) throw std::logic_error("analyze_irreps: string did not terminate");
      out.push_back(check);
    }
  return out;
}

}  // namespace qcrys
