#include <gtest/gtest.h>

#include <set>

#include "qcrys/boson.hpp"
#include "qcrys/qnumbers.hpp"
#include "qcrys/rep.hpp"

using namespace qcrys;

namespace {

// Columns of op restricted to states with total occupation below the cutoff.
bool zero_below_cutoff(const FockSpace& space, const LinOp& op) {
  for (std::size_t k = 0; k < space.size(); ++k)
    if (FockSpace::total(space.state(k)) < space.cutoff() && !op.column(k).empty()) return false;
  return true;
}

std::size_t failing_states_below_cutoff(const FockSpace& space, const LinOp& residual) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < space.size(); ++k)
    if (FockSpace::total(space.state(k)) < space.cutoff() && !residual.column(k).empty()) ++n;
  return n;
}

}  // namespace

TEST(FockSpace, Enumeration) {
  EXPECT_EQ(FockSpace(8).size(), 165u);
  EXPECT_EQ(FockSpace(6).size(), 84u);
  EXPECT_EQ(FockSpace(0).size(), 1u);
  const FockSpace s(2);
  EXPECT_EQ(s.state(0), (FockState{0, 0, 0}));
  EXPECT_EQ(s.state(1), (FockState{1, 0, 0}));
  EXPECT_THROW(FockSpace(-1), std::domain_error);
}

TEST(BosonOps, CanonicalCommutator) {
  const FockSpace space(6);
  for (int mode : {1, 0, -1}) {
    const auto b = boson_ops(space, mode, BosonKind::Standard, 1);
    EXPECT_TRUE(zero_below_cutoff(space, commutator(b.annihilator, b.creator) - LinOp::identity(space.size())));
    EXPECT_EQ(b.creator * b.annihilator, b.number);
  }
  EXPECT_THROW(boson_ops(space, 2, BosonKind::Standard, 1), std::domain_error);
  EXPECT_THROW(boson_ops(space, 1, BosonKind::QDeformed, 0), std::domain_error);
}

TEST(BosonOps, QDeformedBrackets) {
  const FockSpace space(6);
  const auto b = boson_ops(space, 0, BosonKind::QDeformed, 2);
  const std::size_t k = *space.index_of({0, 2, 0});
  EXPECT_EQ((b.creator * b.annihilator).entry(k, k), Radical(make_rational(5, 2)));
  // b b^+ = [N + 1]_q below the cutoff
  for (const Rational& q : {Rational(2), make_rational(3, 5)}) {
    const auto bq = boson_ops(space, -1, BosonKind::QDeformed, q);
    for (std::size_t s = 0; s < space.size(); ++s) {
      const auto& st = space.state(s);
      EXPECT_EQ((bq.creator * bq.annihilator).entry(s, s), Radical(qint_at(st[2], q)));
      if (FockSpace::total(st) < space.cutoff()) {
        EXPECT_EQ((bq.annihilator * bq.creator).entry(s, s), Radical(qint_at(st[2] + 1, q)));
      }
    }
  }
}

TEST(BosonOps, ClassicalLimitAndLocality) {
  const FockSpace space(5);
  for (int mode : {1, 0, -1}) {
    const auto s = boson_ops(space, mode, BosonKind::Standard, 1);
    const auto d = boson_ops(space, mode, BosonKind::QDeformed, 1);
    EXPECT_EQ(s.creator, d.creator);
    EXPECT_EQ(s.annihilator, d.annihilator);
  }
  for (BosonKind kind : {BosonKind::Standard, BosonKind::QDeformed})
    for (int a : {1, 0, -1})
      for (int b : {1, 0, -1}) {
        if (a == b) continue;
        const auto x = boson_ops(space, a, kind, 2), y = boson_ops(space, b, kind, 2);
        for (const LinOp* u : {&x.creator, &x.annihilator, &x.number})
          for (const LinOp* v : {&y.creator, &y.annihilator, &y.number})
            EXPECT_TRUE(zero_below_cutoff(space, commutator(*u, *v)));
      }
}

TEST(BosonOps, CreationPastCutoffLeaks) {
  const FockSpace space(3);
  const auto b = boson_ops(space, 0, BosonKind::Standard, 1);
  std::set<std::size_t> top;
  for (std::size_t k = 0; k < space.size(); ++k)
    if (FockSpace::total(space.state(k)) == 3) top.insert(k);
  EXPECT_EQ(b.creator.leaks(), top);
  EXPECT_TRUE(b.annihilator.leaks().empty());
}

TEST(Vdj, SatisfiesSoQ3OnEveryState) {
  for (const Rational& q : {Rational(1), Rational(2), make_rational(3, 2)}) {
    const FockSpace space(6);
    const auto g = vdj_so3(space, q);
    EXPECT_EQ(commutator(g.zero, g.plus), g.plus);
    EXPECT_EQ(commutator(g.zero, g.minus), Radical(-1) * g.minus);
    EXPECT_TRUE((commutator(g.plus, g.minus) - so3_ladder_diagonal(space, q)).is_zero());
    EXPECT_EQ(g.minus, g.plus.transpose());
    EXPECT_TRUE(g.plus.leaks().empty());
  }
}

TEST(StandardBoson, ClassicalLimit) {
  const FockSpace space(6);
  const auto g = standard_so3(space, 1);
  EXPECT_EQ(standard_so3_factor(space, 1), LinOp::identity(space.size()));
  EXPECT_TRUE(zero_below_cutoff(space, commutator(g.plus, g.minus) - so3_ladder_diagonal(space, 1)));
  EXPECT_EQ(commutator(g.zero, g.plus), g.plus);
  for (std::size_t k = 0; k < space.size(); ++k) {
    const auto& s = space.state(k);
    EXPECT_EQ(g.zero.entry(k, k), Radical(s[0] - s[2]));
  }
}

TEST(StandardBoson, FactorMatchesSl2DeformFactor) {
  const FockSpace space(6);
  for (const Rational& q : {Rational(2), make_rational(1, 2)}) {
    const LinOp f = standard_so3_factor(space, q);
    for (std::size_t k = 0; k < space.size(); ++k) {
      const auto& s = space.state(k);
      const int n1 = 2 * s[0] + s[1], n2 = 2 * s[2] + s[1];
      const auto model = build_model({AlgebraType::A, 2, n1 + n2, -1});
      const auto ord = model.index_of({n1, n2});
      ASSERT_TRUE(ord);
      EXPECT_EQ(f.entry(k, k), deform_factor(model, 1, q).entry(*ord, *ord));
    }
  }
}

TEST(StandardBoson, WeightSpectrumOfEachBlock) {
  const FockSpace space(4);
  const auto g = standard_so3(space, 1);
  for (int j = 0; j <= 3; ++j) {
    std::set<int> spectrum;
    for (std::size_t k = 0; k < space.size(); ++k)
      if (FockSpace::total(space.state(k)) == j)
        spectrum.insert(static_cast<int>(g.zero.entry(k, k).rational_part().get_num().get_si()));
    std::set<int> expected;
    for (int m = -j; m <= j; ++m) expected.insert(m);
    EXPECT_EQ(spectrum, expected) << j;
  }
}

TEST(StandardBoson, DeformedLadderFailsBelowTopSpin) {
  // Oracle: a floating-point numpy evaluation of the same generators counts
  // 74 failing basis states with total < 8, at both q = 2 and q = 3/2.
  const FockSpace space(8);
  for (const Rational& q : {Rational(2), make_rational(3, 2)}) {
    const auto g = standard_so3(space, q);
    EXPECT_EQ(commutator(g.zero, g.plus), g.plus);
    EXPECT_EQ(commutator(g.zero, g.minus), Radical(-1) * g.minus);
    const LinOp residual = commutator(g.plus, g.minus) - so3_ladder_diagonal(space, q);
    EXPECT_EQ(failing_states_below_cutoff(space, residual), 74u);
    // blocks with at most two bosons hold only top-spin irreps and singlets
    for (std::size_t k = 0; k < space.size(); ++k)
      if (FockSpace::total(space.state(k)) <= 2) {
        EXPECT_TRUE(residual.column(k).empty());
      }
  }
}

TEST(StandardBoson, IrrepResolvedAnalysis) {
  const FockSpace space(8);
  const auto classical = analyze_irreps(space, standard_so3(space, 1), 1);
  for (const auto& c : classical) EXPECT_TRUE(c.pass);
  EXPECT_EQ(classical.size(), 20u);  // sum over n < 8 of (floor(n/2) + 1)

  for (const Rational& q : {Rational(2), make_rational(3, 2)}) {
    for (const auto& c : analyze_irreps(space, standard_so3(space, q), q)) {
      EXPECT_EQ(c.vectors, 2 * c.spin + 1);
      // holds on the top irrep and the singlets only
      EXPECT_EQ(c.pass, c.spin == c.total || c.spin == 0) << "n=" << c.total << " j=" << c.spin;
    }
    for (const auto& c : analyze_irreps(space, vdj_so3(space, q), q)) EXPECT_TRUE(c.pass);
  }
}
