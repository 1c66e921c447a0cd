#include <gtest/gtest.h>

#include "lubanski/identities.hpp"

using namespace lubanski;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const MomentumSample p312({q(3), q(1), q(2), q(0)}, q(4));
const MomentumSample p3m1m2({q(3), q(-1), q(-2), q(0)}, q(4));
const MomentumSample rest({q(2), q(0), q(0), q(0)}, q(4));
const MomentumSample n1001({q(1), q(0), q(0), q(1)}, q(0));
const MomentumSample n3221({q(3), q(2), q(2), q(1)}, q(0));

// (1/2)(p + q)_mu u-bar gamma^mu v, the plane-wave trace of the first tensor form.
Scalar trace_by_hand(const SolutionPair& s, const Matrix& u, const Matrix& v) {
  FourVector sum = s.p.p() + s.q.p();
  Scalar t;
  for (std::size_t mu = 0; mu < 4; ++mu) t += Scalar::frac(1, 2) * sum.lowered()[mu] * bilinear(u, lubanski::gamma(mu), v);
  return t;
}

} // namespace

TEST(Identities, SolutionPairsAreSolutions) {
  SolutionPair s = make_pair(Family::dirac_gamma, p312, p3m1m2, q(2));
  ASSERT_EQ(s.u.size(), 2u);
  ASSERT_EQ(s.v.size(), 2u);
  Matrix op_p = assemble(Family::dirac_gamma, p312, q(2)).total, op_q = assemble(Family::dirac_gamma, p3m1m2, q(2)).total;
  for (const auto& u : s.u) EXPECT_TRUE((op_p * u).is_zero());
  for (const auto& v : s.v) EXPECT_TRUE((op_q * v).is_zero());
  // the conjugate solves the row equation u-bar (p-slash - m) = 0
  for (const auto& u : s.u) EXPECT_TRUE((dirac_bar(u) * (slash(p312.p()) - Scalar(2) * Matrix::identity(4))).is_zero());
}

TEST(Identities, CurrentConservation) {
  EXPECT_TRUE(current_conservation(make_pair(Family::dirac_gamma, rest, rest, q(2))).passed());
  SolutionPair s = make_pair(Family::dirac_gamma, p312, p3m1m2, q(2));
  EXPECT_TRUE(current_conservation(s).passed());
  for (const auto& u : s.u)
    for (const auto& v : s.v) EXPECT_TRUE(current_residual(s, u, v).is_zero());
}

TEST(Identities, CurrentMassMismatchIsDetected) {
  MomentumSample other = massive_fixtures(1)[1];
  SolutionPair s = make_pair(Family::dirac_gamma, p312, q(2), other, q(1));
  bool nonzero = false;
  for (const auto& u : s.u)
    for (const auto& v : s.v) nonzero = nonzero || !current_residual(s, u, v).is_zero();
  EXPECT_TRUE(nonzero);
  EXPECT_FALSE(current_conservation(s).passed());
}

TEST(Identities, EnergyMomentumOnEveryPair) {
  auto f = massive_fixtures(4);
  for (std::size_t k = 0; k < f.size(); ++k) {
    SolutionPair s = make_pair(Family::dirac_gamma, f[k], f[(k + 1) % f.size()], q(2));
    Report r = energy_momentum_identities(s);
    EXPECT_TRUE(r.passed()) << f[k].str() << ": " << (r.failures().empty() ? "" : r.failures().front());
  }
}

// Independent evaluation of T^mu_mu = m u-bar v and T^00 = u^dagger H u.
TEST(Identities, TraceAndHamiltonianByHand) {
  for (const auto& p : massive_fixtures(4)) {
    SolutionPair s = make_pair(Family::dirac_gamma, p, p, q(2));
    Matrix h = Scalar(2) * beta();
    for (std::size_t k = 1; k <= 3; ++k) h = h + p.p()[k] * alpha(k);
    for (const auto& u : s.u)
      for (const auto& v : s.v) {
        EXPECT_EQ(trace_by_hand(s, u, v), Scalar(2) * bilinear(u, Matrix::identity(4), v));
        Scalar t00 = p.p()[0] * bilinear(u, lubanski::gamma(0), v);
        EXPECT_EQ(t00, (u.conj_transpose() * h * v)(0, 0));
      }
  }
}

TEST(Identities, MultiIndexBalance) {
  SolutionPair s = make_pair(Family::dirac_gamma, p312, p3m1m2, q(2));
  EXPECT_TRUE(multi_index_balance(s, {0, 1, 0, 0}, {1, 0, 0, 0}).passed());
  EXPECT_TRUE(multi_index_balance(s, {2, 0, 1, 0}, {0, 0, 0, 3}).passed());
}

TEST(Identities, Gamma5Identities) {
  for (const auto& p : massive_fixtures(4)) {
    Report r = gamma5_trace_identity(p.p(), q(2));
    EXPECT_TRUE(r.passed()) << p.str();
  }
}

// With gamma^5 in place of gamma_5 the triple-product identity fails for every index;
// the report records that as a passing entry, checked here directly.
TEST(Identities, LiteralUpperGamma5TripleProductFails) {
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix triple = Matrix::zeros(4, 4);
    for (const auto& t : levi_civita_support())
      if (t.idx[0] == mu) triple = triple + Scalar(t.sign) * (lubanski::gamma(t.idx[1]) * lubanski::gamma(t.idx[2]) * lubanski::gamma(t.idx[3]));
    triple = Scalar(Rational(0), q(1, 6)) * triple;
    EXPECT_EQ(triple, gamma5_lower() * gamma_lower(mu));
    EXPECT_NE(triple, gamma5() * gamma_lower(mu));
  }
}

TEST(Identities, SelfDualBalance) {
  EXPECT_TRUE(selfdual_balance(n1001, n1001).passed());
  EXPECT_TRUE(selfdual_balance(n1001, n3221).passed());
  auto n = massless_fixtures();
  for (std::size_t k = 0; k + 1 < n.size(); ++k) EXPECT_TRUE(selfdual_balance(n[k], n[k + 1]).passed()) << n[k].str();
}

TEST(Identities, SelfDualBalanceMaxwellDiagonal) {
  auto sols = kernel_of(assemble(Family::proca, n1001, 0)).kernel_basis;
  for (const auto& a : sols)
    for (const auto& b : sols)
      EXPECT_TRUE(selfdual_residual2(n1001.p(), maxwell_q(n1001.p(), a), n1001.p(), maxwell_q(n1001.p(), b)).is_zero());
}

TEST(Identities, NegativeControls) {
  Report r = identity_negative_controls(p312, p3m1m2, q(2), massive_fixtures(9)[1], q(3), n1001, n3221);
  EXPECT_TRUE(r.passed());
  for (const char* e : {"current_mass_mismatch", "balance_off_shell", "selfdual_non_solution"}) EXPECT_TRUE(r.find(e)->passed) << e;
}

TEST(Identities, OffShellSpinorBreaksBalance) {
  SolutionPair s = make_pair(Family::dirac_gamma, p312, p3m1m2, q(2));
  s.v = {Matrix::unit_vector(4, 0)};
  Report r = energy_momentum_identities(s);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("balance_sigma")->passed);
}
