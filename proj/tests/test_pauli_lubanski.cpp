#include <gtest/gtest.h>

#include "lubanski/pauli_lubanski.hpp"
#include "support.hpp"

using namespace lubanski;
using lubanski::testing::naive_kernel;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::shared_ptr<const Representation> rep(RepKind k) { return std::make_shared<const Representation>(build_representation(k)); }

std::vector<MomentumSample> every_fixture() {
  std::vector<MomentumSample> out = massive_fixtures(4);
  for (const auto& p : massive_fixtures(q(5, 2))) out.push_back(p);
  for (const auto& p : massless_fixtures()) out.push_back(p);
  for (const auto& p : offshell_fixtures()) out.push_back(p);
  return out;
}

const MomentumSample p312({q(3), q(1), q(2), q(0)}, q(4));

} // namespace

TEST(PauliLubanski, RestFrameTimeComponentVanishes) {
  for (RepKind k : all_rep_kinds()) {
    PLVector pl = build_pl(rep(k), FourVector({1, 0, 0, 0}));
    EXPECT_TRUE(pl[0].is_zero()) << to_string(k);
  }
}

// Property: p^mu W_mu = 0 and [W^2, W_mu] = 0 for every rep and fixture momentum.
TEST(PauliLubanski, TransversalityAndCommutingCasimir) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (const auto& p : every_fixture()) EXPECT_TRUE(pl_properties(build_pl(r, p.p())).passed()) << to_string(k) << " " << p.str();
  }
}

// Property: W^2 = -(3/4) p^2 I for the spin-1/2 reps, on and off shell.
TEST(PauliLubanski, SpinHalfCasimirIsFullMatrixIdentity) {
  for (RepKind k : {RepKind::dirac_bispinor, RepKind::weyl_left}) {
    auto r = rep(k);
    for (const auto& p : every_fixture())
      EXPECT_EQ(casimir_w2(build_pl(r, p.p())), Scalar(q(-3, 4) * p.mass_squared()) * r->identity()) << p.str();
  }
  EXPECT_EQ(casimir_w2(build_pl(rep(RepKind::dirac_bispinor), p312.p())), Scalar(-3) * Matrix::identity(4));
}

TEST(PauliLubanski, DiracClosedForm) {
  auto r = rep(RepKind::dirac_bispinor);
  for (const auto& p : every_fixture()) {
    PLVector pl = build_pl(r, p.p());
    for (std::size_t mu = 0; mu < 4; ++mu) EXPECT_EQ(pl[mu], dirac_pl_closed_form(p.p(), mu));
  }
}

// Multiplicities are checked against the naive oracle on the same W^2 - c m^2 matrices.
TEST(PauliLubanski, SpinSpectraMatchOracle) {
  const std::map<RepKind, std::vector<std::size_t>> expected = {
      {RepKind::dirac_bispinor, {0, 4, 0, 0}}, {RepKind::weyl_left, {0, 2, 0, 0}},  {RepKind::vector, {1, 0, 3, 0}},
      {RepKind::so3c_vector, {0, 0, 3, 0}},    {RepKind::sym_tensor, {2, 0, 3, 5}}, {RepKind::slash_conjugation, {4, 0, 12, 0}},
      {RepKind::spinor2_conjugation, {1, 0, 3, 0}}};
  for (const auto& [k, mult] : expected) {
    auto r = rep(k);
    for (const auto& p : massive_fixtures(4)) {
      SpinSpectrum s = spin_spectrum(r, p);
      EXPECT_EQ(s.multiplicities, mult) << to_string(k) << " " << p.str();
      EXPECT_EQ(s.total(), r->dim);
      Matrix w2 = casimir_w2(build_pl(r, p.p()));
      for (std::size_t i = 0; i < s.eigenvalue_candidates.size(); ++i) {
        Matrix shifted = w2 - Scalar(s.eigenvalue_candidates[i] * p.mass_squared()) * r->identity();
        EXPECT_EQ(naive_kernel(shifted).size(), s.multiplicities[i]);
      }
    }
  }
  EXPECT_THROW(spin_spectrum(rep(RepKind::vector), massless_fixtures()[0]), DomainError);
}

TEST(PauliLubanski, VectorScalarPartIsSpannedByMomentum) {
  Matrix w2 = casimir_w2(build_pl(rep(RepKind::vector), p312.p()));
  auto k = naive_kernel(w2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(same_subspace(k, {p312.p().as_column()}));
  EXPECT_EQ(naive_kernel(w2 + Scalar(8) * Matrix::identity(4)).size(), 3u);
}

TEST(PauliLubanski, WeylHelicityIsMinusHalf) {
  auto r = rep(RepKind::weyl_left);
  std::vector<Rational> cands = {q(-3, 2), q(-1), q(-1, 2), q(0), q(1, 2), q(1), q(3, 2)};
  for (const auto& p : massless_fixtures()) {
    for (const auto& e : helicity_scan(r, p, cands)) {
      EXPECT_EQ(e.kernel_dim, e.lambda == q(-1, 2) ? 1u : 0u) << p.str() << " lambda " << e.lambda;
      EXPECT_EQ(naive_kernel(helicity_system(build_pl(r, p.p()), e.lambda)).size(), e.kernel_dim);
    }
  }
}

TEST(PauliLubanski, So3cHelicitySignIsStable) {
  auto r = rep(RepKind::so3c_vector);
  for (const auto& p : massless_fixtures()) {
    auto scan = helicity_scan(r, p, {q(-1), q(1)});
    EXPECT_EQ(scan[0].kernel_dim, 1u) << p.str();
    EXPECT_EQ(scan[1].kernel_dim, 0u) << p.str();
  }
}

// Property: on every helicity eigenspace W^2 v = 0 and p^mu W_mu v = 0.
TEST(PauliLubanski, HelicityEigenspacesAreNull) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (const auto& p : massless_fixtures()) {
      PLVector pl = build_pl(r, p.p());
      Matrix w2 = casimir_w2(pl), pw = pl_contraction(pl);
      for (const auto& e : helicity_scan(r, p))
        for (const auto& v : e.basis) {
          EXPECT_TRUE((w2 * v).is_zero());
          EXPECT_TRUE((pw * v).is_zero());
        }
    }
  }
}

TEST(PauliLubanski, SymTensorScanReportsHelicityTwo) {
  auto scan = helicity_scan(rep(RepKind::sym_tensor), massless_fixtures()[0], {q(-2), q(2)});
  ASSERT_EQ(scan.size(), 2u);
  EXPECT_EQ(scan[0].lambda, q(-2));
  EXPECT_EQ(scan[1].lambda, q(2));
  EXPECT_THROW(helicity_scan(rep(RepKind::weyl_left), p312), DomainError);
}

TEST(PauliLubanski, DiracIdentityHoldsOnlyOnSolutions) {
  Report rest = dirac_pl_identity(massive_fixtures(4)[0]);
  EXPECT_TRUE(rest.passed());
  auto k = naive_kernel(Scalar(2) * lubanski::gamma(0) - Scalar(2) * Matrix::identity(4));
  EXPECT_TRUE(same_subspace(k, {Matrix::unit_vector(4, 0), Matrix::unit_vector(4, 1)}));
  Report moving = dirac_pl_identity(p312);
  EXPECT_TRUE(moving.find("holds_on_solutions")->passed);
  EXPECT_TRUE(moving.find("fails_on_full_space")->passed);
  bool nonzero = false;
  PLVector pl = build_pl(rep(RepKind::dirac_bispinor), p312.p());
  for (std::size_t mu = 0; mu < 4; ++mu) nonzero = nonzero || pl[mu] != dirac_pl_target(p312, q(2), mu);
  EXPECT_TRUE(nonzero);
  EXPECT_THROW(dirac_pl_identity(massless_fixtures()[0]), DomainError);
}

// Property: D W_mu(p) D^-1 = Lambda^nu_mu W_nu(Lambda p).
TEST(PauliLubanski, Covariance) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (const auto& e : element_fixtures())
      for (const auto& p : {p312, massless_fixtures()[1]}) EXPECT_TRUE(pl_covariance(group_element(r, e), p.p())) << to_string(k);
  }
}
