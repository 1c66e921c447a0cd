#include <gtest/gtest.h>

#include "lubanski/minkowski.hpp"

using namespace lubanski;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<LorentzMatrix> fixture_lorentz() {
  return {LorentzMatrix(),
          fundamental_boost(1, q(5, 4), q(3, 4)),
          fundamental_boost(2, q(17, 8), q(15, 8)),
          fundamental_boost(3, q(13, 5), q(-12, 5)),
          fundamental_rotation(12, q(-7, 25), q(24, 25)),
          fundamental_rotation(23, q(3, 5), q(4, 5)),
          fundamental_rotation(31, q(0), q(1)),
          fundamental_boost(1, q(5, 4), q(3, 4)) * fundamental_rotation(23, q(3, 5), q(4, 5))};
}

std::vector<MomentumSample> all_momenta() {
  std::vector<MomentumSample> out = massive_fixtures(4);
  for (const auto& p : massive_fixtures(2)) out.push_back(p);
  for (const auto& p : massless_fixtures()) out.push_back(p);
  for (const auto& p : offshell_fixtures()) out.push_back(p);
  return out;
}

} // namespace

TEST(Minkowski, LeviCivitaValues) {
  EXPECT_EQ(levi_civita(0, 1, 2, 3), 1);
  EXPECT_EQ(levi_civita(0, 1, 3, 2), -1);
  EXPECT_EQ(levi_civita(0, 0, 1, 2), 0);
  EXPECT_EQ(levi_civita_upper(0, 1, 2, 3), -1);
  EXPECT_EQ(levi_civita(3, 2, 1, 0), 1);
  EXPECT_EQ(levi_civita_support().size(), 24u);
  EXPECT_THROW(levi_civita(0, 1, 2, 4), DomainError);
}

TEST(Minkowski, MetricAndSquare) {
  EXPECT_EQ(metric(0), 1);
  EXPECT_EQ(metric(2), -1);
  EXPECT_EQ(metric(1, 2), 0);
  EXPECT_THROW(metric(4), DomainError);
  FourVector p({3, 1, 2, 0});
  EXPECT_EQ(p.square(), Scalar(4));
  EXPECT_EQ(p.lowered()[1], Scalar(-1));
  EXPECT_EQ(p.lowered().square(), Scalar(4));
  EXPECT_EQ(minkowski_dot(p, p.lowered()), Scalar(4));
}

TEST(Minkowski, FixturesLieOnTheirShells) {
  auto massive = massive_fixtures(4);
  bool has_312 = false, all_spatial = false;
  for (const auto& s : massive) {
    EXPECT_EQ(s.p().square(), Scalar(4));
    has_312 = has_312 || s.p() == FourVector({3, 1, 2, 0});
    all_spatial = all_spatial || (!s.p()[1].is_zero() && !s.p()[2].is_zero() && !s.p()[3].is_zero());
  }
  EXPECT_TRUE(has_312);
  EXPECT_TRUE(all_spatial);
  EXPECT_EQ(massive_fixtures(1).front().p(), FourVector({1, 0, 0, 0}));
  bool has_null = false;
  for (const auto& s : massless_fixtures()) {
    EXPECT_TRUE(s.p().square().is_zero());
    has_null = has_null || s.p() == FourVector({3, 2, 2, 1});
  }
  EXPECT_TRUE(has_null);
  for (const auto& s : massive_fixtures(q(7, 3))) EXPECT_EQ(s.p().square(), Scalar(q(7, 3)));
  for (const auto& s : offshell_fixtures()) EXPECT_FALSE(s.is_massless());
  EXPECT_THROW(massive_fixtures(0), DomainError);
  EXPECT_THROW(MomentumSample({q(1), q(0), q(0), q(0)}, q(2)), DomainError);
}

// Property: raise(lower(p)) = p.
TEST(Minkowski, RaiseLowerRoundTrip) {
  for (const auto& s : all_momenta()) {
    EXPECT_EQ(s.p().lowered().raised(), s.p());
    EXPECT_EQ(s.lower(), s.p().lowered());
  }
}

TEST(Minkowski, BoostExamples) {
  EXPECT_EQ(fundamental_boost(2, q(1), q(0)).matrix(), Matrix::identity(4));
  LorentzMatrix b = fundamental_boost(1, q(5, 4), q(3, 4));
  EXPECT_EQ(b(0, 0), Scalar(q(5, 4)));
  EXPECT_EQ(b(0, 1), Scalar(q(-3, 4)));
  EXPECT_TRUE(b.preserves_metric());
  EXPECT_EQ((b * fundamental_boost(1, q(5, 4), q(-3, 4))).matrix(), Matrix::identity(4));
  EXPECT_EQ(b.inverse().matrix(), fundamental_boost(1, q(5, 4), q(-3, 4)).matrix());
  EXPECT_THROW(fundamental_boost(1, q(1), q(1)), DomainError);
  EXPECT_THROW(fundamental_boost(1, q(-5, 4), q(3, 4)), DomainError);
  EXPECT_THROW(fundamental_boost(4, q(1), q(0)), DomainError);
}

TEST(Minkowski, RotationExamples) {
  EXPECT_EQ(fundamental_rotation(31, q(1), q(0)).matrix(), Matrix::identity(4));
  auto [c, s] = circular_double(q(3, 5), q(4, 5));
  EXPECT_EQ(c, q(-7, 25));
  EXPECT_EQ(s, q(24, 25));
  EXPECT_TRUE(fundamental_rotation(12, c, s).is_proper_orthochronous());
  LorentzMatrix quarter = fundamental_rotation(12, q(0), q(1));
  EXPECT_EQ((quarter * quarter * quarter * quarter).matrix(), Matrix::identity(4));
  EXPECT_NE((quarter * quarter).matrix(), Matrix::identity(4));
  EXPECT_THROW(fundamental_rotation(12, q(1), q(1)), DomainError);
  EXPECT_THROW(fundamental_rotation(13, q(1), q(0)), DomainError);
  auto [ch, sh] = hyperbolic_double(q(5, 4), q(3, 4));
  EXPECT_EQ(ch, q(17, 8));
  EXPECT_EQ(sh, q(15, 8));
}

// Property: every fixture is proper orthochronous, satisfies the determinant identity
// for the Levi-Civita symbol, and preserves p^2.
TEST(Minkowski, FixtureLorentzInvariants) {
  for (const auto& l : fixture_lorentz()) {
    EXPECT_TRUE(l.preserves_metric());
    EXPECT_EQ(l.det(), Scalar(1));
    EXPECT_TRUE(l.is_proper_orthochronous());
    EXPECT_TRUE(levi_civita_det_identity(l));
    for (const auto& s : all_momenta()) EXPECT_EQ(l.apply(s.p()).square(), s.p().square());
  }
}

TEST(Minkowski, DeterminantIdentityDetectsImproperMatrix) {
  LorentzMatrix parity(Matrix::diagonal({1, -1, -1, -1}), LorentzKind::product);
  EXPECT_TRUE(parity.preserves_metric());
  EXPECT_EQ(parity.det(), Scalar(-1));
  EXPECT_FALSE(parity.is_proper_orthochronous());
  EXPECT_TRUE(levi_civita_det_identity(parity));
  LorentzMatrix scaled(Scalar(2) * Matrix::identity(4), LorentzKind::product);
  EXPECT_FALSE(scaled.preserves_metric());
}
