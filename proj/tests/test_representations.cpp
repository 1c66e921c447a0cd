#include <gtest/gtest.h>

#include "lubanski/group_elements.hpp"
#include "support.hpp"

using namespace lubanski;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::shared_ptr<const Representation> rep(RepKind k) { return std::make_shared<const Representation>(build_representation(k)); }

} // namespace

TEST(Representations, EveryRepPassesItsStructureCheck) {
  for (RepKind k : all_rep_kinds()) {
    Report r = structure_check(*rep(k));
    EXPECT_TRUE(r.passed()) << to_string(k) << ": " << (r.failures().empty() ? "" : r.failures().front());
    EXPECT_NE(r.find("closure"), nullptr);
  }
}

TEST(Representations, Dimensions) {
  const std::map<RepKind, std::size_t> dims = {{RepKind::dirac_bispinor, 4}, {RepKind::weyl_left, 2},
                                               {RepKind::vector, 4},         {RepKind::so3c_vector, 3},
                                               {RepKind::slash_conjugation, 16}, {RepKind::spinor2_conjugation, 4},
                                               {RepKind::sym_tensor, 10}};
  for (auto [k, d] : dims) EXPECT_EQ(rep(k)->dim, d) << to_string(k);
  EXPECT_EQ(rep_kind_from_string("sym_tensor"), RepKind::sym_tensor);
  EXPECT_THROW(rep_kind_from_string("tachyon"), DomainError);
}

TEST(Representations, CliffordAnticommutator) {
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      EXPECT_EQ(anticommutator(lubanski::gamma(mu), lubanski::gamma(nu)), Scalar(2 * metric(mu, nu)) * Matrix::identity(4));
  EXPECT_EQ(Scalar::i() * lubanski::gamma(0) * lubanski::gamma(1) * lubanski::gamma(2) * lubanski::gamma(3), gamma5());
  EXPECT_EQ(gamma5() * gamma5(), Matrix::identity(4));
}

TEST(Representations, DiracSigmaBlocks) {
  GeneratorTable s = dirac_sigma_table();
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(s[0][k], alpha(k));
  // Sigma^{12} = -i Sigma_3 in the spin-block form
  EXPECT_EQ(s[1][2], -Scalar::i() * spin_sigma(3));
}

TEST(Representations, Invariants) {
  auto [i1, i2] = invariants_I1_I2(*rep(RepKind::dirac_bispinor));
  EXPECT_EQ(i1, Scalar(-12) * Matrix::identity(4));
  EXPECT_EQ(i2, Scalar(Rational(0), Rational(24)) * gamma5_lower());
  EXPECT_TRUE((i2 + Scalar(Rational(0), Rational(2)) * i1 * gamma5_lower()).is_zero());
  EXPECT_THROW(invariants_I1_I2(*rep(RepKind::weyl_left)), DomainError);
}

TEST(Representations, SpinMatrices) {
  Matrix sum = Matrix::zeros(3, 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    Matrix s = spin_matrix(k);
    sum = sum + s * s;
    EXPECT_EQ(s * s * s, -s);
  }
  EXPECT_EQ(sum, Scalar(-2) * Matrix::identity(3));
  EXPECT_EQ(commutator(spin_matrix(1), spin_matrix(2)), spin_matrix(3));
}

TEST(Representations, SymmetricBasis) {
  const std::vector<std::pair<std::size_t, std::size_t>> expected = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                                                     {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  EXPECT_EQ(sym_pairs(), expected);
  EXPECT_EQ(sym_index(2, 1), 5u);
  EXPECT_EQ(sym_projection() * sym_inclusion(), Matrix::identity(10));
  Matrix t = Matrix::generate(4, 4, [](std::size_t a, std::size_t b) { return Scalar(long(a + b + a * b)); });
  EXPECT_EQ(sym_unpack(sym_pack(t)), t);
}

// Property: every generator table closes under the Lorentz algebra for all 36 pairs.
TEST(Representations, ClosureForAllPairs) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          for (std::size_t d = 0; d < 4; ++d)
            ASSERT_EQ(commutator(r->M(a, b), r->M(c, d)), lorentz_algebra_rhs(r->generators, a, b, c, d)) << to_string(k);
  }
}

TEST(Representations, SpinFactorConvention) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (const auto& pl : generator_planes()) EXPECT_EQ(r->S(pl.a, pl.b), -Scalar::i() * r->M(pl.a, pl.b));
  }
}

TEST(Representations, BrokenTableFailsClosure) {
  Representation r = build_representation(RepKind::vector);
  r.generators[0][1] = Scalar(2) * r.generators[0][1];
  r.generators[1][0] = -r.generators[0][1];
  Report rep_out = structure_check(r);
  EXPECT_FALSE(rep_out.passed());
  EXPECT_FALSE(rep_out.find("closure")->passed);
}

TEST(GroupElements, DiracBoostExample) {
  auto r = rep(RepKind::dirac_bispinor);
  GroupElement g = group_element(r, {ElementKind::boost, 1, q(5, 4), q(3, 4)});
  EXPECT_EQ(g.matrix, Scalar(q(5, 4)) * Matrix::identity(4) - Scalar(q(3, 4)) * alpha(1));
  EXPECT_EQ(g.fundamental(0, 0), Scalar(q(17, 8)));
  EXPECT_EQ(g.fundamental(0, 1), Scalar(q(-15, 8)));
  Matrix inv = inverse(g.matrix);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix rhs = Matrix::zeros(4, 4);
    for (std::size_t nu = 0; nu < 4; ++nu) rhs = rhs + g.fundamental(mu, nu) * lubanski::gamma(nu);
    EXPECT_EQ(inv * lubanski::gamma(mu) * g.matrix, rhs);
  }
}

TEST(GroupElements, WeylBoostConjugatesSigma2) {
  auto r = rep(RepKind::weyl_left);
  GroupElement g = group_element(r, {ElementKind::boost, 1, q(5, 4), q(3, 4)});
  Matrix lhs = inverse(g.matrix) * pauli(2) * g.matrix;
  Matrix expected = Scalar(q(17, 8)) * pauli(2) + Scalar(Rational(0), q(15, 8)) * pauli(3);
  EXPECT_EQ(lhs, expected);
  EXPECT_NE(lhs, pauli(2));
}

TEST(GroupElements, DiracRotationExample) {
  auto r = rep(RepKind::dirac_bispinor);
  GroupElement g = group_element(r, {ElementKind::rotation, 12, q(3, 5), q(4, 5)});
  EXPECT_EQ(g.fundamental(1, 1), Scalar(q(-7, 25)));
  EXPECT_EQ(g.fundamental(1, 2), Scalar(q(24, 25)));
  EXPECT_TRUE(covariance_check(g).passed());
}

TEST(GroupElements, TrivialHalfPairIsIdentity) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    EXPECT_EQ(group_element(r, {ElementKind::boost, 2, q(1), q(0)}).matrix, r->identity()) << to_string(k);
    EXPECT_EQ(group_element(r, {ElementKind::rotation, 31, q(1), q(0)}).matrix, r->identity()) << to_string(k);
  }
}

// Property: for every rep and every fixture element the generators transform as a tensor.
TEST(GroupElements, CovarianceForEveryRepAndFixture) {
  for (RepKind k : all_rep_kinds()) {
    auto r = rep(k);
    for (const auto& e : element_fixtures()) {
      Report c = covariance_check(group_element(r, e));
      EXPECT_TRUE(c.passed()) << to_string(k) << " " << e.label() << ": " << (c.failures().empty() ? "" : c.failures().front());
    }
    GroupElement prod = compose(group_element(r, element_fixtures()[0]), group_element(r, element_fixtures()[4]));
    EXPECT_TRUE(covariance_check(prod).passed()) << to_string(k);
  }
}

TEST(GroupElements, InvalidPairsRejected) {
  auto r = rep(RepKind::dirac_bispinor);
  EXPECT_THROW(group_element(r, {ElementKind::boost, 1, q(1), q(1)}), DomainError);
  EXPECT_THROW(group_element(r, {ElementKind::rotation, 12, q(1), q(1)}), DomainError);
  EXPECT_THROW(group_element(r, {ElementKind::rotation, 14, q(1), q(0)}), DomainError);
  EXPECT_THROW(compose(group_element(r, element_fixtures()[0]), group_element(rep(RepKind::vector), element_fixtures()[0])),
               DomainError);
}

TEST(GroupElements, CasimirMPlusMinusIN) {
  // M_k = (i/2) Sigma_k, N_k = alpha_k / 2
  Matrix m2 = Matrix::zeros(4, 4), n2 = Matrix::zeros(4, 4), mn = Matrix::zeros(4, 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    Matrix m = Scalar(Rational(0), q(1, 2)) * spin_sigma(k), n = Scalar(q(1, 2)) * alpha(k);
    m2 = m2 + m * m;
    n2 = n2 + n * n;
    mn = mn + m * n;
  }
  EXPECT_EQ(n2, Scalar(q(3, 4)) * Matrix::identity(4));
  EXPECT_EQ(m2, -n2);
  EXPECT_EQ(mn, Scalar(Rational(0), q(3, 4)) * gamma5());
}

TEST(GroupElements, MasslessBlockTransform) {
  Report r = massless_block_transform();
  EXPECT_TRUE(r.passed());
  WeylBlocks b = weyl_blocks(FourVector({1, 0, 0, 1}), q(0));
  // computed directly: upper-right p0 + sigma.p annihilates (0,1), lower-left annihilates (1,0)
  EXPECT_TRUE((b.upper_right * Matrix::column({0, 1})).is_zero());
  EXPECT_TRUE((b.lower_left * Matrix::column({1, 0})).is_zero());
  EXPECT_EQ(lubanski::testing::naive_kernel(b.upper_right).size(), 1u);
  Matrix u = weyl_basis_change();
  EXPECT_EQ(u * u, Scalar(2) * Matrix::identity(4));
}
