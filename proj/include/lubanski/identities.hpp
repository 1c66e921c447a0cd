#pragma once

#include <string>
#include <vector>

#include "lubanski/wave_systems.hpp"

namespace lubanski {

// Bilinear sector of plane waves: psi = v exp(-i q.x), psi-bar = u-bar exp(+i p.x).
// Derivatives act as d psi -> -i q psi, d psi-bar -> +i p psi-bar, so
// d_mu (psi-bar X psi) -> i (p - q)_mu (u-bar X v); a balance law d_mu J^mu = 0
// holds on the pair exactly when (p - q)_mu J^mu vanishes.

struct SolutionPair {
  Family family;
  MomentumSample p;
  MomentumSample q;
  Rational mass_p;
  Rational mass_q;
  std::vector<Matrix> u;  // kernel basis at p
  std::vector<Matrix> v;  // kernel basis at q
};

inline SolutionPair make_pair(Family family, const MomentumSample& p, const Rational& mp, const MomentumSample& q,
                              const Rational& mq) {
  return {family,
          p,
          q,
          mp,
          mq,
          kernel_of(assemble(family, p, mp)).kernel_basis,
          kernel_of(assemble(family, q, mq)).kernel_basis};
}

inline SolutionPair make_pair(Family family, const MomentumSample& p, const MomentumSample& q, const Rational& m) {
  return make_pair(family, p, m, q, m);
}

// u-bar = u^dagger gamma^0, as a 1x4 row.
inline Matrix dirac_bar(const Matrix& u) { return u.conj_transpose() * gamma(0); }

inline Scalar bilinear(const Matrix& u, const Matrix& x, const Matrix& v) { return (dirac_bar(u) * x * v)(0, 0); }

namespace detail {

// Run a residual over every (u, v) pairing; returns the number of pairings with a nonzero residual.
template <class F>
std::pair<std::size_t, std::size_t> over_pairs(const SolutionPair& s, F residual_is_zero) {
  std::size_t bad = 0, total = 0;
  for (const auto& u : s.u)
    for (const auto& v : s.v) {
      ++total;
      if (!residual_is_zero(u, v)) ++bad;
    }
  return {bad, total};
}

inline std::string pairs_detail(std::pair<std::size_t, std::size_t> r) {
  return std::to_string(r.second - r.first) + "/" + std::to_string(r.second) + " pairings vanish";
}

inline void require_dirac(const SolutionPair& s) {
  if (s.family != Family::dirac_gamma && s.family != Family::dirac_sigma && s.family != Family::dirac_pl)
    throw DomainError("Dirac identities need a Dirac family pair, got " + to_string(s.family));
  if (s.u.empty() || s.v.empty()) throw DomainError("empty solution space in pair");
}

} // namespace detail

// (p - q)_mu u-bar gamma^mu v = 0
inline Scalar current_residual(const SolutionPair& s, const Matrix& u, const Matrix& v) {
  FourVector d = s.p.p() - s.q.p();
  FourVector dl = d.lowered();
  Scalar r;
  for (std::size_t mu = 0; mu < 4; ++mu) r += dl[mu] * bilinear(u, gamma(mu), v);
  return r;
}

inline Report current_conservation(const SolutionPair& s) {
  detail::require_dirac(s);
  Report rep;
  auto r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) { return current_residual(s, u, v).is_zero(); });
  rep.add("divergence_vanishes", r.first == 0, detail::pairs_detail(r));
  return rep;
}

// Multi-index instance: d_mu[(D^a psi-bar) gamma^mu (D^b psi)] with D^r a monomial in d^mu.
inline Scalar multi_index_residual(const SolutionPair& s, const std::array<unsigned, 4>& a, const std::array<unsigned, 4>& b,
                                   const Matrix& u, const Matrix& v) {
  const FourVector p = s.p.p(), q = s.q.p();
  Scalar fa(1), fb(1);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (unsigned k = 0; k < a[mu]; ++k) fa *= Scalar::i() * p[mu];
    for (unsigned k = 0; k < b[mu]; ++k) fb *= -Scalar::i() * q[mu];
  }
  return Scalar::i() * fa * fb * current_residual(s, u, v);
}

inline Report multi_index_balance(const SolutionPair& s, const std::array<unsigned, 4>& a, const std::array<unsigned, 4>& b) {
  detail::require_dirac(s);
  Report rep;
  auto r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) { return multi_index_residual(s, a, b, u, v).is_zero(); });
  rep.add("multi_index_divergence_vanishes", r.first == 0, detail::pairs_detail(r));
  return rep;
}

// Momentum images of the Dirac balance relations and energy-momentum forms, with
// T1^{mu nu} = i psi-bar gamma^mu d^nu psi -> q^nu u-bar gamma^mu v and
// T2^{mu nu} = (i/2)[psi-bar gamma^mu d^nu psi - d^nu psi-bar gamma^mu psi] -> (p + q)^nu/2 u-bar gamma^mu v.
inline Report energy_momentum_identities(const SolutionPair& s) {
  detail::require_dirac(s);
  if (s.mass_p != s.mass_q) throw DomainError("energy-momentum identities need equal masses");
  const FourVector p = s.p.p(), q = s.q.p();
  const FourVector ql = q.lowered(), pl = p.lowered(), dl = (p - q).lowered();
  const Scalar m(s.mass_p);
  const GeneratorTable sig = dirac_sigma_table();
  const Scalar half = Scalar::frac(1, 2);
  Report rep;

  auto t1 = [&](const Matrix& u, const Matrix& v, std::size_t mu, std::size_t nu) { return q[nu] * bilinear(u, gamma(mu), v); };
  auto t2 = [&](const Matrix& u, const Matrix& v, std::size_t mu, std::size_t nu) {
    return half * (p[nu] + q[nu]) * bilinear(u, gamma(mu), v);
  };
  auto sigma_q = [&](std::size_t nu) {  // Sigma^{nu l} q_l
    Matrix x = Matrix::zeros(4, 4);
    for (std::size_t l = 0; l < 4; ++l) x = x + ql[l] * sig[nu][l];
    return x;
  };
  auto sigma_p = [&](std::size_t nu) {
    Matrix x = Matrix::zeros(4, 4);
    for (std::size_t l = 0; l < 4; ++l) x = x + pl[l] * sig[nu][l];
    return x;
  };

  auto trace_check = [&](auto t) {
    return detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
      Scalar tr;
      for (std::size_t mu = 0; mu < 4; ++mu) tr += Scalar(metric(mu)) * t(u, v, mu, mu);
      return tr == m * bilinear(u, Matrix::identity(4), v);
    });
  };
  auto r = trace_check(t1);
  rep.add("trace_first_form", r.first == 0, "T^mu_mu = m u-bar v: " + detail::pairs_detail(r));
  r = trace_check(t2);
  rep.add("trace_second_form", r.first == 0, "T^mu_mu = m u-bar v: " + detail::pairs_detail(r));

  // -(p-q)_nu u-bar Sigma^{mu nu} v + (p + q)^mu u-bar v - 2m u-bar gamma^mu v = 0
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    for (std::size_t mu = 0; mu < 4; ++mu) {
      Scalar x = (p[mu] + q[mu]) * bilinear(u, Matrix::identity(4), v) - Scalar(2) * m * bilinear(u, gamma(mu), v);
      for (std::size_t nu = 0; nu < 4; ++nu) x -= dl[nu] * bilinear(u, sig[mu][nu], v);
      if (!x.is_zero()) return false;
    }
    return true;
  });
  rep.add("balance_sigma", r.first == 0, detail::pairs_detail(r));

  // -(p-q)_nu u-bar Sigma^{mu nu} gamma^l v = 2 q^l u-bar gamma^mu v - (p + q)^mu u-bar gamma^l v
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t l = 0; l < 4; ++l) {
        Scalar lhs;
        for (std::size_t nu = 0; nu < 4; ++nu) lhs -= dl[nu] * bilinear(u, sig[mu][nu] * gamma(l), v);
        Scalar rhs = Scalar(2) * q[l] * bilinear(u, gamma(mu), v) - (p[mu] + q[mu]) * bilinear(u, gamma(l), v);
        if (lhs != rhs) return false;
      }
    return true;
  });
  rep.add("balance_energy_momentum", r.first == 0, detail::pairs_detail(r));

  // T1^{mu l} - T2^{l mu} = (i/2) d_nu(psi-bar Sigma^{mu nu} gamma^l psi)
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t l = 0; l < 4; ++l) {
        Scalar div;
        for (std::size_t nu = 0; nu < 4; ++nu) div += Scalar::i() * dl[nu] * bilinear(u, sig[mu][nu] * gamma(l), v);
        if (t1(u, v, mu, l) - t2(u, v, l, mu) != half * Scalar::i() * div) return false;
      }
    return true;
  });
  rep.add("forms_differ_by_divergence", r.first == 0, detail::pairs_detail(r));

  // T1^{mu nu} = m g u-bar v + m u-bar Sigma v - u-bar gamma^mu Sigma^{nu l} q_l v
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) {
        Scalar rhs = m * Scalar(metric(mu, nu)) * bilinear(u, Matrix::identity(4), v) + m * bilinear(u, sig[mu][nu], v) -
                     bilinear(u, gamma(mu) * sigma_q(nu), v);
        if (t1(u, v, mu, nu) != rhs) return false;
      }
    return true;
  });
  rep.add("first_form_sigma", r.first == 0, detail::pairs_detail(r));

  // T2^{mu nu} = m g u-bar v - (1/2)[u-bar gamma^mu Sigma^{nu l} q_l v - u-bar Sigma^{nu l} gamma^mu v p_l]
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) {
        Scalar rhs = m * Scalar(metric(mu, nu)) * bilinear(u, Matrix::identity(4), v) -
                     half * (bilinear(u, gamma(mu) * sigma_q(nu), v) - bilinear(u, sigma_p(nu) * gamma(mu), v));
        if (t2(u, v, mu, nu) != rhs) return false;
      }
    return true;
  });
  rep.add("second_form_sigma", r.first == 0, detail::pairs_detail(r));

  // T^{00} = m u-bar v - u-bar gamma^0 Sigma^{0k} q_k v = u^dagger (alpha.q + m beta) v
  Matrix h = m * beta();
  for (std::size_t k = 1; k <= 3; ++k) h = h + q[k] * alpha(k);
  r = detail::over_pairs(s, [&](const Matrix& u, const Matrix& v) {
    Scalar t00 = t1(u, v, 0, 0);
    Matrix sq = Matrix::zeros(4, 4);
    for (std::size_t k = 1; k <= 3; ++k) sq = sq + ql[k] * sig[0][k];
    Scalar mid = m * bilinear(u, Matrix::identity(4), v) - bilinear(u, gamma(0) * sq, v);
    Scalar ham = (u.conj_transpose() * h * v)(0, 0);
    return t00 == mid && t00 == ham;
  });
  rep.add("hamiltonian_energy", r.first == 0, "T^00 = u^dagger H v: " + detail::pairs_detail(r));
  return rep;
}

// gamma^5 as a quadruple product, and the triple-product identities with gamma_5 (lower).
inline Report gamma5_trace_identity(const FourVector& momentum, const Rational& m) {
  const Scalar i = Scalar::i();
  Report rep;
  Matrix quad = Matrix::zeros(4, 4);
  for (const auto& t : levi_civita_support())
    quad = quad + Scalar(t.sign) * (gamma(t.idx[0]) * gamma(t.idx[1]) * gamma(t.idx[2]) * gamma(t.idx[3]));
  quad = Scalar::frac(1, 24) * i * quad;
  rep.add("gamma5_quadruple", quad == gamma5(), "(i/4!) e_{mnst} g^m g^n g^s g^t = gamma^5");

  std::size_t bad_lower = 0, bad_upper = 0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix trip = Matrix::zeros(4, 4);
    for (const auto& t : levi_civita_support())
      if (t.idx[0] == mu) trip = trip + Scalar(t.sign) * (gamma(t.idx[1]) * gamma(t.idx[2]) * gamma(t.idx[3]));
    trip = Scalar::frac(1, 6) * i * trip;
    if (trip != gamma5_lower() * gamma_lower(mu)) ++bad_lower;
    if (trip != gamma5() * gamma_lower(mu)) ++bad_upper;
  }
  rep.add("triple_product_gamma5_lower", bad_lower == 0, "(i/3!) e_{mnst} g^n g^s g^t = gamma_5 gamma_m for all m");
  rep.add("triple_product_literal_differs", bad_upper == 4, "gamma^5 in place of gamma_5 fails for all four m");

  // (1/2) e_{mnst} (-i p^n) g^m g^s g^t = 3 i gamma_5 gamma_n (-i p^n) = 3 gamma_5 (gamma.p)
  FourVector p = momentum.raised();
  Matrix lhs = Matrix::zeros(4, 4);
  for (const auto& t : levi_civita_support())
    lhs = lhs + (Scalar::frac(t.sign, 2) * -i * p[t.idx[1]]) * (gamma(t.idx[0]) * gamma(t.idx[2]) * gamma(t.idx[3]));
  Matrix rhs = Scalar(3) * gamma5_lower() * slash(p);
  rep.add("derivative_triple_matrix", lhs == rhs, "exact 4x4 equality at p = " + p.str());
  KernelReport k = kernel_of(assemble(Family::dirac_gamma, p, m));
  std::size_t bad = 0;
  for (const auto& u : k.kernel_basis)
    if (lhs * u != rhs * u) ++bad;
  rep.add("derivative_triple_on_solutions", bad == 0 && k.kernel_dim > 0,
          std::to_string(k.kernel_dim - bad) + "/" + std::to_string(k.kernel_dim) + " Dirac solutions");
  return rep;
}

// ---------------------------------------------------------------------------
// Self-dual balance: d_nu (Q*_{mu l s} Q^{l nu s} + Q_{mu l s} Q*^{l nu s}) on two solutions.

namespace detail {

inline Scalar lower3(const tensor::Rank3& t, std::size_t a, std::size_t b, std::size_t c) {
  return Scalar(metric(a) * metric(b) * metric(c)) * t[c](a, b);
}

inline tensor::Rank3 conj3(const tensor::Rank3& t) {
  return {t[0].conj(), t[1].conj(), t[2].conj(), t[3].conj()};
}

} // namespace detail

// Residual vector (p - q)_nu B_mu^nu for Q_a built at p and conj(Q_b) at q.
inline Matrix selfdual_residual(const FourVector& p, const tensor::Rank3& qa, const FourVector& q, const tensor::Rank3& qb) {
  tensor::Rank3 cb = detail::conj3(qb);
  FourVector dl = (p - q).lowered();
  return Matrix::generate(4, 1, [&](std::size_t mu, std::size_t) {
    Scalar r;
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (dl[nu].is_zero()) continue;
      Scalar b;
      for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t s = 0; s < 4; ++s) b += detail::lower3(cb, mu, l, s) * qa[s](l, nu) + detail::lower3(qa, mu, l, s) * cb[s](l, nu);
      r += dl[nu] * b;
    }
    return r;
  });
}

// Second-rank analogue; a rank-2 tensor is embedded as a rank-3 one with a single trailing index.
inline Matrix selfdual_residual2(const FourVector& p, const Matrix& qa, const FourVector& q, const Matrix& qb) {
  Matrix zero = Matrix::zeros(4, 4);
  tensor::Rank3 a{qa, zero, zero, zero}, b{qb, zero, zero, zero};
  return selfdual_residual(p, a, q, b);
}

inline tensor::Rank3 fp_q(const FourVector& p, const Matrix& packed) {
  return tensor::fp_self_dual(tensor::fp_field_tensor(p, sym_unpack(packed)));
}

inline Matrix maxwell_q(const FourVector& p, const Matrix& a) {
  return tensor::self_dual(tensor::field_strength(p, {a(0, 0), a(1, 0), a(2, 0), a(3, 0)}));
}

// Massless spin-2 solutions for the balance: d_nu Q^{mu nu a} = 0, i.e. the divergence rows at null p.
inline std::vector<Matrix> fp_balance_solutions(const FourVector& p) { return rank_and_kernel(divergence_rows(p)).kernel_basis; }

inline Report selfdual_balance(const MomentumSample& ps, const MomentumSample& qs) {
  if (!ps.is_massless() || !qs.is_massless()) throw DomainError("self-dual balance needs null momenta");
  const FourVector p = ps.p(), q = qs.p();
  Report rep;

  // field equation p_nu Q^{mu nu a} = 0 on the solution set
  auto sa = fp_balance_solutions(p), sb = fp_balance_solutions(q);
  std::size_t bad_eq = 0;
  for (const auto& a : sa) {
    tensor::Rank3 qa = fp_q(p, a);
    FourVector pl = p.lowered();
    for (std::size_t al = 0; al < 4; ++al)
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Scalar x;
        for (std::size_t nu = 0; nu < 4; ++nu) x += pl[nu] * qa[al](mu, nu);
        if (!x.is_zero()) ++bad_eq;
      }
  }
  rep.add("third_rank_field_equation", bad_eq == 0 && !sa.empty(),
          std::to_string(sa.size()) + " solutions satisfy p_nu Q^{mu nu a} = 0");

  std::size_t bad = 0, total = 0;
  for (const auto& a : sa)
    for (const auto& b : sb) {
      ++total;
      if (!selfdual_residual(p, fp_q(p, a), q, fp_q(q, b)).is_zero()) ++bad;
    }
  rep.add("third_rank_pair", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " pairings vanish");

  bad = total = 0;
  for (const auto& a : sa) {
    ++total;
    if (!selfdual_residual(p, fp_q(p, a), p, fp_q(p, a)).is_zero()) ++bad;
  }
  rep.add("third_rank_diagonal", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " vanish");

  auto ma = kernel_of(assemble(Family::proca, p, Rational(0))).kernel_basis;
  auto mb = kernel_of(assemble(Family::proca, q, Rational(0))).kernel_basis;
  bad = total = 0;
  for (const auto& a : ma)
    for (const auto& b : mb) {
      ++total;
      if (!selfdual_residual2(p, maxwell_q(p, a), q, maxwell_q(q, b)).is_zero()) ++bad;
    }
  rep.add("second_rank_pair", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " pairings vanish");

  bad = total = 0;
  for (const auto& a : ma) {
    ++total;
    if (!selfdual_residual2(p, maxwell_q(p, a), p, maxwell_q(p, a)).is_zero()) ++bad;
  }
  rep.add("second_rank_diagonal", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " vanish");
  return rep;
}

// ---------------------------------------------------------------------------
// Negative controls: each entry passes when the residual is nonzero.

inline Report identity_negative_controls(const MomentumSample& p, const MomentumSample& q, const Rational& m,
                                         const MomentumSample& q_other, const Rational& m_other, const MomentumSample& null_p,
                                         const MomentumSample& null_q) {
  Report rep;
  // mass mismatch in the current
  SolutionPair mixed = make_pair(Family::dirac_gamma, p, m, q_other, m_other);
  Rational worst = 0;
  for (const auto& u : mixed.u)
    for (const auto& v : mixed.v) worst = std::max(worst, current_residual(mixed, u, v).norm());
  rep.add("current_mass_mismatch", worst != 0, "max |residual|^2 = " + worst.get_str());

  // an off-shell spinor in the sigma balance
  SolutionPair off = make_pair(Family::dirac_gamma, p, q, m);
  off.v = {Matrix::unit_vector(4, 0)};
  Report bal = energy_momentum_identities(off);
  rep.add("balance_off_shell", !bal.find("balance_sigma")->passed, "e_0 is not a solution at q");

  // a non-solution tensor in the self-dual balance
  Matrix e00 = Matrix::unit_vector(10, 0);
  auto sb = fp_balance_solutions(null_q.p());
  bool nonzero = false;
  for (const auto& b : sb) nonzero = nonzero || !selfdual_residual(null_p.p(), fp_q(null_p.p(), e00), null_q.p(), fp_q(null_q.p(), b)).is_zero();
  rep.add("selfdual_non_solution", nonzero, "A = e_(00) at p gives a nonzero balance residual");
  return rep;
}

} // namespace lubanski
