#pragma once

#include <array>
#include <memory>
#include <vector>

#include "lubanski/group_elements.hpp"

namespace lubanski {

// W_mu = (1/2) e_{mu nu s t} p^nu S^{st} with S = -i M. The orbital part
// e_{mu nu s t} p^nu x^s p^t drops out on a plane wave by antisymmetry.
struct PLVector {
  std::shared_ptr<const Representation> rep;
  FourVector p;  // upper
  std::array<Matrix, 4> components;  // lower index

  const Matrix& operator[](std::size_t mu) const { return components.at(mu); }
};

inline PLVector build_pl(std::shared_ptr<const Representation> rep, const FourVector& momentum) {
  FourVector p = momentum.raised();
  std::array<Matrix, 4> w;
  for (auto& m : w) m = Matrix::zeros(rep->dim, rep->dim);
  for (const auto& t : levi_civita_support()) {
    const Scalar& pn = p[t.idx[1]];
    if (pn.is_zero()) continue;
    w[t.idx[0]] = w[t.idx[0]] + (Scalar::frac(t.sign, 2) * pn) * rep->S(t.idx[2], t.idx[3]);
  }
  return {std::move(rep), p, std::move(w)};
}

inline PLVector build_pl(const Representation& rep, const FourVector& p) {
  return build_pl(std::make_shared<const Representation>(rep), p);
}

// W^2 = g^{mu nu} W_mu W_nu.
inline Matrix casimir_w2(const PLVector& pl) {
  Matrix w2 = Matrix::zeros(pl.rep->dim, pl.rep->dim);
  for (std::size_t mu = 0; mu < 4; ++mu) w2 = w2 + Scalar(metric(mu)) * (pl[mu] * pl[mu]);
  return w2;
}

// p^mu W_mu.
inline Matrix pl_contraction(const PLVector& pl) {
  Matrix s = Matrix::zeros(pl.rep->dim, pl.rep->dim);
  for (std::size_t mu = 0; mu < 4; ++mu) s = s + pl.p[mu] * pl[mu];
  return s;
}

struct SpinSpectrum {
  std::vector<Rational> eigenvalue_candidates;  // c in W^2 = c m^2
  std::vector<std::size_t> multiplicities;
  std::size_t total() const {
    std::size_t n = 0;
    for (auto m : multiplicities) n += m;
    return n;
  }
};

inline std::vector<Rational> default_spin_candidates() {
  return {Rational(0), Rational(-3, 4), Rational(-2), Rational(-6)};
}

// Multiplicity of each candidate c as the kernel dimension of W^2 - c m^2 I.
inline SpinSpectrum spin_spectrum(std::shared_ptr<const Representation> rep, const MomentumSample& p,
                                  const std::vector<Rational>& candidates = default_spin_candidates()) {
  if (p.mass_squared() <= 0) throw DomainError("spin spectrum needs a massive momentum, got " + p.str());
  Matrix w2 = casimir_w2(build_pl(rep, p.p()));
  SpinSpectrum out;
  for (const auto& c : candidates) {
    Matrix shifted = w2 - Scalar(c * p.mass_squared()) * rep->identity();
    out.eigenvalue_candidates.push_back(c);
    out.multiplicities.push_back(rank_and_kernel(shifted).kernel_dim);
  }
  return out;
}

struct HelicityEntry {
  Rational lambda;
  std::size_t kernel_dim = 0;
  std::vector<Matrix> basis;
};

inline std::vector<Rational> default_helicity_candidates() {
  std::vector<Rational> out;
  for (int k = -4; k <= 4; ++k) out.emplace_back(k, 2);
  for (auto& r : out) r.canonicalize();
  return out;
}

// The four blocks W_mu - lambda p_mu I stacked into one system per lambda.
inline Matrix helicity_system(const PLVector& pl, const Rational& lambda) {
  FourVector pl_low = pl.p.lowered();
  std::vector<Matrix> blocks;
  for (std::size_t mu = 0; mu < 4; ++mu) blocks.push_back(pl[mu] - (Scalar(lambda) * pl_low[mu]) * pl.rep->identity());
  return vstack(blocks);
}

inline std::vector<HelicityEntry> helicity_scan(std::shared_ptr<const Representation> rep, const MomentumSample& p,
                                                const std::vector<Rational>& candidates = default_helicity_candidates()) {
  if (!p.is_massless() || p.p().is_zero()) throw DomainError("helicity scan needs a nonzero null momentum, got " + p.str());
  PLVector pl = build_pl(rep, p.p());
  std::vector<HelicityEntry> out;
  for (const auto& l : candidates) {
    KernelReport k = rank_and_kernel(helicity_system(pl, l));
    out.push_back({l, k.kernel_dim, k.kernel_basis});
  }
  return out;
}

// W_mu = -(1/2) gamma_5 Sigma_{mu nu} p^nu for the Dirac rep, as matrices.
inline Matrix dirac_pl_closed_form(const FourVector& momentum, std::size_t mu) {
  FourVector p = momentum.raised();
  GeneratorTable sig_l = lower_both(dirac_sigma_table());
  Matrix s = Matrix::zeros(4, 4);
  for (std::size_t nu = 0; nu < 4; ++nu) s = s + p[nu] * sig_l[mu][nu];
  return Scalar::frac(-1, 2) * gamma5_lower() * s;
}

// (1/2)(p_mu + m gamma_mu) gamma_5.
inline Matrix dirac_pl_target(const MomentumSample& p, const Rational& m, std::size_t mu) {
  return Scalar::frac(1, 2) * (p.lower(mu) * Matrix::identity(4) + Scalar(m) * gamma_lower(mu)) * gamma5_lower();
}

// Holds on the kernel of gamma.p - m, not on the whole bispinor space.
inline Report dirac_pl_identity(const MomentumSample& p) {
  Rational m;
  if (p.mass_squared() <= 0 || !detail::rational_sqrt(p.mass_squared(), m))
    throw DomainError("Dirac PL identity needs a massive momentum with rational mass, got " + p.str());
  auto rep = std::make_shared<const Representation>(build_representation(RepKind::dirac_bispinor));
  PLVector pl = build_pl(rep, p.p());
  KernelReport sol = rank_and_kernel(slash(p.p()) - Scalar(m) * Matrix::identity(4));
  std::size_t bad = 0;
  bool full_space_zero = true;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix diff = pl[mu] - dirac_pl_target(p, m, mu);
    full_space_zero = full_space_zero && diff.is_zero();
    for (const auto& v : sol.kernel_basis)
      if (!(diff * v).is_zero()) ++bad;
  }
  Report rep_out;
  rep_out.add("solution_space_dim", sol.kernel_dim == 2, "kernel of gamma.p - m has dim " + std::to_string(sol.kernel_dim));
  rep_out.add("holds_on_solutions", bad == 0 && sol.kernel_dim > 0,
              std::to_string(4 * sol.kernel_dim - bad) + "/" + std::to_string(4 * sol.kernel_dim) + " component checks vanish");
  rep_out.add("fails_on_full_space", !full_space_zero, "W_mu - (p_mu + m gamma_mu) gamma_5 / 2 is a nonzero matrix");
  return rep_out;
}

// D W_mu(p) D^-1 = Lambda^nu_mu W_nu(Lambda p) for det Lambda = 1.
inline bool pl_covariance(const GroupElement& g, const FourVector& p) {
  PLVector w = build_pl(g.rep, p);
  PLVector wl = build_pl(g.rep, g.fundamental.apply(p));
  Matrix dinv = inverse(g.matrix);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix rhs = Matrix::zeros(g.rep->dim, g.rep->dim);
    for (std::size_t nu = 0; nu < 4; ++nu) rhs = rhs + g.fundamental(nu, mu) * wl[nu];
    if (g.matrix * w[mu] * dinv != rhs) return false;
  }
  return true;
}

// Transversality and W^2 commuting with every W_mu.
inline Report pl_properties(const PLVector& pl) {
  Report rep;
  rep.add("transversal", pl_contraction(pl).is_zero(), "p^mu W_mu = 0");
  Matrix w2 = casimir_w2(pl);
  bool ok = true;
  for (std::size_t mu = 0; mu < 4; ++mu) ok = ok && commutator(w2, pl[mu]).is_zero();
  rep.add("w2_commutes", ok, "[W^2, W_mu] = 0");
  return rep;
}

} // namespace lubanski
