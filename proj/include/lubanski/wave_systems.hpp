#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lubanski/pauli_lubanski.hpp"

namespace lubanski {

// Plane waves psi ~ exp(-i p.x): every derivative d_mu becomes -i p_mu.
inline constexpr const char* plane_wave_convention = "psi ~ exp(-i p.x), d_mu -> -i p_mu";

enum class Family {
  dirac_gamma,
  dirac_sigma,
  dirac_pl,
  dirac_sigma_conjugate,
  weyl_sigma,
  weyl_compact,
  proca,
  maxwell_so3c,
  maxwell_curl_div,
  maxwell_spinor,
  maxwell_laport,
  maxwell_quaternion,
  maxwell_tensor,
  fierz_pauli_full,
  fierz_pauli_a,
  fierz_pauli_final,
  fierz_pauli_gauge,
  einstein_linear,
  einstein_gauge,
};

struct FamilyInfo {
  Family family;
  const char* name;
  std::size_t field_dim;
  const char* field_space;
  bool massless_only;
  bool assumes_shell;  // the reduction substitutes p^2 = m^2; off-shell input still assembles
  const char* anchor;
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::dirac_gamma, "dirac_gamma", 4, "bispinor", false, false, "Dirac equation, gamma-matrix form"},
      {Family::dirac_sigma, "dirac_sigma", 4, "bispinor", false, true, "overdetermined Dirac system in Sigma form"},
      {Family::dirac_pl, "dirac_pl", 4, "bispinor", false, true, "Dirac system from the Pauli-Lubanski vector"},
      {Family::dirac_sigma_conjugate, "dirac_sigma_conjugate", 4, "conjugate bispinor (transposed)", false, true,
       "row system for the Dirac conjugate in Sigma form"},
      {Family::weyl_sigma, "weyl_sigma", 2, "two-spinor", true, true, "overdetermined Weyl system with helicity -1/2"},
      {Family::weyl_compact, "weyl_compact", 2, "two-spinor", true, false, "Weyl equation sigma^mu d_mu phi = 0"},
      {Family::proca, "proca", 4, "four-potential", false, false, "Proca equation from the second Casimir"},
      {Family::maxwell_so3c, "maxwell_so3c", 3, "complex field F = E + iH", true, true,
       "overdetermined Maxwell system with SO(3,C) generators"},
      {Family::maxwell_curl_div, "maxwell_curl_div", 3, "complex field F = E + iH", true, false,
       "div F = 0, curl F = i d_0 F"},
      {Family::maxwell_spinor, "maxwell_spinor", 4, "vectorized 2x2 spinor matrix Q", true, true,
       "second-rank spinor form of Maxwell's equations"},
      {Family::maxwell_laport, "maxwell_laport", 3, "complex field F = E + iH", true, false,
       "(d_0 + sigma.grad)(sigma.F) = 0, quaternion-like Pauli form"},
      {Family::maxwell_quaternion, "maxwell_quaternion", 3, "complex field F = E + iH", true, false,
       "d Q = 0 with the 4x4 matrix Q = F.J"},
      {Family::maxwell_tensor, "maxwell_tensor", 3, "complex field F = E + iH", true, false,
       "d_nu Q^{mu nu} = 0 for the self-dual field tensor"},
      {Family::fierz_pauli_full, "fierz_pauli_full", 10, "symmetric tensor A^{ab}", false, false,
       "massive spin-2 equation from w_mu acting through the third-rank field tensor"},
      {Family::fierz_pauli_a, "fierz_pauli_a", 10, "symmetric tensor A^{ab}", false, false,
       "massive spin-2 equation in terms of potentials"},
      {Family::fierz_pauli_final, "fierz_pauli_final", 10, "symmetric tensor A^{ab}", false, true,
       "reduced massive spin-2 wave equations with trace and divergence constraints"},
      {Family::fierz_pauli_gauge, "fierz_pauli_gauge", 10, "symmetric tensor A^{ab}", false, true,
       "spin-2 wave equation with the alternative gauge 4 d_nu A^{mu nu} - d^mu A = 0"},
      {Family::einstein_linear, "einstein_linear", 10, "symmetric tensor h^{ab}", true, false,
       "linearized Einstein equations"},
      {Family::einstein_gauge, "einstein_gauge", 10, "symmetric tensor h^{ab}", true, false,
       "linearized Einstein equations with the gauge 2 d^nu h_{mu nu} - d_mu h = 0"},
  };
  return table;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& i : family_table())
    if (i.family == f) return i;
  throw DomainError("unknown family");
}

inline std::string to_string(Family f) { return family_info(f).name; }

inline Family family_from_string(const std::string& s) {
  for (const auto& i : family_table())
    if (s == i.name) return i.family;
  throw DomainError("unknown family '" + s + "'");
}

struct Block {
  std::string label;
  Matrix matrix;
};

struct LinearSystem {
  Family family;
  FourVector p;  // upper
  Rational mass;
  std::vector<Block> blocks;
  Matrix total;
  std::string convention = plane_wave_convention;
};

// ---------------------------------------------------------------------------
// Tensor helpers on symmetric A^{ab} (upper indices) stored as 4x4 matrices.

namespace tensor {

inline Scalar trace(const Matrix& a) {
  Scalar t;
  for (std::size_t mu = 0; mu < 4; ++mu) t += Scalar(metric(mu)) * a(mu, mu);
  return t;
}

// div^b = p_nu A^{nu b}
inline std::array<Scalar, 4> divergence(const FourVector& p, const Matrix& a) {
  FourVector pl = p.lowered();
  std::array<Scalar, 4> d;
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t nu = 0; nu < 4; ++nu) d[b] += pl[nu] * a(nu, b);
  return d;
}

// p_mu p_nu A^{mu nu}
inline Scalar double_contraction(const FourVector& p, const Matrix& a) {
  FourVector pl = p.lowered();
  Scalar s;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) s += pl[mu] * pl[nu] * a(mu, nu);
  return s;
}

inline Matrix outer(const std::array<Scalar, 4>& u, const std::array<Scalar, 4>& v) {
  return Matrix::generate(4, 4, [&](std::size_t a, std::size_t b) { return u[a] * v[b]; });
}

inline Matrix symmetric_outer(const std::array<Scalar, 4>& u, const std::array<Scalar, 4>& v) {
  return outer(u, v) + outer(v, u);
}

inline Matrix lower_both(const Matrix& t) {
  return Matrix::generate(4, 4, [&](std::size_t a, std::size_t b) { return Scalar(metric(a) * metric(b)) * t(a, b); });
}

// T - (i/2) e^{mu nu s t} T_{s t}
inline Matrix self_dual(const Matrix& t) {
  Matrix tl = lower_both(t);
  return Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) {
    Scalar d;
    for (std::size_t s = 0; s < 4; ++s)
      for (std::size_t u = 0; u < 4; ++u)
        if (int e = levi_civita_upper(mu, nu, s, u)) d += Scalar(e) * tl(s, u);
    return t(mu, nu) - Scalar::frac(1, 2) * Scalar::i() * d;
  });
}

// e^{mu nu s t} T_{s t}
inline Matrix dual(const Matrix& t) {
  Matrix tl = lower_both(t);
  return Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) {
    Scalar d;
    for (std::size_t s = 0; s < 4; ++s)
      for (std::size_t u = 0; u < 4; ++u)
        if (int e = levi_civita_upper(mu, nu, s, u)) d += Scalar(e) * tl(s, u);
    return d;
  });
}

// F^{mu nu} = -i (p^mu A^nu - p^nu A^mu) for a four-potential A^mu.
inline Matrix field_strength(const FourVector& p, const std::array<Scalar, 4>& a) {
  FourVector pu = p.raised();
  return Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) {
    return -Scalar::i() * (pu[mu] * a[nu] - pu[nu] * a[mu]);
  });
}

// Electric embedding T^{k0} = F_k, T^{0k} = -F_k of a complex three-vector.
inline Matrix electric_embedding(const std::array<Scalar, 3>& f) {
  return Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) -> Scalar {
    if (nu == 0 && mu > 0) return f[mu - 1];
    if (mu == 0 && nu > 0) return -f[nu - 1];
    return Scalar();
  });
}

// Third-rank tensors X^{mu nu a} stored as x[a](mu, nu).
using Rank3 = std::array<Matrix, 4>;

// F^{mu nu a} = -i (p^mu A^{nu a} - p^nu A^{mu a})
inline Rank3 fp_field_tensor(const FourVector& p, const Matrix& a) {
  FourVector pu = p.raised();
  Rank3 f;
  for (std::size_t al = 0; al < 4; ++al)
    f[al] = Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) {
      return -Scalar::i() * (pu[mu] * a(nu, al) - pu[nu] * a(mu, al));
    });
  return f;
}

// Q^{mu nu a} = F^{mu nu a} - (i/2) e^{mu nu s t} F_{s t}^a
inline Rank3 fp_self_dual(const Rank3& f) {
  Rank3 q;
  for (std::size_t al = 0; al < 4; ++al) q[al] = self_dual(f[al]);
  return q;
}

// g_{s t} F^{nu s t}
inline std::array<Scalar, 4> fp_trace(const Rank3& f) {
  std::array<Scalar, 4> t;
  for (std::size_t nu = 0; nu < 4; ++nu)
    for (std::size_t s = 0; s < 4; ++s) t[nu] += Scalar(metric(s)) * f[s](nu, s);
  return t;
}

} // namespace tensor

// 10x10 matrix of a linear map on symmetric tensors, read back through P.
inline Matrix sym_operator(const std::function<Matrix(const Matrix&)>& f) {
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < 10; ++k) cols.push_back(sym_pack(f(sym_unpack(Matrix::unit_vector(10, k)))));
  return hstack(cols);
}

// r x 10 matrix whose rows are the given functionals of A.
inline Matrix sym_rows(std::size_t r, const std::function<std::vector<Scalar>(const Matrix&)>& f) {
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < 10; ++k) {
    std::vector<Scalar> v = f(sym_unpack(Matrix::unit_vector(10, k)));
    if (v.size() != r) throw DimensionMismatch("functional row count mismatch");
    cols.push_back(Matrix::column(v));
  }
  return hstack(cols);
}

// Fierz-Pauli operator in potentials, all terms moved to the left:
// -p^2 A + (2/3)(p^a div^b + p^b div^a) - (1/3) p^a p^b A - (1/3) g^{ab}(ppA - p^2 A) ... + m^2 A.
inline Matrix fierz_pauli_a_operator(const FourVector& momentum, const Rational& m) {
  FourVector p = momentum.raised();
  Scalar p2 = p.square(), m2(m * m);
  return sym_operator([&](const Matrix& a) {
    auto div = tensor::divergence(p, a);
    Scalar tr = tensor::trace(a), ppa = tensor::double_contraction(p, a);
    Matrix g = metric_matrix();
    return (m2 - p2) * a + Scalar::frac(2, 3) * tensor::symmetric_outer(p.components(), div) -
           (Scalar::frac(1, 3) * tr) * tensor::outer(p.components(), p.components()) +
           (Scalar::frac(1, 3) * (p2 * tr - ppa)) * g;
  });
}

// The same equation written through the third-rank tensor F^{nu a b}:
// d_nu F^{nu a b} + d_nu F^{nu b a} - (2/3) g^{ab} d_nu f^nu + (1/3)(d^a f^b + d^b f^a) + 2 m^2 A.
inline Matrix fierz_pauli_fa_operator(const FourVector& momentum, const Rational& m) {
  FourVector p = momentum.raised();
  FourVector pl = p.lowered();
  const Scalar mi = -Scalar::i();
  Scalar m2(m * m);
  return sym_operator([&](const Matrix& a) {
    tensor::Rank3 f = tensor::fp_field_tensor(p, a);  // f[b](nu, a) = F^{nu a b}
    auto ft = tensor::fp_trace(f);
    Scalar div_f;
    for (std::size_t nu = 0; nu < 4; ++nu) div_f += mi * pl[nu] * ft[nu];
    return Matrix::generate(4, 4, [&](std::size_t al, std::size_t be) {
      Scalar s;
      for (std::size_t nu = 0; nu < 4; ++nu) s += mi * pl[nu] * (f[be](nu, al) + f[al](nu, be));
      s -= Scalar::frac(2, 3) * Scalar(metric(al, be)) * div_f;
      s += Scalar::frac(1, 3) * mi * (p[al] * ft[be] + p[be] * ft[al]);
      return s + Scalar(2) * m2 * a(al, be);
    });
  });
}

// Linearized Einstein operator with raised indices.
inline Matrix einstein_operator(const FourVector& momentum) {
  FourVector p = momentum.raised();
  Scalar p2 = p.square();
  return sym_operator([&](const Matrix& a) {
    auto div = tensor::divergence(p, a);
    Scalar tr = tensor::trace(a), ppa = tensor::double_contraction(p, a);
    return -tensor::symmetric_outer(p.components(), div) + tr * tensor::outer(p.components(), p.components()) + p2 * a +
           (ppa - p2 * tr) * metric_matrix();
  });
}

// 2 p_nu A^{mu nu} - p^mu A: four rows.
inline Matrix einstein_gauge_rows(const FourVector& momentum) {
  FourVector p = momentum.raised();
  return sym_rows(4, [&](const Matrix& a) {
    auto div = tensor::divergence(p, a);
    Scalar tr = tensor::trace(a);
    std::vector<Scalar> r;
    for (std::size_t mu = 0; mu < 4; ++mu) r.push_back(Scalar(2) * div[mu] - p[mu] * tr);
    return r;
  });
}

// 4 p_nu A^{mu nu} - p^mu A: four rows.
inline Matrix fierz_pauli_gauge_rows(const FourVector& momentum) {
  FourVector p = momentum.raised();
  return sym_rows(4, [&](const Matrix& a) {
    auto div = tensor::divergence(p, a);
    Scalar tr = tensor::trace(a);
    std::vector<Scalar> r;
    for (std::size_t mu = 0; mu < 4; ++mu) r.push_back(Scalar(4) * div[mu] - p[mu] * tr);
    return r;
  });
}

inline Matrix divergence_rows(const FourVector& p) {
  return sym_rows(4, [&](const Matrix& a) {
    auto d = tensor::divergence(p, a);
    return std::vector<Scalar>(d.begin(), d.end());
  });
}

inline Matrix trace_row(const FourVector&) {
  return sym_rows(1, [](const Matrix& a) { return std::vector<Scalar>{tensor::trace(a)}; });
}

inline Matrix double_contraction_row(const FourVector& p) {
  return sym_rows(1, [&](const Matrix& a) { return std::vector<Scalar>{tensor::double_contraction(p, a)}; });
}

// The linear map F -> vec(sigma.F), column-major, from the three-vector field to the spinor matrix.
inline Matrix maxwell_spinor_embedding() { return hstack({vectorize(pauli(1)), vectorize(pauli(2)), vectorize(pauli(3))}); }

// Q^{mu nu} for F = e_c, as the self-dual completion of the electric embedding.
inline Matrix maxwell_q_of_field(const std::array<Scalar, 3>& f) { return tensor::self_dual(tensor::electric_embedding(f)); }

namespace detail {

inline std::string mu_label(const char* stem, std::size_t mu) { return std::string(stem) + "[" + std::to_string(mu) + "]"; }

inline std::vector<Block> assemble_blocks(Family family, const FourVector& p, const Rational& m) {
  const Scalar i = Scalar::i();
  const Scalar ms(m);
  const FourVector pu = p.raised(), pl = p.lowered();
  std::vector<Block> blocks;
  switch (family) {
    case Family::dirac_gamma:
      blocks.push_back({"gamma.p - m", slash(pu) - ms * Matrix::identity(4)});
      break;
    case Family::dirac_sigma: {
      GeneratorTable sig = dirac_sigma_table();
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix b = Matrix::zeros(4, 4);
        for (std::size_t nu = 0; nu < 4; ++nu) b = b + pl[nu] * (sig[mu][nu] + Scalar(metric(mu, nu)) * Matrix::identity(4));
        blocks.push_back({mu_label("(Sigma+g)p - m gamma", mu), b - ms * gamma(mu)});
      }
      break;
    }
    case Family::dirac_pl: {
      // (1/2) e_{mu nu s t}(-i p^nu) gamma^s gamma^t - (p_mu + m gamma_mu) gamma_5
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix b = Matrix::zeros(4, 4);
        for (const auto& t : levi_civita_support())
          if (t.idx[0] == mu)
            b = b + (Scalar::frac(t.sign, 2) * (-i) * pu[t.idx[1]]) * (gamma(t.idx[2]) * gamma(t.idx[3]));
        b = b - (pl[mu] * Matrix::identity(4) + ms * gamma_lower(mu)) * gamma5_lower();
        blocks.push_back({mu_label("PL form", mu), b});
      }
      break;
    }
    case Family::dirac_sigma_conjugate: {
      // psi-bar [(Sigma^{mu nu} - g^{mu nu}) p_nu + m gamma^mu] = 0, transposed to act on columns
      GeneratorTable sig = dirac_sigma_table();
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix b = ms * gamma(mu);
        for (std::size_t nu = 0; nu < 4; ++nu) b = b + pl[nu] * (sig[mu][nu] - Scalar(metric(mu, nu)) * Matrix::identity(4));
        blocks.push_back({mu_label("conjugate row system^T", mu), b.transpose()});
      }
      break;
    }
    case Family::weyl_sigma: {
      GeneratorTable sig = weyl_sigma_table();
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix b = -pu[mu] * Matrix::identity(2);
        for (std::size_t nu = 0; nu < 4; ++nu) b = b + pl[nu] * sig[mu][nu];
        blocks.push_back({mu_label("Sigma p - p", mu), b});
      }
      break;
    }
    case Family::weyl_compact: blocks.push_back({"sigma.p", sigma_dot(pu)}); break;
    case Family::proca: {
      Scalar shift = ms * ms - pu.square();
      Matrix b = Matrix::generate(4, 4, [&](std::size_t r, std::size_t c) { return pu[r] * pl[c] + (r == c ? shift : Scalar()); });
      blocks.push_back({"-p^2 + p p + m^2", b});
      break;
    }
    case Family::maxwell_so3c: {
      GeneratorTable sig = so3c_sigma_table();
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix b = pu[mu] * Matrix::identity(3);
        for (std::size_t nu = 0; nu < 4; ++nu) b = b + pl[nu] * sig[mu][nu];
        blocks.push_back({mu_label("(Sigma+g)p", mu), b});
      }
      break;
    }
    case Family::maxwell_curl_div: {
      blocks.push_back({"div", Matrix::generate(1, 3, [&](std::size_t, std::size_t c) { return pl[c + 1]; })});
      Matrix curl = Matrix::generate(3, 3, [&](std::size_t a, std::size_t c) {
        Scalar s = a == c ? -pl[0] : Scalar();
        for (std::size_t b = 1; b <= 3; ++b) s -= i * Scalar(levi_civita3(a + 1, b, c + 1)) * pl[b];
        return s;
      });
      blocks.push_back({"curl - i d0", curl});
      break;
    }
    case Family::maxwell_spinor: {
      GeneratorTable sig_l = lower_both(weyl_sigma_table());
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix a = Matrix::zeros(2, 2);
        for (std::size_t nu = 0; nu < 4; ++nu) a = a + pu[nu] * sig_l[mu][nu];
        Matrix id = Matrix::identity(2);
        Matrix b = Scalar::frac(1, 2) * (kron(id, a) - kron(a.transpose(), id)) - pl[mu] * Matrix::identity(4);
        blocks.push_back({mu_label("(Sigma p Q - Q Sigma p)/2 - p Q", mu), b});
      }
      break;
    }
    case Family::maxwell_laport: {
      Matrix op = pl[0] * pauli(0);
      for (std::size_t k = 1; k <= 3; ++k) op = op + pl[k] * pauli(k);
      std::vector<Matrix> cols;
      for (std::size_t c = 1; c <= 3; ++c) cols.push_back(vectorize(op * pauli(c)));
      blocks.push_back({"(p0 + sigma.p)(sigma.F)", hstack(cols)});
      break;
    }
    case Family::maxwell_quaternion: {
      Matrix b = Matrix::generate(4, 3, [&](std::size_t nu, std::size_t c) {
        Scalar s;
        for (std::size_t mu = 0; mu < 4; ++mu) s += pl[mu] * quaternion_unit(c + 1)(mu, nu);
        return s;
      });
      blocks.push_back({"p Q", b});
      break;
    }
    case Family::maxwell_tensor: {
      std::vector<Matrix> cols;
      for (std::size_t c = 0; c < 3; ++c) {
        std::array<Scalar, 3> f{};
        f[c] = Scalar(1);
        Matrix q = maxwell_q_of_field(f);
        cols.push_back(Matrix::generate(4, 1, [&](std::size_t mu, std::size_t) {
          Scalar s;
          for (std::size_t nu = 0; nu < 4; ++nu) s += pl[nu] * q(mu, nu);
          return s;
        }));
      }
      blocks.push_back({"p_nu Q^{mu nu}", hstack(cols)});
      break;
    }
    case Family::fierz_pauli_full: blocks.push_back({"F-form + 2m^2", fierz_pauli_fa_operator(pu, m)}); break;
    case Family::fierz_pauli_a: blocks.push_back({"A-form + m^2", fierz_pauli_a_operator(pu, m)}); break;
    case Family::fierz_pauli_final: {
      blocks.push_back({"(p^2 - m^2) A", (pu.square() - ms * ms) * Matrix::identity(10)});
      blocks.push_back({"p^a div^b + p^b div^a", sym_operator([&](const Matrix& a) {
                          return tensor::symmetric_outer(pu.components(), tensor::divergence(pu, a));
                        })});
      blocks.push_back({"trace", trace_row(pu)});
      blocks.push_back({"p p A", double_contraction_row(pu)});
      break;
    }
    case Family::fierz_pauli_gauge:
      blocks.push_back({"(m^2 - p^2) A", (ms * ms - pu.square()) * Matrix::identity(10)});
      blocks.push_back({"div", divergence_rows(pu)});
      blocks.push_back({"4 div - p A", fierz_pauli_gauge_rows(pu)});
      break;
    case Family::einstein_linear: blocks.push_back({"linearized Einstein", einstein_operator(pu)}); break;
    case Family::einstein_gauge:
      blocks.push_back({"linearized Einstein", einstein_operator(pu)});
      blocks.push_back({"2 div - p h", einstein_gauge_rows(pu)});
      break;
  }
  return blocks;
}

} // namespace detail

inline LinearSystem assemble(Family family, const FourVector& p, const Rational& m) {
  const FamilyInfo& info = family_info(family);
  if (m < 0) throw DomainError("mass must be nonnegative, got " + m.get_str());
  if (info.massless_only && m != 0) throw DomainError(std::string(info.name) + " is massless-only, got m = " + m.get_str());
  LinearSystem s{family, p.raised(), m, detail::assemble_blocks(family, p, m), Matrix(), plane_wave_convention};
  std::vector<Matrix> parts;
  for (const auto& b : s.blocks) {
    if (b.matrix.cols() != info.field_dim)
      throw DimensionMismatch(std::string(info.name) + " block '" + b.label + "' has " + std::to_string(b.matrix.cols()) +
                              " columns, field space has " + std::to_string(info.field_dim));
    parts.push_back(b.matrix);
  }
  s.total = vstack(parts);
  return s;
}

inline LinearSystem assemble(Family family, const MomentumSample& p, const Rational& m) { return assemble(family, p.p(), m); }

inline KernelReport kernel_of(const LinearSystem& s) { return rank_and_kernel(s.total); }

struct EquivalenceResult {
  std::string system_a;
  std::string system_b;
  Matrix isomorphism;
  SubspaceRelation verdict;
  std::pair<std::size_t, std::size_t> dims;
};

// Kernel of a mapped through iso, compared against the kernel of b.
inline EquivalenceResult equivalence(Family a, Family b, const FourVector& p, const Rational& ma, const Rational& mb,
                                     const Matrix& iso) {
  const FamilyInfo& ia = family_info(a);
  const FamilyInfo& ib = family_info(b);
  if (iso.cols() != ia.field_dim || iso.rows() != ib.field_dim)
    throw DimensionMismatch("isomorphism " + iso.shape() + " does not map " + ia.name + " (" + std::to_string(ia.field_dim) +
                            ") into " + ib.name + " (" + std::to_string(ib.field_dim) + ")");
  KernelReport ka = kernel_of(assemble(a, p, ma));
  KernelReport kb = kernel_of(assemble(b, p, mb));
  std::vector<Matrix> mapped;
  for (const auto& v : ka.kernel_basis) mapped.push_back(iso * v);
  // an empty kernel maps to the zero subspace of b's field space
  SubspaceRelation rel = subspace_relation(mapped, kb.kernel_basis);
  return {ia.name, ib.name, iso, rel, {ka.kernel_dim, kb.kernel_dim}};
}

inline EquivalenceResult equivalence(Family a, Family b, const FourVector& p, const Rational& m, const Matrix& iso) {
  return equivalence(a, b, p, m, m, iso);
}

// Identity when both families act on the same field space; F -> vec(sigma.F) into the spinor form.
inline Matrix default_isomorphism(Family a, Family b) {
  const FamilyInfo& ia = family_info(a);
  const FamilyInfo& ib = family_info(b);
  if (ia.field_dim == ib.field_dim && std::string(ia.field_space) == ib.field_space) return Matrix::identity(ia.field_dim);
  if (std::string(ia.field_space) == "complex field F = E + iH" && b == Family::maxwell_spinor) return maxwell_spinor_embedding();
  throw DomainError(std::string("no canonical isomorphism from ") + ia.name + " to " + ib.name);
}

// ---------------------------------------------------------------------------
// Constraint functionals evaluated on every kernel vector.

inline Report constraint_check(Family family, const FourVector& momentum, const Rational& m) {
  FourVector p = momentum.raised();
  const FamilyInfo& info = family_info(family);
  KernelReport k = kernel_of(assemble(family, p, m));
  Report rep;
  rep.add("kernel_nonempty", k.kernel_dim > 0, "kernel dim " + std::to_string(k.kernel_dim));
  if (info.field_dim == 4 && std::string(info.field_space) == "four-potential") {
    std::size_t bad = 0;
    for (const auto& v : k.kernel_basis)
      if (!minkowski_dot(p, FourVector({v(0, 0), v(1, 0), v(2, 0), v(3, 0)})).is_zero()) ++bad;
    rep.add("transverse", bad == 0, "p.A = 0 on " + std::to_string(k.kernel_dim - bad) + "/" + std::to_string(k.kernel_dim));
  } else if (info.field_dim == 10) {
    std::size_t bad_tr = 0, bad_pp = 0, bad_div = 0;
    for (const auto& v : k.kernel_basis) {
      Matrix a = sym_unpack(v);
      if (!tensor::trace(a).is_zero()) ++bad_tr;
      if (!tensor::double_contraction(p, a).is_zero()) ++bad_pp;
      for (const auto& d : tensor::divergence(p, a))
        if (!d.is_zero()) {
          ++bad_div;
          break;
        }
    }
    rep.add("traceless", bad_tr == 0, "A = 0 on all kernel vectors");
    rep.add("double_contraction", bad_pp == 0, "p_mu p_nu A^{mu nu} = 0");
    rep.add("divergence_free", bad_div == 0, "p_nu A^{nu mu} = 0 componentwise");
  } else {
    throw DomainError(std::string("no constraint functionals for ") + info.name);
  }
  return rep;
}

enum class GaugeKind { proca_massless, fierz_pauli_massless };

// Gauge directions at a null momentum are annihilated; non-Maxwell directions are not.
inline Report gauge_check(GaugeKind kind, const MomentumSample& s) {
  if (!s.is_massless() || s.p().is_zero()) throw DomainError("gauge check needs a nonzero null momentum");
  const FourVector p = s.p();
  Report rep;
  if (kind == GaugeKind::proca_massless) {
    Matrix f = tensor::field_strength(p, p.components());
    rep.add("field_strength_gauge_invariant", f.is_zero(), "F(A = p) = 0");
    Matrix op = assemble(Family::proca, p, Rational(0)).total;
    rep.add("gauge_in_kernel", (op * p.as_column()).is_zero(), "p lies in the kernel of the m = 0 operator");
    // a generic direction is not pure gauge
    Matrix fe = tensor::field_strength(p, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    rep.add("non_gauge_control", !fe.is_zero(), "F(e_0) != 0");
    return rep;
  }
  Matrix op = fierz_pauli_fa_operator(p, Rational(0));
  // f with p^2 f - p (p.f) = 0, i.e. p.f = 0 at p^2 = 0
  FourVector pl = p.lowered();
  Matrix maxwell_row = Matrix::generate(1, 4, [&](std::size_t, std::size_t c) { return pl[c]; });
  KernelReport fs = rank_and_kernel(maxwell_row);
  std::size_t bad = 0;
  for (const auto& f : fs.kernel_basis) {
    Matrix da = tensor::symmetric_outer(p.components(), {f(0, 0), f(1, 0), f(2, 0), f(3, 0)});
    if (!(op * sym_pack(da)).is_zero()) ++bad;
  }
  rep.add("gauge_in_kernel", bad == 0 && fs.kernel_dim == 3,
          std::to_string(fs.kernel_dim - bad) + "/" + std::to_string(fs.kernel_dim) + " Maxwell directions annihilated");
  std::array<Scalar, 4> e0{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  Matrix res = op * sym_pack(tensor::symmetric_outer(p.components(), e0));
  rep.add("non_maxwell_residual", !res.is_zero(), "p.f != 0 gives residual norm " + res.l1_norm().get_str());
  return rep;
}

// Kernels of the stacked systems built from the given row blocks.
inline KernelReport stacked_kernel(const std::vector<Matrix>& parts) { return rank_and_kernel(vstack(parts)); }

// Pure-gauge directions p f + f p for f = e_0..e_3, packed.
inline std::vector<Matrix> pure_gauge_basis(const FourVector& momentum) {
  FourVector p = momentum.raised();
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<Scalar, 4> f{};
    f[k] = Scalar(1);
    out.push_back(sym_pack(tensor::symmetric_outer(p.components(), f)));
  }
  return out;
}

struct EinsteinComparison {
  Report report;
  Rational difference_norm;
  std::size_t einstein_gauge_dim = 0;     // ker[E; G_E]
  std::size_t fierz_pauli_gauge_dim = 0;  // ker[F0; G_E]
  SubspaceRelation relation = SubspaceRelation::incomparable;
  std::size_t reduced_dim = 0;            // ker[E; G_E; trace]
};

// Linearized Einstein versus the massless Fierz-Pauli operator at a null momentum.
// The entry gauge_restricted_kernels_equal intersects both kernels with ker G_E only;
// E vanishes identically there, so the trace-carrying pure-gauge direction survives on
// the Einstein side and the entry fails. The remaining entries check the reduction
// to the gauge-fixed massless system on the traceless solution set.
inline EinsteinComparison einstein_vs_fierz_pauli(const MomentumSample& s) {
  if (!s.is_massless() || s.p().is_zero()) throw DomainError("Einstein comparison needs a nonzero null momentum");
  const FourVector p = s.p();
  EinsteinComparison out;
  Matrix e = einstein_operator(p);
  Matrix f0 = fierz_pauli_a_operator(p, Rational(0));
  Matrix ge = einstein_gauge_rows(p);
  out.difference_norm = (e - f0).l1_norm();
  out.report.add("operators_differ", !(e - f0).is_zero(), "|E - F0|_1 = " + out.difference_norm.get_str());

  KernelReport keg = stacked_kernel({e, ge}), kfg = stacked_kernel({f0, ge});
  out.einstein_gauge_dim = keg.kernel_dim;
  out.fierz_pauli_gauge_dim = kfg.kernel_dim;
  out.relation = subspace_relation(keg.kernel_basis, kfg.kernel_basis);
  out.report.add("gauge_restricted_kernels_equal", out.relation == SubspaceRelation::equal,
                 "ker[E;G_E] dim " + std::to_string(keg.kernel_dim) + " vs ker[F0;G_E] dim " + std::to_string(kfg.kernel_dim) +
                     ": " + to_string(out.relation));

  KernelReport kfp = kernel_of(assemble(Family::fierz_pauli_gauge, p, Rational(0)));
  std::vector<Matrix> joined = keg.kernel_basis;
  joined.insert(joined.end(), kfp.kernel_basis.begin(), kfp.kernel_basis.end());
  out.report.add("gauge_fixed_solutions_solve_einstein", rank(hstack(joined)) == keg.kernel_dim,
                 "ker(massless gauge-fixed Fierz-Pauli) dim " + std::to_string(kfp.kernel_dim) + " inside ker[E;G_E]");

  KernelReport kred = stacked_kernel({e, ge, trace_row(p)});
  out.reduced_dim = kred.kernel_dim;
  bool reduced = same_subspace(kred.kernel_basis, kfp.kernel_basis) && same_subspace(kred.kernel_basis, kfg.kernel_basis);
  out.report.add("traceless_reduction_equal", reduced && kred.kernel_dim > 0,
                 "ker[E;G_E;trace] = ker(massless gauge-fixed Fierz-Pauli) = ker[F0;G_E], dim " +
                     std::to_string(kred.kernel_dim));

  // ker[E;G_E] = ker[F0;G_E] + pure gauge
  std::vector<Matrix> spanned = kfg.kernel_basis;
  for (const auto& g : pure_gauge_basis(p))
    if ((ge * g).is_zero()) spanned.push_back(g);
  out.report.add("excess_is_pure_gauge", same_subspace(keg.kernel_basis, spanned),
                 "ker[E;G_E] is spanned by ker[F0;G_E] and gauge directions p f + f p");
  return out;
}

// Off the shell p^2 = m^2 (p^2 = 0 for massless families) the kernel is trivial.
inline Report dalembert_check(Family family, const FourVector& p, const Rational& m) {
  Report rep;
  Scalar p2 = p.square();
  Scalar shell(m * m);
  bool off = p2 != shell;
  KernelReport k = kernel_of(assemble(family, p, m));
  rep.add("off_shell_input", off, "p^2 = " + p2.str() + ", m^2 = " + shell.str());
  rep.add("trivial_kernel", k.kernel_dim == 0, "kernel dim " + std::to_string(k.kernel_dim));
  return rep;
}


// Finite-dimensional properties of the assembled systems.

// Left kernel of the conjugate row system has the dimension of the dirac_sigma kernel.
inline Report conjugate_consistency(const FourVector& p, const Rational& m) {
  std::size_t left = kernel_of(assemble(Family::dirac_sigma_conjugate, p, m)).kernel_dim;
  std::size_t right = kernel_of(assemble(Family::dirac_sigma, p, m)).kernel_dim;
  Report rep;
  rep.add("left_equals_right", left == right, "left " + std::to_string(left) + ", right " + std::to_string(right));
  return rep;
}

// ker(proca) = ker{(p^2 - m^2) I, p.A}
inline Report proca_constraint_equivalence(const FourVector& momentum, const Rational& m) {
  FourVector p = momentum.raised(), pl = p.lowered();
  KernelReport k = kernel_of(assemble(Family::proca, p, m));
  Matrix shell = (p.square() - Scalar(m * m)) * Matrix::identity(4);
  Matrix div = Matrix::generate(1, 4, [&](std::size_t, std::size_t c) { return pl[c]; });
  KernelReport kc = stacked_kernel({shell, div});
  Report rep;
  rep.add("kernel_equals_constraints", same_subspace(k.kernel_basis, kc.kernel_basis),
          "dims " + std::to_string(k.kernel_dim) + ", " + std::to_string(kc.kernel_dim));
  return rep;
}

// 2i Q = e Q_lower for the potential-built Q^{mu nu} and Q^{mu nu a}, on every basis potential.
inline Report self_duality_check(const FourVector& p) {
  const Scalar two_i = Scalar(2) * Scalar::i();
  std::size_t bad2 = 0, bad3 = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<Scalar, 4> a{};
    a[k] = Scalar(1);
    Matrix q = tensor::self_dual(tensor::field_strength(p, a));
    if (two_i * q != tensor::dual(q)) ++bad2;
  }
  for (std::size_t k = 0; k < 10; ++k) {
    tensor::Rank3 q = tensor::fp_self_dual(tensor::fp_field_tensor(p, sym_unpack(Matrix::unit_vector(10, k))));
    for (std::size_t al = 0; al < 4; ++al)
      if (two_i * q[al] != tensor::dual(q[al])) {
        ++bad3;
        break;
      }
  }
  Report rep;
  rep.add("second_rank", bad2 == 0, std::to_string(4 - bad2) + "/4 basis potentials");
  rep.add("third_rank", bad3 == 0, std::to_string(10 - bad3) + "/10 basis tensors");
  return rep;
}

// F^{abc} + F^{bca} + F^{cab} = 0 for every symmetric A.
inline Report cyclic_identity_check(const FourVector& p) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < 10; ++k) {
    tensor::Rank3 f = tensor::fp_field_tensor(p, sym_unpack(Matrix::unit_vector(10, k)));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          if (!(f[c](a, b) + f[a](b, c) + f[b](c, a)).is_zero()) ++bad;
  }
  Report rep;
  rep.add("cyclic", bad == 0, std::to_string(bad) + " nonzero components over 10 basis tensors");
  return rep;
}

// The F-tensor form equals twice the potential form, so the right-hand sides -2m^2 and -m^2 agree.
inline Report fierz_pauli_normalization(const FourVector& p, const Rational& m) {
  Matrix fa = fierz_pauli_fa_operator(p, m), a = fierz_pauli_a_operator(p, m);
  Report rep;
  rep.add("fa_equals_twice_a", fa == Scalar(2) * a, "|FA - 2 FPA|_1 = " + (fa - Scalar(2) * a).l1_norm().get_str());
  rep.add("fa_differs_from_a", fa != a, "the two normalizations are distinct operators");
  return rep;
}

// Maxwell from Proca potentials: the dual half of Q is divergence-free identically,
// so p_nu Q^{mu nu} = p_nu F^{mu nu}, which vanishes on the massless transverse potentials.
inline Report maxwell_proca_tensor_check(const MomentumSample& s) {
  if (!s.is_massless()) throw DomainError("Maxwell tensor check needs a null momentum");
  const FourVector p = s.p(), pl = p.lowered();
  auto contract = [&](const Matrix& t) {
    std::vector<Scalar> r(4);
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) r[mu] += pl[nu] * t(mu, nu);
    return Matrix::column(r);
  };
  std::size_t bad_dual = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<Scalar, 4> a{};
    a[k] = Scalar(1);
    if (!contract(tensor::dual(tensor::field_strength(p, a))).is_zero()) ++bad_dual;
  }
  KernelReport k = kernel_of(assemble(Family::proca, p, Rational(0)));
  std::size_t bad_q = 0;
  for (const auto& v : k.kernel_basis) {
    Matrix q = tensor::self_dual(tensor::field_strength(p, {v(0, 0), v(1, 0), v(2, 0), v(3, 0)}));
    if (!contract(q).is_zero()) ++bad_q;
  }
  Report rep;
  rep.add("dual_divergence_free", bad_dual == 0, "p_nu e^{mu nu s t} F_{s t} = 0 on all basis potentials");
  rep.add("q_divergence_free_on_solutions", bad_q == 0,
          std::to_string(k.kernel_dim - bad_q) + "/" + std::to_string(k.kernel_dim) + " massless Proca solutions");
  return rep;
}

// Kernel dimension at p equals the one at Lambda p for every fixture element.
inline Report lorentz_invariance_check(Family family, const FourVector& p, const Rational& m) {
  std::size_t base = kernel_of(assemble(family, p, m)).kernel_dim;
  Report rep;
  for (const auto& e : element_fixtures()) {
    FourVector q = e.fundamental().apply(p.raised());
    std::size_t d = kernel_of(assemble(family, q, m)).kernel_dim;
    rep.add(e.label(), d == base, "dim " + std::to_string(base) + " at p, " + std::to_string(d) + " at " + q.str());
  }
  return rep;
}

// The bare linearized Einstein operator keeps its gauge kernel off the light cone.
inline Report einstein_offshell_kernel(const FourVector& p) {
  KernelReport k = kernel_of(assemble(Family::einstein_linear, p, Rational(0)));
  Report rep;
  rep.add("kernel_is_pure_gauge", same_subspace(k.kernel_basis, pure_gauge_basis(p)),
          "kernel dim " + std::to_string(k.kernel_dim) + " equals span{p f + f p}");
  return rep;
}

} // namespace lubanski
