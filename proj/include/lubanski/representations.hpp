#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lubanski/clifford.hpp"
#include "lubanski/report.hpp"

namespace lubanski {

enum class RepKind { dirac_bispinor, weyl_left, vector, so3c_vector, slash_conjugation, spinor2_conjugation, sym_tensor };

inline const std::vector<RepKind>& all_rep_kinds() {
  static const std::vector<RepKind> kinds = {RepKind::dirac_bispinor,     RepKind::weyl_left,
                                             RepKind::vector,             RepKind::so3c_vector,
                                             RepKind::slash_conjugation,  RepKind::spinor2_conjugation,
                                             RepKind::sym_tensor};
  return kinds;
}

inline std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::dirac_bispinor: return "dirac_bispinor";
    case RepKind::weyl_left: return "weyl_left";
    case RepKind::vector: return "vector";
    case RepKind::so3c_vector: return "so3c_vector";
    case RepKind::slash_conjugation: return "slash_conjugation";
    case RepKind::spinor2_conjugation: return "spinor2_conjugation";
    case RepKind::sym_tensor: return "sym_tensor";
  }
  return "unknown";
}

inline RepKind rep_kind_from_string(const std::string& s) {
  for (auto k : all_rep_kinds())
    if (to_string(k) == s) return k;
  throw DomainError("unknown representation '" + s + "'");
}

// Symmetric 4x4 tensors in the basis (00,01,02,03,11,12,13,22,23,33).
inline const std::vector<std::pair<std::size_t, std::size_t>>& sym_pairs() {
  static const std::vector<std::pair<std::size_t, std::size_t>> pairs = [] {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) out.emplace_back(a, b);
    return out;
  }();
  return pairs;
}

inline std::size_t sym_index(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  for (std::size_t k = 0; k < sym_pairs().size(); ++k)
    if (sym_pairs()[k] == std::make_pair(a, b)) return k;
  throw DomainError("symmetric index out of range");
}

// E: 10 -> 16 writes both (a,b) and (b,a); P: 16 -> 10 reads (a,b) with a <= b.
// The 16-dim space is row-major T^{ab} at a*4 + b.
inline Matrix sym_inclusion() {
  return Matrix::generate(16, 10, [](std::size_t r, std::size_t k) {
    auto [a, b] = sym_pairs()[k];
    return Scalar(r == a * 4 + b || r == b * 4 + a ? 1 : 0);
  });
}
inline Matrix sym_projection() {
  return Matrix::generate(10, 16, [](std::size_t k, std::size_t c) {
    auto [a, b] = sym_pairs()[k];
    return Scalar(c == a * 4 + b ? 1 : 0);
  });
}

// 10-vector to the full symmetric 4x4 tensor and back.
inline Matrix sym_unpack(const Matrix& v) {
  if (v.rows() != 10 || v.cols() != 1) throw DimensionMismatch("sym_unpack needs 10x1, got " + v.shape());
  return Matrix::generate(4, 4, [&](std::size_t a, std::size_t b) { return v(sym_index(a, b), 0); });
}
inline Matrix sym_pack(const Matrix& t) {
  if (t.rows() != 4 || t.cols() != 4) throw DimensionMismatch("sym_pack needs 4x4, got " + t.shape());
  return Matrix::generate(10, 1, [&](std::size_t k, std::size_t) { return t(sym_pairs()[k].first, sym_pairs()[k].second); });
}

struct Representation {
  RepKind kind;
  std::string name;
  std::size_t dim = 0;
  GeneratorTable generators;  // M^{ab}, the action on the field
  GeneratorTable spin_factor;  // S^{ab} = -i M^{ab}
  std::optional<GeneratorTable> sigma;  // the named Sigma^{ab} table M is built from, if any
  std::map<std::string, std::vector<Matrix>> intertwiners;

  const Matrix& M(std::size_t a, std::size_t b) const { return generators.at(a).at(b); }
  const Matrix& S(std::size_t a, std::size_t b) const { return spin_factor.at(a).at(b); }
  Matrix identity() const { return Matrix::identity(dim); }
};

namespace detail {

inline GeneratorTable table_from(const std::function<Matrix(std::size_t, std::size_t)>& f) {
  GeneratorTable t;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = f(a, b);
  return t;
}

// X acting on the vectorized Q as Q -> (X Q - Q X) / 2, column-major.
inline Matrix half_adjoint(const Matrix& x) {
  Matrix id = Matrix::identity(x.rows());
  return Scalar::frac(1, 2) * (kron(id, x) - kron(x.transpose(), id));
}

} // namespace detail

inline Representation build_representation(RepKind kind) {
  Representation r;
  r.kind = kind;
  r.name = to_string(kind);
  const Scalar half = Scalar::frac(1, 2);
  switch (kind) {
    case RepKind::dirac_bispinor: {
      r.dim = 4;
      r.sigma = dirac_sigma_table();
      r.generators = scale(half, *r.sigma);
      r.intertwiners["gamma"] = {gamma(0), gamma(1), gamma(2), gamma(3)};
      r.intertwiners["gamma5"] = {gamma5()};
      r.intertwiners["gamma5_lower"] = {gamma5_lower()};
      r.intertwiners["alpha"] = {alpha(1), alpha(2), alpha(3)};
      r.intertwiners["spin_sigma"] = {spin_sigma(1), spin_sigma(2), spin_sigma(3)};
      break;
    }
    case RepKind::weyl_left: {
      r.dim = 2;
      r.sigma = weyl_sigma_table();
      r.generators = scale(-half, *r.sigma);
      r.intertwiners["sigma_four"] = {pauli(0), pauli(1), pauli(2), pauli(3)};
      break;
    }
    case RepKind::vector: {
      r.dim = 4;
      r.generators = detail::table_from(vector_generator);
      break;
    }
    case RepKind::so3c_vector: {
      r.dim = 3;
      r.sigma = so3c_sigma_table();
      r.generators = *r.sigma;
      r.intertwiners["spin3"] = {spin_matrix(1), spin_matrix(2), spin_matrix(3)};
      r.intertwiners["quaternion"] = {quaternion_unit(1), quaternion_unit(2), quaternion_unit(3)};
      break;
    }
    case RepKind::slash_conjugation: {
      r.dim = 16;
      r.sigma = dirac_sigma_table();
      const auto& s = *r.sigma;
      r.generators = detail::table_from([&](std::size_t a, std::size_t b) { return detail::half_adjoint(s[a][b]); });
      r.intertwiners["gamma"] = {gamma(0), gamma(1), gamma(2), gamma(3)};
      break;
    }
    case RepKind::spinor2_conjugation: {
      r.dim = 4;
      r.sigma = weyl_sigma_table();
      const auto& s = *r.sigma;
      r.generators = detail::table_from([&](std::size_t a, std::size_t b) { return -detail::half_adjoint(s[a][b]); });
      r.intertwiners["sigma_four"] = {pauli(0), pauli(1), pauli(2), pauli(3)};
      break;
    }
    case RepKind::sym_tensor: {
      r.dim = 10;
      const Matrix p = sym_projection(), e = sym_inclusion(), id = Matrix::identity(4);
      r.generators = detail::table_from([&](std::size_t a, std::size_t b) {
        Matrix m = vector_generator(a, b);
        return p * (kron(m, id) + kron(id, m)) * e;
      });
      break;
    }
  }
  r.spin_factor = scale(-Scalar::i(), r.generators);
  return r;
}

// Independent generator labels (a < b), six of them.
inline const std::vector<Plane>& generator_planes() {
  static const std::vector<Plane> planes = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return planes;
}

// Lorentz-algebra right-hand side shared by every generator table M:
// [M^{ab}, M^{cd}] = g^{bc} M^{ad} - g^{bd} M^{ac} + g^{ad} M^{bc} - g^{ac} M^{bd}.
inline Matrix lorentz_algebra_rhs(const GeneratorTable& m, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return Scalar(metric(b, c)) * m[a][d] - Scalar(metric(b, d)) * m[a][c] + Scalar(metric(a, d)) * m[b][c] -
         Scalar(metric(a, c)) * m[b][d];
}

namespace detail {

inline bool table_antisymmetric(const GeneratorTable& t) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (t[a][b] != -t[b][a]) return false;
  return true;
}

inline std::size_t closure_failures(const GeneratorTable& m, const Scalar& factor) {
  std::size_t bad = 0;
  for (const auto& x : generator_planes())
    for (const auto& y : generator_planes())
      if (commutator(m[x.a][x.b], m[y.a][y.b]) != factor * lorentz_algebra_rhs(m, x.a, x.b, y.a, y.b)) ++bad;
  return bad;
}

inline std::string count_detail(std::size_t bad, std::size_t total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " hold";
}

inline void add_counted(Report& rep, const std::string& name, std::size_t bad, std::size_t total) {
  rep.add(name, bad == 0, count_detail(bad, total));
}

// e_{mu nu s t} T^{s t} (lower-index dual of an upper table).
inline Matrix dual_lower(const GeneratorTable& t, std::size_t mu, std::size_t nu) {
  Matrix out = Matrix::zeros(t[0][0].rows(), t[0][0].cols());
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t u = 0; u < 4; ++u)
      if (int e = levi_civita(mu, nu, s, u)) out = out + Scalar(e) * t[s][u];
  return out;
}

// e^{mu nu s t} T_{s t} (upper-index dual of a lower table).
inline Matrix dual_upper(const GeneratorTable& t_lower, std::size_t mu, std::size_t nu) {
  Matrix out = Matrix::zeros(t_lower[0][0].rows(), t_lower[0][0].cols());
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t u = 0; u < 4; ++u)
      if (int e = levi_civita_upper(mu, nu, s, u)) out = out + Scalar(e) * t_lower[s][u];
  return out;
}

inline void dirac_structure(Report& rep) {
  const Scalar i = Scalar::i();
  const Matrix id = Matrix::identity(4);
  const Matrix g5 = gamma5(), g5l = gamma5_lower();
  const GeneratorTable sig = dirac_sigma_table();
  const GeneratorTable sig_l = lower_both(sig);

  std::size_t bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      if (anticommutator(gamma(mu), gamma(nu)) != Scalar(2 * metric(mu, nu)) * id) ++bad;
  add_counted(rep, "anticommutator", bad, 16);

  bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    if (!anticommutator(g5, gamma(mu)).is_zero()) ++bad;
  rep.add("gamma5_anticommutes", bad == 0 && g5 * g5 == id, count_detail(bad, 4) + ", (gamma^5)^2 = I");

  Matrix quad = Matrix::zeros(4, 4);
  for (const auto& t : levi_civita_support())
    quad = quad + Scalar(t.sign) * (gamma(t.idx[0]) * gamma(t.idx[1]) * gamma(t.idx[2]) * gamma(t.idx[3]));
  quad = (i / Scalar(24)) * quad;
  rep.add("gamma5_quadruple_product", quad == g5 && i * gamma(0) * gamma(1) * gamma(2) * gamma(3) == g5,
          "(i/4!) e_{mnst} g^m g^n g^s g^t = i g^0 g^1 g^2 g^3 = gamma^5");

  bad = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    if (sig[0][k] != alpha(k)) ++bad;
    for (std::size_t l = 1; l <= 3; ++l)
      if (k != l && sig[k][l] != Scalar(-levi_civita3(k, l, 6 - k - l)) * i * spin_sigma(6 - k - l)) ++bad;
  }
  add_counted(rep, "sigma_explicit", bad, 9);

  bad = 0;
  for (const auto& x : generator_planes())
    for (const auto& y : generator_planes())
      if (commutator(sig[x.a][x.b], sig[y.a][y.b]) != Scalar(2) * lorentz_algebra_rhs(sig, x.a, x.b, y.a, y.b)) ++bad;
  add_counted(rep, "commutator_sigma", bad, 36);

  bad = 0;
  for (const auto& x : generator_planes())
    for (std::size_t mu = 0; mu < 4; ++mu)
      if (commutator(sig[x.a][x.b], gamma(mu)) !=
          Scalar(2) * (Scalar(metric(x.b, mu)) * gamma(x.a) - Scalar(metric(x.a, mu)) * gamma(x.b)))
        ++bad;
  add_counted(rep, "commutator_sigma_gamma", bad, 24);

  bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (i * dual_lower(sig, mu, nu) != Scalar(2) * g5l * sig_l[mu][nu]) ++bad;
      GeneratorTable g5sig;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) g5sig[a][b] = g5l * sig_l[a][b];
      if (i * dual_upper(g5sig, mu, nu) != Scalar(2) * sig[mu][nu]) ++bad;
    }
  add_counted(rep, "dual_generators", bad, 32);

  bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      GeneratorTable g5sig;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) g5sig[a][b] = g5l * sig_l[a][b];
      if ((i / Scalar(2)) * dual_upper(g5sig, mu, nu) != sig[mu][nu]) ++bad;
      if (g5l * sig_l[mu][nu] != sig_l[mu][nu] * g5l) ++bad;
    }
  add_counted(rep, "sigma_duality", bad, 32);

  bad = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      Matrix rhs = Scalar(p == q ? 1 : 0) * id;
      if (p != q) rhs = rhs + (Scalar(levi_civita3(p, q, 6 - p - q)) * i) * spin_sigma(6 - p - q);
      if (spin_sigma(p) * spin_sigma(q) != rhs) ++bad;
      if (alpha(p) * alpha(q) != rhs) ++bad;
      Matrix mixed = Scalar(p == q ? 1 : 0) * g5;
      if (p != q) mixed = mixed + (Scalar(levi_civita3(p, q, 6 - p - q)) * i) * alpha(6 - p - q);
      if (spin_sigma(p) * alpha(q) != mixed) ++bad;
      if (alpha(p) * spin_sigma(q) != mixed) ++bad;
    }
  add_counted(rep, "alpha_sigma_products", bad, 36);

  bad = 0;
  for (std::size_t k = 1; k <= 3; ++k)
    if (spin_sigma(k) * g5 != alpha(k) || g5 * spin_sigma(k) != alpha(k)) ++bad;
  add_counted(rep, "sigma_gamma5_alpha", bad, 3);

  bad = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    if (spin_sigma(k) * spin_sigma(k) != id) ++bad;
    if (alpha(k) * alpha(k) != id) ++bad;
  }
  add_counted(rep, "axis_squares", bad, 6);

  Matrix i1 = Matrix::zeros(4, 4), i2 = Matrix::zeros(4, 4);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) i1 = i1 + sig_l[mu][nu] * sig[mu][nu];
  for (const auto& t : levi_civita_support())
    i2 = i2 + Scalar(t.sign) * (sig[t.idx[0]][t.idx[1]] * sig[t.idx[2]][t.idx[3]]);
  rep.add("invariant_I1", i1 == Scalar(-12) * id, "I1 = -12 I");
  rep.add("invariant_I2", i2 == (Scalar(24) * i) * g5l && i2 + (Scalar(2) * i) * i1 * g5l == Matrix::zeros(4, 4),
          "I2 = 24i gamma_5 = -2i I1 gamma_5");

  // Three-vector generators M = (i/2) Sigma and N = alpha / 2.
  Matrix m2 = Matrix::zeros(4, 4), n2 = Matrix::zeros(4, 4), mn = Matrix::zeros(4, 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    Matrix mk = (i / Scalar(2)) * spin_sigma(k), nk = Scalar::frac(1, 2) * alpha(k);
    m2 = m2 + mk * mk;
    n2 = n2 + nk * nk;
    mn = mn + mk * nk;
  }
  rep.add("casimir_m_n", n2 == Scalar::frac(3, 4) * id && m2 == -n2 && mn == (Scalar::frac(3, 4) * i) * g5,
          "N^2 = -M^2 = 3/4, M.N = i(3/4) gamma^5");

  bad = 0;
  for (int sgn : {1, -1}) {
    Matrix cas = Matrix::zeros(4, 4);
    Matrix proj = id - Scalar(sgn) * g5l;
    for (std::size_t k = 1; k <= 3; ++k) {
      Matrix lhs = (i / Scalar(2)) * spin_sigma(k) + Scalar(sgn) * i * (Scalar::frac(1, 2) * alpha(k));
      if (lhs != (i / Scalar(2)) * proj * spin_sigma(k)) ++bad;
      cas = cas + lhs * lhs;
    }
    if (Scalar::frac(1, 4) * cas != Scalar::frac(-3, 8) * proj) ++bad;
  }
  add_counted(rep, "m_plus_minus_i_n", bad, 8);
}

inline void weyl_structure(Report& rep) {
  const Scalar i = Scalar::i();
  const Matrix id = Matrix::identity(2);
  const GeneratorTable sig = weyl_sigma_table();
  const GeneratorTable sig_l = lower_both(sig);

  std::size_t bad = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      Matrix rhs = Scalar(p == q ? 1 : 0) * id;
      if (p != q) rhs = rhs + (Scalar(levi_civita3(p, q, 6 - p - q)) * i) * pauli(6 - p - q);
      if (pauli(p) * pauli(q) != rhs) ++bad;
    }
  add_counted(rep, "pauli_products", bad, 9);

  bad = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    if (sig_l[0][k] != pauli(k) || sig_l[k][0] != -pauli(k)) ++bad;
    for (std::size_t l = 1; l <= 3; ++l)
      if (k != l && sig_l[k][l] != sig[k][l]) ++bad;
  }
  add_counted(rep, "sigma_lowered", bad, 9);

  bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      if (dual_lower(sig, mu, nu) != (Scalar(2) * i) * sig_l[mu][nu]) ++bad;
  add_counted(rep, "self_duality", bad, 16);

  bad = 0;
  for (const auto& x : generator_planes())
    for (const auto& y : generator_planes()) {
      // (1/2)[S^{ab}, S^{cd}] = g^{ac} S^{bd} - g^{ad} S^{bc} + g^{bd} S^{ac} - g^{bc} S^{ad}
      Matrix rhs = Scalar(metric(x.a, y.a)) * sig[x.b][y.b] - Scalar(metric(x.a, y.b)) * sig[x.b][y.a] +
                   Scalar(metric(x.b, y.b)) * sig[x.a][y.a] - Scalar(metric(x.b, y.a)) * sig[x.a][y.b];
      if (Scalar::frac(1, 2) * commutator(sig[x.a][x.b], sig[y.a][y.b]) != rhs) ++bad;
    }
  add_counted(rep, "commutator_weyl", bad, 36);

  bad = 0;
  for (const auto& x : generator_planes())
    for (std::size_t mu = 0; mu < 4; ++mu) {
      Matrix lhs = sig[x.a][x.b].conj_transpose() * pauli(mu) + pauli(mu) * sig[x.a][x.b];
      Matrix rhs = Scalar(2) * (Scalar(metric(x.b, mu)) * pauli(x.a) - Scalar(metric(x.a, mu)) * pauli(x.b));
      if (lhs != rhs) ++bad;
    }
  add_counted(rep, "sigma_four_infinitesimal", bad, 24);
}

inline void so3c_structure(Report& rep) {
  const Scalar i = Scalar::i();
  const GeneratorTable sig = so3c_sigma_table();
  const GeneratorTable sig_l = lower_both(sig);

  std::size_t bad = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      Matrix rhs = Matrix::zeros(3, 3);
      if (p != q) rhs = Scalar(levi_civita3(p, q, 6 - p - q)) * spin_matrix(6 - p - q);
      if (commutator(spin_matrix(p), spin_matrix(q)) != rhs) ++bad;
    }
  add_counted(rep, "spin_commutators", bad, 9);

  Matrix sum = Matrix::zeros(3, 3);
  for (std::size_t k = 1; k <= 3; ++k) sum = sum + spin_matrix(k) * spin_matrix(k);
  rep.add("spin_square_sum", sum == Scalar(-2) * Matrix::identity(3), "s1^2 + s2^2 + s3^2 = -2 I");

  bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if ((Scalar(2) * i) * sig[mu][nu] != dual_upper(sig_l, mu, nu)) ++bad;
      if (dual_lower(sig, mu, nu) != (Scalar(2) * i) * sig_l[mu][nu]) ++bad;
    }
  add_counted(rep, "self_duality", bad, 32);

  // M = s rotates, N = i s boosts.
  bad = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      if (p == q) continue;
      std::size_t r = 6 - p - q;
      Scalar e(levi_civita3(p, q, r));
      Matrix mp = spin_matrix(p), mq = spin_matrix(q), np = i * mp, nq = i * mq;
      if (commutator(mp, mq) != e * spin_matrix(r)) ++bad;
      if (commutator(mp, nq) != e * (i * spin_matrix(r))) ++bad;
      if (commutator(np, nq) != -e * spin_matrix(r)) ++bad;
    }
  add_counted(rep, "rotation_boost_algebra", bad, 18);

  // m^{ab} J + J (m^{ab})^T = sum_q (Sigma^{ab})_{qp} J_q for each J_p.
  bad = 0;
  for (const auto& x : generator_planes()) {
    Matrix m = vector_generator(x.a, x.b);
    for (std::size_t p = 1; p <= 3; ++p) {
      Matrix lhs = m * quaternion_unit(p) + quaternion_unit(p) * m.transpose();
      Matrix rhs = Matrix::zeros(4, 4);
      for (std::size_t q = 1; q <= 3; ++q) rhs = rhs + sig[x.a][x.b](q - 1, p - 1) * quaternion_unit(q);
      if (lhs != rhs) ++bad;
    }
  }
  add_counted(rep, "quaternion_infinitesimal", bad, 18);
}

inline void slash_structure(const Representation& r, Report& rep) {
  // M^{ab} vec(gamma^l A_l) = vec((g^{bl} gamma^a - g^{al} gamma^b) A_l) for each basis A.
  std::size_t bad = 0;
  for (const auto& x : generator_planes())
    for (std::size_t l = 0; l < 4; ++l) {
      Matrix lhs = r.M(x.a, x.b) * vectorize(gamma(l));
      Matrix rhs = vectorize(Scalar(metric(x.b, l)) * gamma(x.a) - Scalar(metric(x.a, l)) * gamma(x.b));
      if (lhs != rhs) ++bad;
    }
  add_counted(rep, "gamma_action", bad, 24);
}

inline void spinor2_structure(const Representation& r, Report& rep) {
  // tr Q is invariant and the traceless span of the Pauli matrices is preserved.
  std::size_t bad = 0;
  Matrix tr_row = vectorize(Matrix::identity(2)).transpose();
  std::vector<Matrix> span = {vectorize(pauli(1)), vectorize(pauli(2)), vectorize(pauli(3))};
  for (const auto& x : generator_planes()) {
    if (!(tr_row * r.M(x.a, x.b)).is_zero()) ++bad;
    for (const auto& s : span) {
      std::vector<Matrix> extended = span;
      extended.push_back(r.M(x.a, x.b) * s);
      if (rank(hstack(extended)) != 3) ++bad;
    }
  }
  add_counted(rep, "trace_and_span_invariant", bad, 24);
}

} // namespace detail

// Pass/fail per structural identity defined for the representation.
inline Report structure_check(const Representation& r) {
  Report rep;
  rep.add("antisymmetry", detail::table_antisymmetric(r.generators), "M^{ab} = -M^{ba}");
  std::size_t bad = detail::closure_failures(r.generators, Scalar(1));
  detail::add_counted(rep, "closure", bad, 36);
  switch (r.kind) {
    case RepKind::dirac_bispinor:
      rep.add("generator_action", r.generators == scale(Scalar::frac(1, 2), dirac_sigma_table()), "M = Sigma/2");
      detail::dirac_structure(rep);
      break;
    case RepKind::weyl_left:
      rep.add("generator_action", r.generators == scale(Scalar::frac(-1, 2), weyl_sigma_table()), "M = -Sigma/2");
      detail::weyl_structure(rep);
      break;
    case RepKind::vector: {
      bool ok = true;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) ok = ok && r.M(a, b) == vector_generator(a, b);
      rep.add("generator_action", ok, "M = m^{ab}");
      break;
    }
    case RepKind::so3c_vector:
      rep.add("generator_action", r.generators == so3c_sigma_table(), "M = Sigma(SO(3,C))");
      detail::so3c_structure(rep);
      break;
    case RepKind::slash_conjugation: detail::slash_structure(r, rep); break;
    case RepKind::spinor2_conjugation: detail::spinor2_structure(r, rep); break;
    case RepKind::sym_tensor:
      rep.add("projection_inclusion", sym_projection() * sym_inclusion() == Matrix::identity(10), "P E = I_10");
      break;
  }
  return rep;
}

// I1 = Sigma_{mn} Sigma^{mn}, I2 = e_{mnst} Sigma^{mn} Sigma^{st} for the Dirac rep.
inline std::pair<Matrix, Matrix> invariants_I1_I2(const Representation& r) {
  if (r.kind != RepKind::dirac_bispinor) throw DomainError("invariants I1, I2 are defined for the Dirac rep only");
  const GeneratorTable& sig = *r.sigma;
  const GeneratorTable sig_l = lower_both(sig);
  Matrix i1 = Matrix::zeros(4, 4), i2 = Matrix::zeros(4, 4);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) i1 = i1 + sig_l[mu][nu] * sig[mu][nu];
  for (const auto& t : levi_civita_support())
    i2 = i2 + Scalar(t.sign) * (sig[t.idx[0]][t.idx[1]] * sig[t.idx[2]][t.idx[3]]);
  return {i1, i2};
}

} // namespace lubanski
