#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lubanski/representations.hpp"

namespace lubanski {

enum class ElementKind { boost, rotation };

// One-parameter element from a rational half-angle pair: (cosh, sinh)(theta/2)
// for boosts along `index` in 1..3, (cos, sin)(theta/2) for rotations in plane
// `index` in {12, 23, 31}.
struct ElementSpec {
  ElementKind kind;
  int index;
  Rational half_c;
  Rational half_s;

  Plane plane() const { return kind == ElementKind::boost ? boost_plane(std::size_t(index)) : rotation_plane(index); }
  std::pair<Rational, Rational> full_pair() const {
    return kind == ElementKind::boost ? hyperbolic_double(half_c, half_s) : circular_double(half_c, half_s);
  }
  LorentzMatrix fundamental() const {
    auto [c, s] = full_pair();
    return kind == ElementKind::boost ? fundamental_boost(std::size_t(index), c, s) : fundamental_rotation(index, c, s);
  }
  void validate() const {
    if (kind == ElementKind::boost && (half_c * half_c - half_s * half_s != 1 || half_c < 1))
      throw DomainError("half-angle pair (" + half_c.get_str() + ", " + half_s.get_str() + ") is not on the unit hyperbola");
    if (kind == ElementKind::rotation && half_c * half_c + half_s * half_s != 1)
      throw DomainError("half-angle pair (" + half_c.get_str() + ", " + half_s.get_str() + ") is not on the unit circle");
    plane();
  }
  std::string label() const {
    return std::string(kind == ElementKind::boost ? "boost" : "rotation") + "(" + std::to_string(index) + "; " +
           half_c.get_str() + ", " + half_s.get_str() + ")";
  }
};

// Fixture elements, all with small rational half-angle pairs.
inline std::vector<ElementSpec> element_fixtures() {
  return {
      {ElementKind::boost, 1, Rational(5, 4), Rational(3, 4)},
      {ElementKind::boost, 2, Rational(5, 3), Rational(4, 3)},
      {ElementKind::boost, 3, Rational(13, 12), Rational(5, 12)},
      {ElementKind::rotation, 12, Rational(3, 5), Rational(4, 5)},
      {ElementKind::rotation, 23, Rational(4, 5), Rational(-3, 5)},
      {ElementKind::rotation, 31, Rational(5, 13), Rational(12, 13)},
  };
}

struct GroupElement {
  std::shared_ptr<const Representation> rep;
  Matrix matrix;
  LorentzMatrix fundamental;
  std::optional<ElementSpec> spec;  // set for one-parameter elements
  std::string label;
};

namespace detail {

inline Matrix spinor_half_angle(const Matrix& x, const ElementSpec& e, int sign) {
  // X^2 = +I for boost generators, -I for rotation generators
  return Scalar(e.half_c) * Matrix::identity(x.rows()) + Scalar(sign) * Scalar(e.half_s) * x;
}

// exp(-theta X) with X^3 = X (boost) or X^3 = -X (rotation), from the full pair.
inline Matrix cubic_exponential(const Matrix& x, const ElementSpec& e) {
  auto [c, s] = e.full_pair();
  Matrix x2 = x * x;
  Scalar eps(e.kind == ElementKind::boost ? 1 : -1);
  if (x2 * x != eps * x) throw Error("generator does not satisfy its cubic minimal polynomial");
  Matrix id = Matrix::identity(x.rows());
  return id - Scalar(s) * x + (eps * Scalar(c - 1)) * x2;
}

inline Matrix conjugation_action(const Matrix& d) { return kron(inverse(d).transpose(), d); }

} // namespace detail

// D = exp(-theta M^{ab}) in closed form; it covers Lambda = exp(-theta m^{ab}).
inline GroupElement group_element(std::shared_ptr<const Representation> rep, const ElementSpec& e) {
  e.validate();
  Plane pl = e.plane();
  const Representation& r = *rep;
  Matrix d;
  LorentzMatrix lam = e.fundamental();
  switch (r.kind) {
    case RepKind::dirac_bispinor:
      d = detail::spinor_half_angle((*r.sigma)[pl.a][pl.b], e, -1);
      break;
    case RepKind::weyl_left:
      d = detail::spinor_half_angle((*r.sigma)[pl.a][pl.b], e, +1);
      break;
    case RepKind::vector: d = lam.matrix(); break;
    case RepKind::so3c_vector: d = detail::cubic_exponential((*r.sigma)[pl.a][pl.b], e); break;
    case RepKind::slash_conjugation:
      d = detail::conjugation_action(detail::spinor_half_angle((*r.sigma)[pl.a][pl.b], e, -1));
      break;
    case RepKind::spinor2_conjugation:
      d = detail::conjugation_action(detail::spinor_half_angle((*r.sigma)[pl.a][pl.b], e, +1));
      break;
    case RepKind::sym_tensor:
      d = sym_projection() * kron(lam.matrix(), lam.matrix()) * sym_inclusion();
      break;
  }
  return {std::move(rep), std::move(d), lam, e, r.name + ":" + e.label()};
}

inline GroupElement group_element(const Representation& r, const ElementSpec& e) {
  return group_element(std::make_shared<const Representation>(r), e);
}

inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.rep->kind != b.rep->kind) throw DomainError("composing elements of different representations");
  return {a.rep, a.matrix * b.matrix, a.fundamental * b.fundamental, std::nullopt, a.label + " * " + b.label};
}

namespace detail {

inline bool tensor_law(const GeneratorTable& t, const Matrix& d, const Matrix& dinv, const LorentzMatrix& lam) {
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t u = 0; u < 4; ++u) {
      Matrix rhs = Matrix::zeros(t[0][0].rows(), t[0][0].cols());
      for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) {
          Scalar f = lam(s, mu) * lam(u, nu);
          if (!f.is_zero()) rhs = rhs + f * t[mu][nu];
        }
      if (dinv * t[s][u] * d != rhs) return false;
    }
  return true;
}

// Along a single boost axis n: X_par is invariant and
// D^-1 X_perp D = cosh X_perp - i sinh (n x Y)_perp, with (X, Y) = (Sigma, alpha), (alpha, Sigma) or (sigma, sigma).
inline bool parallel_perpendicular(const std::function<Matrix(std::size_t)>& x, const std::function<Matrix(std::size_t)>& y,
                                   const Matrix& d, const Matrix& dinv, const ElementSpec& e) {
  auto [c, s] = e.full_pair();
  std::size_t n = std::size_t(e.index);
  for (std::size_t j = 1; j <= 3; ++j) {
    Matrix lhs = dinv * x(j) * d;
    Matrix rhs = x(j);
    if (j != n) {
      std::size_t l = 6 - j - n;
      rhs = Scalar(c) * x(j) - (Scalar::i() * Scalar(s) * Scalar(levi_civita3(j, n, l))) * y(l);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

} // namespace detail

// Each conjugation law applicable to the element's representation.
inline Report covariance_check(const GroupElement& g) {
  Report rep;
  const Representation& r = *g.rep;
  const Matrix& d = g.matrix;
  const Matrix dinv = inverse(d);
  const LorentzMatrix& lam = g.fundamental;
  rep.add("fundamental_proper", lam.is_proper_orthochronous(), "Lambda^T g Lambda = g, det = 1, Lambda^0_0 >= 1");
  rep.add("tensor_law", detail::tensor_law(r.generators, d, dinv, lam), "D^-1 M^{st} D = L^s_m L^t_n M^{mn}");
  const bool single_boost = g.spec && g.spec->kind == ElementKind::boost;
  switch (r.kind) {
    case RepKind::dirac_bispinor: {
      bool ok = true;
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix rhs = Matrix::zeros(4, 4);
        for (std::size_t nu = 0; nu < 4; ++nu) rhs = rhs + lam(mu, nu) * gamma(nu);
        ok = ok && dinv * gamma(mu) * d == rhs;
      }
      rep.add("gamma_law", ok, "S^-1 gamma^mu S = L^mu_nu gamma^nu");
      rep.add("sigma_law", detail::tensor_law(*r.sigma, d, dinv, lam), "S^-1 Sigma^{mn} S = L L Sigma");
      if (single_boost) {
        bool a = detail::parallel_perpendicular(spin_sigma, alpha, d, dinv, *g.spec);
        bool b = detail::parallel_perpendicular(alpha, spin_sigma, d, dinv, *g.spec);
        rep.add("parallel_perpendicular", a && b, "Sigma and alpha split along the boost axis");
      }
      break;
    }
    case RepKind::weyl_left: {
      bool ok = true;
      for (std::size_t mu = 0; mu < 4; ++mu) {
        Matrix rhs = Matrix::zeros(2, 2);
        for (std::size_t nu = 0; nu < 4; ++nu) rhs = rhs + lam(mu, nu) * pauli(nu);
        ok = ok && d.conj_transpose() * pauli(mu) * d == rhs;
      }
      rep.add("sigma_four_law", ok, "S^dagger sigma^mu S = L^mu_nu sigma^nu");
      rep.add("sigma_law", detail::tensor_law(*r.sigma, d, dinv, lam), "S^-1 Sigma^{st} S = L L Sigma");
      if (single_boost) {
        auto sig = [](std::size_t k) { return pauli(k); };
        rep.add("parallel_perpendicular", detail::parallel_perpendicular(sig, sig, d, dinv, *g.spec),
                "sigma splits along the boost axis");
      }
      break;
    }
    case RepKind::vector: rep.add("fundamental", d == lam.matrix(), "D = Lambda"); break;
    case RepKind::so3c_vector: {
      rep.add("complex_orthogonal", d.transpose() * d == Matrix::identity(3), "a^T a = I");
      bool ok = true;
      for (std::size_t p = 1; p <= 3; ++p) {
        Matrix rhs = Matrix::zeros(4, 4);
        for (std::size_t q = 1; q <= 3; ++q) rhs = rhs + d(q - 1, p - 1) * quaternion_unit(q);
        ok = ok && lam.matrix() * quaternion_unit(p) * lam.matrix().transpose() == rhs;
      }
      rep.add("quaternion_law", ok, "Lambda J_p Lambda^T = a_{qp} J_q");
      break;
    }
    case RepKind::slash_conjugation: {
      bool ok = true;
      for (std::size_t l = 0; l < 4; ++l) {
        Matrix rhs = Matrix::zeros(16, 1);
        for (std::size_t a = 0; a < 4; ++a) rhs = rhs + lam(a, l) * vectorize(gamma_lower(a));
        ok = ok && d * vectorize(gamma_lower(l)) == rhs;
      }
      rep.add("four_vector_law", ok, "S (A^l gamma_l) S^-1 = (Lambda A)^a gamma_a");
      break;
    }
    case RepKind::spinor2_conjugation: {
      Matrix tr_row = vectorize(Matrix::identity(2)).transpose();
      rep.add("trace_invariant", tr_row * d == tr_row, "tr(S Q S^-1) = tr Q");
      break;
    }
    case RepKind::sym_tensor: {
      bool ok = true;
      for (std::size_t k = 0; k < 10; ++k) {
        Matrix t = sym_unpack(Matrix::unit_vector(10, k));
        ok = ok && d * Matrix::unit_vector(10, k) == sym_pack(lam.matrix() * t * lam.matrix().transpose());
      }
      rep.add("tensor_product_law", ok, "D A = Lambda A Lambda^T");
      break;
    }
  }
  return rep;
}

// U' = ((I, I), (I, -I)) with U'^2 = 2 I takes the Dirac operator to Weyl blocks.
inline Matrix weyl_basis_change() { return kron(Matrix{{1, 1}, {1, -1}}, pauli(0)); }

// Lower-left and upper-right 2x2 blocks of U'(gamma.p - m)U'/2.
struct WeylBlocks {
  Matrix upper_left, upper_right, lower_left, lower_right;
};

inline WeylBlocks weyl_blocks(const FourVector& p, const Rational& m) {
  Matrix u = weyl_basis_change();
  Matrix t = Scalar::frac(1, 2) * (u * (slash(p) - Scalar(m) * Matrix::identity(4)) * u);
  return {t.block(0, 0, 2, 2), t.block(0, 2, 2, 2), t.block(2, 0, 2, 2), t.block(2, 2, 2, 2)};
}

// sigma^mu p_mu and sigma-bar^mu p_mu, sigma-bar = (I, -sigma_k).
inline Matrix sigma_dot(const FourVector& p) {
  FourVector pl = p.lowered();
  Matrix s = Matrix::zeros(2, 2);
  for (std::size_t mu = 0; mu < 4; ++mu) s = s + pl[mu] * pauli(mu);
  return s;
}
inline Matrix sigma_bar_dot(const FourVector& p) {
  FourVector pl = p.lowered();
  Matrix s = pl[0] * pauli(0);
  for (std::size_t k = 1; k <= 3; ++k) s = s - pl[k] * pauli(k);
  return s;
}

inline Report massless_block_transform() {
  Report rep;
  Matrix u = weyl_basis_change();
  rep.add("u_involution", u * u == Scalar(2) * Matrix::identity(4), "U'^2 = 2 I, so U = U'/sqrt2 = U^-1");

  bool decouple = true;
  for (const auto& s : massless_fixtures()) {
    WeylBlocks b = weyl_blocks(s.p(), Rational(0));
    decouple = decouple && b.upper_left.is_zero() && b.lower_right.is_zero() && b.lower_left == sigma_dot(s.p()) &&
               b.upper_right == sigma_bar_dot(s.p());
  }
  rep.add("massless_decoupling", decouple, "m = 0: diagonal blocks vanish, off-diagonal blocks are sigma.p and sigma-bar.p");

  FourVector p1({1, 0, 0, 1});
  WeylBlocks b1 = weyl_blocks(p1, Rational(0));
  KernelReport ur = rank_and_kernel(b1.upper_right), ll = rank_and_kernel(b1.lower_left);
  rep.add("null_axis_kernels",
          ur.kernel_dim == 1 && same_subspace(ur.kernel_basis, {Matrix::column({0, 1})}) && ll.kernel_dim == 1 &&
              same_subspace(ll.kernel_basis, {Matrix::column({1, 0})}),
          "p = (1,0,0,1): upper-right annihilates (0,1), lower-left annihilates (1,0)");

  WeylBlocks b2 = weyl_blocks(FourVector({3, 1, 2, 0}), Rational(2));
  rep.add("massive_coupling",
          b2.upper_left == Scalar(-2) * Matrix::identity(2) && b2.lower_right == Scalar(-2) * Matrix::identity(2) &&
              !b2.upper_right.is_zero() && !b2.lower_left.is_zero(),
          "m = 2, p = (3,1,2,0): mass blocks -m I couple the two Weyl components");
  return rep;
}

} // namespace lubanski
