#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lubanski/elimination.hpp"

namespace lubanski {

// Metric g = diag(1,-1,-1,-1); g_{mu nu} and g^{mu nu} coincide.
inline int metric(std::size_t mu) {
  if (mu > 3) throw DomainError("index " + std::to_string(mu) + " out of range 0..3");
  return mu == 0 ? 1 : -1;
}

inline int metric(std::size_t mu, std::size_t nu) {
  int g = metric(mu);
  return metric(nu) && mu == nu ? g : 0;
}

inline Matrix metric_matrix() { return Matrix::diagonal({1, -1, -1, -1}); }

// Lower-index symbol, e_{0123} = +1.
inline int levi_civita(std::size_t mu, std::size_t nu, std::size_t sigma, std::size_t tau) {
  std::array<std::size_t, 4> idx{mu, nu, sigma, tau};
  for (auto i : idx)
    if (i > 3) throw DomainError("Levi-Civita index " + std::to_string(i) + " out of range 0..3");
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// Raising all four indices multiplies by det g = -1.
inline int levi_civita_upper(std::size_t mu, std::size_t nu, std::size_t sigma, std::size_t tau) {
  return -levi_civita(mu, nu, sigma, tau);
}

// Three-index symbol e_{abc} on spatial indices 1..3, e_{123} = +1.
inline int levi_civita3(std::size_t a, std::size_t b, std::size_t c) { return levi_civita(0, a, b, c); }

struct Permutation4 {
  std::array<std::size_t, 4> idx;
  int sign;
};

// The 24 index tuples with nonzero e_{mu nu sigma tau}.
inline const std::vector<Permutation4>& levi_civita_support() {
  static const std::vector<Permutation4> support = [] {
    std::vector<Permutation4> out;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          for (std::size_t d = 0; d < 4; ++d)
            if (int s = levi_civita(a, b, c, d)) out.push_back({{a, b, c, d}, s});
    return out;
  }();
  return support;
}

enum class Variance { upper, lower };

class FourVector {
public:
  FourVector() = default;
  FourVector(std::array<Scalar, 4> components, Variance v = Variance::upper) : c_(std::move(components)), v_(v) {}

  const Scalar& operator[](std::size_t mu) const {
    if (mu > 3) throw DomainError("four-vector index " + std::to_string(mu) + " out of range");
    return c_[mu];
  }
  Variance variance() const { return v_; }
  const std::array<Scalar, 4>& components() const { return c_; }

  FourVector lowered() const { return v_ == Variance::lower ? *this : flip(Variance::lower); }
  FourVector raised() const { return v_ == Variance::upper ? *this : flip(Variance::upper); }

  // p_mu p^mu, independent of the stored variance.
  Scalar square() const {
    Scalar s;
    for (std::size_t mu = 0; mu < 4; ++mu) s += Scalar(metric(mu)) * c_[mu] * c_[mu];
    return s;
  }

  Matrix as_column() const { return Matrix::column({c_[0], c_[1], c_[2], c_[3]}); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const FourVector& a, const FourVector& b) { return a.v_ == b.v_ && a.c_ == b.c_; }

  // Sums are taken in the variance of the left operand.
  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    FourVector bb = a.v_ == Variance::upper ? b.raised() : b.lowered();
    std::array<Scalar, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = a.c_[mu] + bb.c_[mu];
    return FourVector(out, a.v_);
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    FourVector bb = a.v_ == Variance::upper ? b.raised() : b.lowered();
    std::array<Scalar, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = a.c_[mu] - bb.c_[mu];
    return FourVector(out, a.v_);
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t mu = 0; mu < 4; ++mu) s += (mu ? "," : "") + c_[mu].str();
    return s + ")";
  }

private:
  FourVector flip(Variance to) const {
    std::array<Scalar, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = Scalar(metric(mu)) * c_[mu];
    return FourVector(out, to);
  }

  std::array<Scalar, 4> c_{};
  Variance v_ = Variance::upper;
};

// Contraction a^mu b_mu of two vectors given in any variance.
inline Scalar minkowski_dot(const FourVector& a, const FourVector& b) {
  FourVector au = a.raised(), bl = b.lowered();
  Scalar s;
  for (std::size_t mu = 0; mu < 4; ++mu) s += au[mu] * bl[mu];
  return s;
}

// A real momentum p^mu with p^2 = mass_squared exactly.
class MomentumSample {
public:
  MomentumSample(std::array<Rational, 4> upper, Rational mass_squared) : m2_(std::move(mass_squared)) {
    std::array<Scalar, 4> c;
    for (std::size_t mu = 0; mu < 4; ++mu) c[mu] = Scalar(upper[mu]);
    p_ = FourVector(c, Variance::upper);
    if (p_.square() != Scalar(m2_))
      throw DomainError("momentum " + p_.str() + " has p^2 = " + p_.square().str() + ", not " + m2_.get_str());
  }

  // The sample whose shell is its own p^2.
  static MomentumSample of(std::array<Rational, 4> upper) {
    Rational s = upper[0] * upper[0] - upper[1] * upper[1] - upper[2] * upper[2] - upper[3] * upper[3];
    return MomentumSample(upper, s);
  }

  const FourVector& p() const { return p_; }
  FourVector lower() const { return p_.lowered(); }
  const Rational& mass_squared() const { return m2_; }
  bool is_massless() const { return m2_ == 0; }
  Scalar upper(std::size_t mu) const { return p_[mu]; }
  Scalar lower(std::size_t mu) const { return Scalar(metric(mu)) * p_[mu]; }
  std::string str() const { return p_.str(); }

private:
  FourVector p_;
  Rational m2_;
};

namespace detail {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

// Exact square root of a nonnegative rational, when it is a perfect square.
inline bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

} // namespace detail

// Massive fixtures. For a perfect-square m^2 = m*m the unit-mass list is scaled
// by m (m^2 = 4 gives (2,0,0,0), (3,1,2,0), (3,-1,-2,0), (4,2,2,2), ...).
// Otherwise p = (E, k n) with E - k = 1, E + k = m^2 along rational unit
// directions n.
inline std::vector<MomentumSample> massive_fixtures(const Rational& m2) {
  using detail::q;
  if (m2 <= 0) throw DomainError("massive fixtures need m^2 > 0, got " + m2.get_str());
  std::vector<MomentumSample> out;
  Rational m;
  if (detail::rational_sqrt(m2, m)) {
    const std::vector<std::array<Rational, 4>> unit = {
        {q(1), q(0), q(0), q(0)},          {q(3, 2), q(1, 2), q(1), q(0)},
        {q(3, 2), q(-1, 2), q(-1), q(0)},  {q(2), q(1), q(1), q(1)},
        {q(5, 4), q(1, 4), q(1, 2), q(1, 2)}, {q(5, 4), q(3, 4), q(0), q(0)},
    };
    for (const auto& u : unit) out.emplace_back(std::array<Rational, 4>{m * u[0], m * u[1], m * u[2], m * u[3]}, m2);
    return out;
  }
  Rational e = (m2 + 1) / 2, k = (m2 - 1) / 2;
  const std::vector<std::array<Rational, 3>> dirs = {
      {q(1), q(0), q(0)}, {q(3, 5), q(4, 5), q(0)}, {q(1, 3), q(2, 3), q(2, 3)}};
  for (const auto& n : dirs) out.emplace_back(std::array<Rational, 4>{e, k * n[0], k * n[1], k * n[2]}, m2);
  return out;
}

inline std::vector<MomentumSample> massless_fixtures() {
  using detail::q;
  const std::vector<std::array<Rational, 4>> list = {
      {q(1), q(0), q(0), q(1)},  {q(3), q(2), q(2), q(1)},        {q(1), q(1), q(0), q(0)},
      {q(3), q(-2), q(1), q(2)}, {q(3, 2), q(1, 2), q(1), q(1)},
  };
  std::vector<MomentumSample> out;
  for (const auto& p : list) out.emplace_back(p, Rational(0));
  return out;
}

// Momenta with p^2 off every shell used by the suites (p^2 = -1, 3, 2).
inline std::vector<MomentumSample> offshell_fixtures() {
  using detail::q;
  return {MomentumSample::of({q(1), q(1), q(1), q(0)}), MomentumSample::of({q(2), q(1), q(0), q(0)}),
          MomentumSample::of({q(2), q(1), q(0), q(1)})};
}

enum class LorentzKind { identity, boost, rotation, product };

inline std::string to_string(LorentzKind k) {
  switch (k) {
    case LorentzKind::identity: return "identity";
    case LorentzKind::boost: return "boost";
    case LorentzKind::rotation: return "rotation";
    case LorentzKind::product: return "product";
  }
  return "product";
}

// Antisymmetric index pair (a,b) naming a boost (0,k) or rotation plane.
struct Plane {
  std::size_t a;
  std::size_t b;
};

inline Plane boost_plane(std::size_t axis) {
  if (axis < 1 || axis > 3) throw DomainError("boost axis " + std::to_string(axis) + " out of range 1..3");
  return {0, axis};
}

// plane code 12, 23 or 31
inline Plane rotation_plane(int code) {
  switch (code) {
    case 12: return {1, 2};
    case 23: return {2, 3};
    case 31: return {3, 1};
    default: throw DomainError("rotation plane " + std::to_string(code) + " is not one of 12, 23, 31");
  }
}

// Lambda^mu_nu as a 4x4 real matrix; row mu, column nu.
class LorentzMatrix {
public:
  LorentzMatrix() : m_(Matrix::identity(4)), kind_(LorentzKind::identity) {}
  LorentzMatrix(Matrix m, LorentzKind kind) : m_(std::move(m)), kind_(kind) {
    if (m_.rows() != 4 || m_.cols() != 4) throw DimensionMismatch("Lorentz matrix must be 4x4, got " + m_.shape());
  }

  const Matrix& matrix() const { return m_; }
  LorentzKind kind() const { return kind_; }
  const Scalar& operator()(std::size_t mu, std::size_t nu) const { return m_(mu, nu); }

  FourVector apply(const FourVector& p) const {
    Matrix v = m_ * p.raised().as_column();
    return FourVector({v(0, 0), v(1, 0), v(2, 0), v(3, 0)}, Variance::upper);
  }

  bool preserves_metric() const {
    Matrix g = metric_matrix();
    return m_.transpose() * g * m_ == g;
  }
  Scalar det() const { return determinant(m_); }
  bool is_proper_orthochronous() const {
    return preserves_metric() && det() == Scalar(1) && m_(0, 0).is_real() && m_(0, 0).re() >= 1;
  }

  // Inverse from the metric: (Lambda^-1) = g Lambda^T g.
  LorentzMatrix inverse() const {
    Matrix g = metric_matrix();
    return LorentzMatrix(g * m_.transpose() * g, kind_);
  }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzKind k = a.kind_ == LorentzKind::identity ? b.kind_
                    : b.kind_ == LorentzKind::identity ? a.kind_
                                                       : LorentzKind::product;
    return LorentzMatrix(a.m_ * b.m_, k);
  }

private:
  Matrix m_;
  LorentzKind kind_;
};

// c = cosh(theta), s = sinh(theta); mixing block (c, -s; -s, c).
inline LorentzMatrix fundamental_boost(std::size_t axis, const Rational& c, const Rational& s) {
  Plane pl = boost_plane(axis);
  if (c * c - s * s != 1 || c < 1)
    throw DomainError("(" + c.get_str() + ", " + s.get_str() + ") is not on the unit hyperbola branch c >= 1");
  return LorentzMatrix(Matrix::generate(4, 4,
                                        [&](std::size_t r, std::size_t k) -> Scalar {
                                          if (r == k) return Scalar(r == pl.a || r == pl.b ? c : Rational(1));
                                          if ((r == pl.a && k == pl.b) || (r == pl.b && k == pl.a)) return Scalar(Rational(-s));
                                          return Scalar();
                                        }),
                       c == 1 ? LorentzKind::identity : LorentzKind::boost);
}

// c = cos(theta), s = sin(theta); block (c, s; -s, c) in the (a,b) plane.
inline LorentzMatrix fundamental_rotation(int plane, const Rational& c, const Rational& s) {
  Plane pl = rotation_plane(plane);
  if (c * c + s * s != 1) throw DomainError("(" + c.get_str() + ", " + s.get_str() + ") is not on the unit circle");
  return LorentzMatrix(Matrix::generate(4, 4,
                                        [&](std::size_t r, std::size_t k) -> Scalar {
                                          if (r == k) return Scalar(r == pl.a || r == pl.b ? c : Rational(1));
                                          if (r == pl.a && k == pl.b) return Scalar(s);
                                          if (r == pl.b && k == pl.a) return Scalar(Rational(-s));
                                          return Scalar();
                                        }),
                       (c == 1) ? LorentzKind::identity : LorentzKind::rotation);
}

// Double-angle maps from half-angle pairs.
inline std::pair<Rational, Rational> hyperbolic_double(const Rational& c, const Rational& s) {
  return {c * c + s * s, 2 * c * s};
}
inline std::pair<Rational, Rational> circular_double(const Rational& c, const Rational& s) {
  return {c * c - s * s, 2 * c * s};
}

// e_{mu nu sigma tau} L^mu_l L^nu_k L^sigma_r L^tau_x = det(L) e_{l k r x} for all 256 tuples.
inline bool levi_civita_det_identity(const LorentzMatrix& l) {
  Scalar d = l.det();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t e = 0; e < 4; ++e) {
          Scalar lhs;
          for (const auto& t : levi_civita_support())
            lhs += Scalar(t.sign) * l(t.idx[0], a) * l(t.idx[1], b) * l(t.idx[2], c) * l(t.idx[3], e);
          if (lhs != d * Scalar(levi_civita(a, b, c, e))) return false;
        }
  return true;
}

} // namespace lubanski
