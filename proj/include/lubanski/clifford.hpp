#pragma once

#include <array>
#include <cstddef>

#include "lubanski/minkowski.hpp"

namespace lubanski {

using GeneratorTable = std::array<std::array<Matrix, 4>, 4>;

// sigma_0 = I, then the Pauli matrices.
inline Matrix pauli(std::size_t k) {
  const Scalar i = Scalar::i();
  switch (k) {
    case 0: return Matrix::identity(2);
    case 1: return Matrix{{0, 1}, {1, 0}};
    case 2: return Matrix{{0, -i}, {i, 0}};
    case 3: return Matrix{{1, 0}, {0, -1}};
    default: throw DomainError("Pauli index " + std::to_string(k) + " out of range 0..3");
  }
}

// Dirac representation: gamma^0 = diag(I,-I), gamma^k = ((0, s_k), (-s_k, 0)).
inline Matrix gamma(std::size_t mu) {
  if (mu == 0) return kron(pauli(3), pauli(0));
  if (mu > 3) throw DomainError("gamma index " + std::to_string(mu) + " out of range 0..3");
  return kron(Matrix{{0, 1}, {-1, 0}}, pauli(mu));
}

inline Matrix gamma_lower(std::size_t mu) { return Scalar(metric(mu)) * gamma(mu); }

// gamma^5 = i g^0 g^1 g^2 g^3 = ((0, I), (I, 0)); gamma_5 = -gamma^5.
inline Matrix gamma5() { return kron(pauli(1), pauli(0)); }
inline Matrix gamma5_lower() { return -gamma5(); }

// Sigma_k = diag(s_k, s_k), alpha_k = gamma^0 gamma^k.
inline Matrix spin_sigma(std::size_t k) { return kron(pauli(0), pauli(k)); }
inline Matrix alpha(std::size_t k) { return gamma(0) * gamma(k); }
inline Matrix beta() { return gamma(0); }

// gamma-slash with p lowered: gamma^mu p_mu.
inline Matrix slash(const FourVector& p) {
  FourVector pl = p.lowered();
  Matrix s = Matrix::zeros(4, 4);
  for (std::size_t mu = 0; mu < 4; ++mu) s = s + pl[mu] * gamma(mu);
  return s;
}

// Sigma^{mu nu} = (gamma^mu gamma^nu - gamma^nu gamma^mu) / 2.
inline GeneratorTable dirac_sigma_table() {
  GeneratorTable t;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = Scalar::frac(1, 2) * commutator(gamma(a), gamma(b));
  return t;
}

// Two-spinor generators: Sigma^{0k} = -s_k, Sigma^{ab} = i e_{abc} s_c.
inline GeneratorTable weyl_sigma_table() {
  GeneratorTable t;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) {
        t[a][b] = Matrix::zeros(2, 2);
      } else if (a == 0) {
        t[a][b] = -pauli(b);
      } else if (b == 0) {
        t[a][b] = pauli(a);
      } else {
        std::size_t c = 6 - a - b;
        t[a][b] = (Scalar(levi_civita3(a, b, c)) * Scalar::i()) * pauli(c);
      }
    }
  return t;
}

// Real spin matrices (s_k)_{ab} = -e_{kab}; [s_p, s_q] = e_{pqr} s_r.
inline Matrix spin_matrix(std::size_t k) {
  if (k < 1 || k > 3) throw DomainError("spin matrix index " + std::to_string(k) + " out of range 1..3");
  return Matrix::generate(3, 3, [&](std::size_t a, std::size_t b) { return Scalar(-levi_civita3(k, a + 1, b + 1)); });
}

// SO(3,C) generators: Sigma^{0k} = i s_k, Sigma^{ab} = e_{abc} s_c.
inline GeneratorTable so3c_sigma_table() {
  GeneratorTable t;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) {
        t[a][b] = Matrix::zeros(3, 3);
      } else if (a == 0) {
        t[a][b] = Scalar::i() * spin_matrix(b);
      } else if (b == 0) {
        t[a][b] = -Scalar::i() * spin_matrix(a);
      } else {
        std::size_t c = 6 - a - b;
        t[a][b] = Scalar(levi_civita3(a, b, c)) * spin_matrix(c);
      }
    }
  return t;
}

// (m^{ab})^mu_nu = g^{a mu} delta^b_nu - g^{b mu} delta^a_nu.
inline Matrix vector_generator(std::size_t a, std::size_t b) {
  return Matrix::generate(4, 4, [&](std::size_t mu, std::size_t nu) {
    return Scalar(metric(a, mu) * (b == nu ? 1 : 0) - metric(b, mu) * (a == nu ? 1 : 0));
  });
}

// Four-by-four matrices J_p with Q = F_p J_p for the complex field F.
inline Matrix quaternion_unit(std::size_t p) {
  const Scalar i = Scalar::i();
  switch (p) {
    case 1: return Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, i}, {0, 0, -i, 0}};
    case 2: return Matrix{{0, 0, -1, 0}, {0, 0, 0, -i}, {1, 0, 0, 0}, {0, i, 0, 0}};
    case 3: return Matrix{{0, 0, 0, -1}, {0, 0, i, 0}, {0, -i, 0, 0}, {1, 0, 0, 0}};
    default: throw DomainError("quaternion unit index " + std::to_string(p) + " out of range 1..3");
  }
}

// T_{mu nu} = g_{mu a} g_{nu b} T^{ab} for every entry of a table.
inline GeneratorTable lower_both(const GeneratorTable& t) {
  GeneratorTable out;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) out[a][b] = Scalar(metric(a) * metric(b)) * t[a][b];
  return out;
}

inline GeneratorTable scale(const Scalar& s, const GeneratorTable& t) {
  GeneratorTable out;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) out[a][b] = s * t[a][b];
  return out;
}

} // namespace lubanski
