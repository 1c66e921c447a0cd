#pragma once

#include <random>
#include <vector>

#include "lubanski/elimination.hpp"

namespace lubanski::testing {

// Textbook Gauss-Jordan with full fraction arithmetic, used as an independent oracle
// for the fraction-free routines under test. Returns the RREF and its pivot columns.
struct NaiveRref {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivots;
};

inline NaiveRref naive_rref(const Matrix& m) {
  NaiveRref out;
  out.rows.assign(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.rows[r][c] = m(r, c);
  auto& a = out.rows;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && a[piv][c].is_zero()) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[lead]);
    Scalar inv = Scalar(1) / a[lead][c];
    for (auto& x : a[lead]) x = x * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] - f * a[lead][k];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

inline std::size_t naive_rank(const Matrix& m) { return m.empty() ? 0 : naive_rref(m).pivots.size(); }

// Kernel basis read off the naive RREF: one vector per free column.
inline std::vector<Matrix> naive_kernel(const Matrix& m) {
  NaiveRref r = naive_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Matrix> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.rows[k][f];
    out.push_back(Matrix::column(v));
  }
  return out;
}

// Cofactor expansion along the first row; fine for the small sizes in the corpus.
inline Scalar naive_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar d;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor = Matrix::generate(n - 1, n - 1, [&](std::size_t r, std::size_t k) { return m(r + 1, k < c ? k : k + 1); });
    Scalar term = m(0, c) * naive_determinant(minor);
    d = (c % 2 == 0) ? d + term : d - term;
  }
  return d;
}

class MatrixCorpus {
public:
  explicit MatrixCorpus(unsigned seed) : rng_(seed) {}

  Scalar entry(bool gaussian = true) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), zero(0, 3);
    if (zero(rng_) == 0) return Scalar();
    Rational re(num(rng_), den(rng_)), im(gaussian ? num(rng_) : 0, den(rng_));
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
  }

  Matrix random(std::size_t r, std::size_t c, bool gaussian = true) {
    return Matrix::generate(r, c, [&](std::size_t, std::size_t) { return entry(gaussian); });
  }

  // Product of r x k and k x c factors, rank at most k.
  Matrix low_rank(std::size_t r, std::size_t c, std::size_t k) { return random(r, k) * random(k, c); }

  std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  // Mixed corpus: full random, rank-deficient products, real-only, and tall/wide shapes.
  std::vector<Matrix> generate(std::size_t count) {
    std::vector<Matrix> out;
    for (std::size_t n = 0; n < count; ++n) {
      std::size_t r = size(1, 7), c = size(1, 7);
      switch (n % 4) {
        case 0: out.push_back(random(r, c)); break;
        case 1: out.push_back(low_rank(r, c, size(1, 3))); break;
        case 2: out.push_back(random(r, c, false)); break;
        default: out.push_back(low_rank(size(5, 9), size(1, 4), size(1, 2))); break;
      }
    }
    return out;
  }

private:
  std::mt19937 rng_;
};

inline constexpr unsigned corpus_seed = 20261016u;

} // namespace lubanski::testing
