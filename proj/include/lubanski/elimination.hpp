#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lubanski/matrix.hpp"

namespace lubanski {

struct KernelReport {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<Matrix> kernel_basis;  // columns, one per free variable in index order
  std::vector<std::size_t> pivot_columns;

  Matrix basis_matrix(std::size_t length) const {
    if (kernel_basis.empty()) return Matrix::zeros(length, 0);
    return hstack(kernel_basis);
  }
};

// Row echelon form produced by fraction-free elimination. When `integral` is
// set the rows were first scaled to Gaussian integers and every stored entry
// is then a Gaussian integer (a minor of the scaled input).
struct EchelonForm {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_columns;
  int swap_sign = 1;
  bool integral = false;
};

namespace detail {

inline mpz_class row_denominator_lcm(const std::vector<Scalar>& row) {
  mpz_class l = 1;
  for (const auto& x : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  return l;
}

inline std::vector<std::vector<Scalar>> to_rows(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

} // namespace detail

// Bareiss elimination: after pivot k every entry below the pivot rows is the
// (k+1)-order minor divided exactly by the previous pivot.
inline EchelonForm bareiss_echelon(const Matrix& m, bool scale_to_integers = true) {
  EchelonForm out;
  out.rows = detail::to_rows(m);
  out.integral = scale_to_integers;
  auto& a = out.rows;
  if (scale_to_integers)
    for (auto& row : a) {
      Scalar l{Rational(detail::row_denominator_lcm(row))};
      for (auto& x : row) x *= l;
    }
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c].is_zero()) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = Scalar();
    }
    // rows above the new pivot row stay as they are; rows below now carry minors
    prev = a[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  // Entries of unprocessed trailing rows are all zero once the pivots run out.
  return out;
}

// Reduced row echelon form by back-substitution on the Bareiss echelon rows.
struct ReducedForm {
  Matrix rref;  // rank x cols
  std::vector<std::size_t> pivot_columns;
};

inline ReducedForm reduced_row_echelon(const Matrix& m) {
  EchelonForm e = bareiss_echelon(m);
  const std::size_t rank = e.pivot_columns.size();
  auto& a = e.rows;
  for (std::size_t k = rank; k-- > 0;) {
    std::size_t pc = e.pivot_columns[k];
    Scalar inv = a[k][pc].inverse();
    for (std::size_t j = pc; j < m.cols(); ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i][pc].is_zero()) continue;
      Scalar f = a[i][pc];
      for (std::size_t j = pc; j < m.cols(); ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Scalar> d;
  d.reserve(rank * m.cols());
  for (std::size_t k = 0; k < rank; ++k) d.insert(d.end(), a[k].begin(), a[k].end());
  return {Matrix(rank, m.cols(), std::move(d)), e.pivot_columns};
}

class KernelVerificationFailure : public Error {
public:
  using Error::Error;
};

inline KernelReport rank_and_kernel(const Matrix& m) {
  if (m.cols() == 0) throw DimensionMismatch("rank_and_kernel of a matrix with no columns");
  KernelReport rep;
  if (m.rows() == 0) {
    rep.kernel_dim = m.cols();
    for (std::size_t f = 0; f < m.cols(); ++f) rep.kernel_basis.push_back(Matrix::unit_vector(m.cols(), f));
    return rep;
  }
  ReducedForm red = reduced_row_echelon(m);
  rep.rank = red.pivot_columns.size();
  rep.pivot_columns = red.pivot_columns;
  rep.kernel_dim = m.cols() - rep.rank;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < rep.rank; ++k) v[red.pivot_columns[k]] = -red.rref(k, f);
    Matrix col = Matrix::column(std::move(v));
    if (!(m * col).is_zero()) throw KernelVerificationFailure("kernel vector fails M*v = 0 for " + m.shape());
    rep.kernel_basis.push_back(std::move(col));
  }
  return rep;
}

inline std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return bareiss_echelon(m).pivot_columns.size();
}

inline Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant needs a square matrix, got " + m.shape());
  if (m.rows() == 0) return Scalar(1);
  EchelonForm e = bareiss_echelon(m, false);
  if (e.pivot_columns.size() < m.rows()) return Scalar();
  return Scalar(e.swap_sign) * e.rows.back().back();
}

class SingularMatrix : public Error {
public:
  using Error::Error;
};

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse needs a square matrix, got " + m.shape());
  const std::size_t n = m.rows();
  ReducedForm red = reduced_row_echelon(hstack({m, Matrix::identity(n)}));
  if (red.pivot_columns.size() < n || red.pivot_columns[n - 1] != n - 1) throw SingularMatrix("singular " + m.shape());
  return red.rref.block(0, n, n, n);
}

enum class SubspaceRelation { equal, a_subset_b, b_subset_a, incomparable };

inline std::string to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::equal: return "equal_kernels";
    case SubspaceRelation::a_subset_b: return "a_subset_b";
    case SubspaceRelation::b_subset_a: return "b_subset_a";
    case SubspaceRelation::incomparable: return "incomparable";
  }
  return "incomparable";
}

namespace detail {

inline std::size_t length_of(const std::vector<Matrix>& vs) {
  std::size_t n = 0;
  for (const auto& v : vs) {
    if (v.cols() != 1) throw DimensionMismatch("subspace member is not a column vector: " + v.shape());
    if (n != 0 && v.rows() != n) throw DimensionMismatch("subspace members of lengths " + std::to_string(n) + " and " +
                                                         std::to_string(v.rows()));
    n = v.rows();
  }
  return n;
}

inline std::size_t span_rank(const std::vector<Matrix>& vs) { return vs.empty() ? 0 : rank(hstack(vs)); }

} // namespace detail

inline SubspaceRelation subspace_relation(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::size_t na = detail::length_of(a);
  std::size_t nb = detail::length_of(b);
  if (na && nb && na != nb)
    throw DimensionMismatch("subspaces of lengths " + std::to_string(na) + " and " + std::to_string(nb));
  std::vector<Matrix> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t ra = detail::span_rank(a), rb = detail::span_rank(b), rab = detail::span_rank(both);
  bool a_in_b = rb == rab, b_in_a = ra == rab;
  if (a_in_b && b_in_a) return SubspaceRelation::equal;
  if (a_in_b) return SubspaceRelation::a_subset_b;
  if (b_in_a) return SubspaceRelation::b_subset_a;
  return SubspaceRelation::incomparable;
}

inline bool same_subspace(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  return subspace_relation(a, b) == SubspaceRelation::equal;
}

} // namespace lubanski
