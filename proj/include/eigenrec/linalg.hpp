#pragma once

#include <cstddef>
#include <vector>

#include "eigenrec/error.hpp"

namespace eigenrec {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& m);
double frobenius(const Matrix& m);

// Decomposition of a symmetric matrix. values descending; vectors holds
// unit-norm, mutually orthogonal eigenvectors as columns in value order,
// each with its first nonzero component positive.
struct EigenPairs {
  std::vector<double> values;
  Matrix vectors;

  std::size_t count() const { return values.size(); }
};

// Eigenvalues at or below rank_tol * max(largest eigenvalue, 0) count as
// numerically zero.
inline constexpr double kDefaultRankTol = 1e-12;

// AᵀA for column-image matrix a (rows x cols -> cols x cols). Each entry
// is computed once and mirrored, so the result is exactly symmetric.
Matrix gram(const Matrix& a);

// Cyclic Jacobi on the symmetric part of s. Sweeps until every
// off-diagonal magnitude is at most 1e-12 * frobenius(s); throws after
// 100 sweeps without convergence.
EigenPairs sym_eig(const Matrix& s);

// Maps eigenvectors x of AᵀA (in small) to unit eigenvectors of AAᵀ via
// normalize(A x), keeping eigenvalues above the rank threshold. Lifting
// erodes orthogonality for trailing eigenvalues, so the lifted basis is
// re-orthonormalized in descending eigenvalue order; signs follow the
// input vectors.
EigenPairs lift_eigenvectors(const Matrix& a, const EigenPairs& small,
                             double rank_tol = kDefaultRankTol);

// a = u * diag(sigma) * vᵀ restricted to singular values above the rank
// threshold; sigma descending and positive.
struct ThinSvd {
  Matrix u;                   // rows(a) x r
  std::vector<double> sigma;  // r
  Matrix v;                   // cols(a) x r
};

ThinSvd thin_svd_via_gram(const Matrix& a, double rank_tol = kDefaultRankTol);

}  // namespace eigenrec
