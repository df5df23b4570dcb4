#include "eigenrec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigenrec/kernels.hpp"
#include "eigenrec/log.hpp"

namespace eigenrec {

namespace ker = kernels;

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

double frobenius(const Matrix& m) {
  return std::sqrt(ker::dot(m.data(), m.data(), m.rows() * m.cols()));
}

Matrix gram(const Matrix& a) {
  if (a.empty()) throw Error("gram of an empty matrix");
  const Matrix at = transpose(a);  // columns become contiguous rows
  const std::size_t m = at.rows();
  const std::size_t d = at.cols();
  Matrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double v = ker::dot(at.row(i), at.row(j), d);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  }
  return g;
}

EigenPairs sym_eig(const Matrix& s) {
  if (s.empty() || s.rows() != s.cols()) throw Error("sym_eig requires a square matrix");
  const std::size_t n = s.rows();

  // Work on the symmetric part; gram output is already exactly symmetric.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = 0.5 * (s.at(i, j) + s.at(j, i));

  Matrix vt = Matrix::identity(n);  // row i accumulates eigenvector i

  // Frobenius norm is invariant under the rotations, so the threshold is
  // fixed up front.
  const double tol = 1e-12 * frobenius(a);

  bool converged = false;
  int sweeps = 0;
  for (; sweeps < 100; ++sweeps) {
    double max_off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        max_off = std::max(max_off, std::fabs(a.at(p, q)));
    if (max_off <= tol) {
      converged = true;
      break;
    }

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::fabs(apq) <= tol) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // avoids overflow in theta * theta
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        ker::rot(a.row(p), a.row(q), c, sn, n);
        for (std::size_t i = 0; i < n; ++i) {
          const double x = a.at(i, p);
          const double y = a.at(i, q);
          a.at(i, p) = c * x - sn * y;
          a.at(i, q) = sn * x + c * y;
        }
        a.at(p, q) = 0.0;  // annihilated by construction, drop the rounding dust
        a.at(q, p) = 0.0;

        ker::rot(vt.row(p), vt.row(q), c, sn, n);
      }
    }
  }
  if (!converged) throw Error("eigensolver failed to converge after 100 sweeps");
  log::debug("sym_eig: n=", n, " converged after ", sweeps, " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a.at(i, i) > a.at(j, j); });

  EigenPairs out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    out.values[i] = a.at(src, src);
    double sign = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double v = vt.at(src, r);
      if (v != 0.0) {
        sign = v > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) out.vectors.at(r, i) = sign * vt.at(src, r);
  }
  return out;
}

namespace {

std::size_t count_above_rank_tol(const std::vector<double>& values, double rank_tol) {
  const double top = values.empty() ? 0.0 : std::max(values.front(), 0.0);
  const double threshold = rank_tol * top;
  std::size_t r = 0;
  while (r < values.size() && values[r] > threshold && values[r] > 0.0) ++r;
  return r;
}

// Columns of AᵀA eigenvectors mapped through A, unit-normalized, then a
// modified Gram-Schmidt pass. Rows of the result are the lifted vectors
// (transposed layout keeps every inner loop contiguous).
Matrix lift_rows(const Matrix& a, const Matrix& vectors, std::size_t r) {
  const std::size_t d = a.rows();
  const std::size_t m = a.cols();
  Matrix ut(r, d);
  std::vector<double> x(m);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < m; ++c) x[c] = vectors.at(c, i);
    double* u = ut.row(i);
    for (std::size_t row = 0; row < d; ++row) u[row] = ker::dot(a.row(row), x.data(), m);
    for (std::size_t j = 0; j < i; ++j) {
      const double proj = ker::dot(ut.row(j), u, d);
      ker::axpy(u, -proj, ut.row(j), d);
    }
    const double norm = std::sqrt(ker::dot(u, u, d));
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw Error("eigenvector lift produced a degenerate basis");
    ker::affine(u, u, 1.0 / norm, 0.0, d);
  }
  return ut;
}

}  // namespace

EigenPairs lift_eigenvectors(const Matrix& a, const EigenPairs& small, double rank_tol) {
  if (a.empty()) throw Error("lift_eigenvectors of an empty matrix");
  if (small.count() != a.cols() || small.vectors.rows() != a.cols())
    throw Error("eigendecomposition does not match matrix");

  const std::size_t r = count_above_rank_tol(small.values, rank_tol);
  const Matrix ut = lift_rows(a, small.vectors, r);

  EigenPairs out;
  out.values.assign(small.values.begin(), small.values.begin() + static_cast<std::ptrdiff_t>(r));
  out.vectors = transpose(ut);
  return out;
}

ThinSvd thin_svd_via_gram(const Matrix& a, double rank_tol) {
  const EigenPairs pairs = sym_eig(gram(a));
  const std::size_t r = count_above_rank_tol(pairs.values, rank_tol);

  ThinSvd out;
  out.sigma.resize(r);
  for (std::size_t i = 0; i < r; ++i) out.sigma[i] = std::sqrt(pairs.values[i]);
  out.v = Matrix(a.cols(), r);
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t i = 0; i < r; ++i) out.v.at(c, i) = pairs.vectors.at(c, i);
  out.u = transpose(lift_rows(a, pairs.vectors, r));
  return out;
}

}  // namespace eigenrec
