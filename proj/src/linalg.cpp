#include "gsa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsa/errors.hpp"

namespace gsa {

Matrix cholesky(const Matrix& a) {
  if (a.rows() != a.cols()) throw ConfigError("cholesky: matrix must be square");
  std::size_t n = a.rows();
  Matrix l(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0)
          throw ConfigError("cholesky: matrix is not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

namespace {

// In-place Householder QR of a copy of A; returns R factors and applies the
// same transforms to b.
void householder_qr(Matrix& a, std::vector<double>& b) {
  std::size_t m = a.rows(), n = a.cols();
  for (std::size_t k = 0; k < n && k < m; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    double alpha = a(k, k) > 0.0 ? -norm : norm;
    std::vector<double> v(m - k);
    v[0] = a(k, k) - alpha;
    for (std::size_t i = k + 1; i < m; ++i) v[i - k] = a(i, k);
    double vnorm2 = 0.0;
    for (double t : v) vnorm2 += t * t;
    if (vnorm2 == 0.0) continue;
    a(k, k) = alpha;
    for (std::size_t i = k + 1; i < m; ++i) a(i, k) = 0.0;
    for (std::size_t j = k + 1; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += v[i - k] * a(i, j);
      double f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < m; ++i) a(i, j) -= f * v[i - k];
    }
    double dot = 0.0;
    for (std::size_t i = k; i < m; ++i) dot += v[i - k] * b[i];
    double f = 2.0 * dot / vnorm2;
    for (std::size_t i = k; i < m; ++i) b[i] -= f * v[i - k];
  }
}

}  // namespace

std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b,
                                  double* rss) {
  if (a.rows() != b.size()) throw ConfigError("least_squares: shape mismatch");
  if (a.rows() < a.cols())
    throw ConfigError("least_squares: more columns than rows");
  Matrix r = a;
  std::vector<double> qtb = b;
  householder_qr(r, qtb);
  std::size_t n = a.cols();
  std::vector<double> x(n, 0.0);
  for (std::size_t kk = n; kk-- > 0;) {
    double s = qtb[kk];
    for (std::size_t j = kk + 1; j < n; ++j) s -= r(kk, j) * x[j];
    double diag = r(kk, kk);
    if (std::fabs(diag) < 1e-300)
      throw ConfigError("least_squares: rank-deficient design");
    x[kk] = s / diag;
  }
  if (rss) {
    double s = 0.0;
    for (std::size_t i = n; i < a.rows(); ++i) s += qtb[i] * qtb[i];
    *rss = s;
  }
  return x;
}

std::size_t matrix_rank(const Matrix& a, double rel_tol) {
  Matrix r = a;
  std::vector<double> dummy(a.rows(), 0.0);
  householder_qr(r, dummy);
  double maxdiag = 0.0;
  std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < lim; ++k)
    maxdiag = std::max(maxdiag, std::fabs(r(k, k)));
  if (maxdiag == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < lim; ++k)
    if (std::fabs(r(k, k)) > rel_tol * maxdiag) ++rank;
  return rank;
}

}  // namespace gsa
