#ifndef GSA_LINALG_HPP
#define GSA_LINALG_HPP

#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
Matrix cholesky(const Matrix& a);

/// Least-squares solve of min ||A x - b|| by Householder QR.
/// Returns coefficients; rss (if non-null) receives the residual sum of squares.
std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b,
                                  double* rss = nullptr);

/// Numeric rank estimate from the QR diagonal (tolerance relative to the
/// largest diagonal magnitude). Intended for full-column-rank assertions.
std::size_t matrix_rank(const Matrix& a, double rel_tol = 1e-10);

}  // namespace gsa

#endif
