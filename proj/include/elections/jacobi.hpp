#ifndef ELECTIONS_JACOBI_HPP
#define ELECTIONS_JACOBI_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "elections/error.hpp"
#include "elections/matrix.hpp"

namespace elections {

struct SymmetricEigen {
  std::vector<double> values;  // unsorted, paired with columns of `vectors`
  Matrix vectors;
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Stops once the
// off-diagonal Frobenius norm drops below `relative_tol` times the norm of the
// input.
inline SymmetricEigen jacobi_eigen(Matrix a, double relative_tol = 1e-15, int max_sweeps = 100) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "jacobi_eigen needs a square matrix");

  SymmetricEigen out;
  out.vectors = Matrix::identity(n);

  double norm2 = 0.0;
  for (double v : a.values()) norm2 += v * v;
  const double stop2 = norm2 * relative_tol * relative_tol;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * a(p, q) * a(p, q);
    }
    if (off2 <= stop2) break;
    out.sweeps = sweep + 1;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double h = a(r, q);
          a(r, p) = a(p, r) = g - s * (h + g * tau);
          a(r, q) = a(q, r) = h + s * (g - h * tau);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double g = out.vectors(r, p);
          const double h = out.vectors(r, q);
          out.vectors(r, p) = g - s * (h + g * tau);
          out.vectors(r, q) = h + s * (g - h * tau);
        }
      }
    }
  }

  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  return out;
}

}  // namespace elections

#endif
