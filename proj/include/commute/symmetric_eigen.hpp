#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "commute/errors.hpp"

namespace commute {

struct JacobiOptions {
  int max_sweeps = 100;
  // Convergence when the off-diagonal L1 mass drops below
  // tol_scale * max(1, Frobenius norm of the input).
  double tol_scale = 1e-13;
};

// Eigenvalues of a dense symmetric matrix (row-major, n x n) by the cyclic
// Jacobi rotation method with thresholding.  Returns the eigenvalues sorted
// ascending; the matrix argument is consumed as scratch space.  Accuracy is
// on the order of the convergence tolerance times the matrix norm, far below
// the 1e-6 snapping granularity used downstream.  Throws ConvergenceError if
// the sweep budget is exhausted (does not happen for symmetric input).
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a,
                                                 std::size_t n,
                                                 JacobiOptions opt = {}) {
  if (a.size() != n * n) {
    throw ConstraintError("matrix buffer size does not match dimension");
  }
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-12) {
        throw ConstraintError("matrix is not symmetric");
      }
    }
  }
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double tol = opt.tol_scale * std::max(1.0, fro);

  std::vector<double> b(n), d(n), z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) b[i] = d[i] = a[i * n + i];

  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    double sm = 0.0;
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) sm += std::abs(a[p * n + q]);
    }
    if (sm <= tol) {
      std::sort(d.begin(), d.end());
      return d;
    }
    double tresh = sweep < 3 ? 0.2 * sm / (n * n) : 0.0;
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          a[p * n + q] = 0.0;
        } else if (std::abs(apq) > tresh) {
          double h = d[q] - d[p];
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = apq / h;
          } else {
            double theta = 0.5 * h / apq;
            t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          double tau = s / (1.0 + c);
          h = t * apq;
          z[p] -= h;
          z[q] += h;
          d[p] -= h;
          d[q] += h;
          a[p * n + q] = 0.0;
          auto rotate = [&](std::size_t i, std::size_t j, std::size_t k,
                            std::size_t l) {
            double gg = a[i * n + j];
            double hh = a[k * n + l];
            a[i * n + j] = gg - s * (hh + gg * tau);
            a[k * n + l] = hh + s * (gg - hh * tau);
          };
          for (std::size_t j = 0; j < p; ++j) rotate(j, p, j, q);
          for (std::size_t j = p + 1; j < q; ++j) rotate(p, j, j, q);
          for (std::size_t j = q + 1; j < n; ++j) rotate(p, j, q, j);
        }
      }
    }
    // Fold the rotation accumulators back into the diagonal once per sweep
    // to limit round-off drift.
    for (std::size_t i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }
  throw ConvergenceError("eigenvalue iteration did not converge in " +
                         std::to_string(opt.max_sweeps) + " sweeps");
}

}  // namespace commute
