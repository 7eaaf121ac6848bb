#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

namespace wcontact {

using Vec2 = Eigen::Vector2d;
using Vec = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Invalid problem, mesh or scenario input.
struct ConfigError : Error {
  using Error::Error;
};
/// Linear-algebra failure: indefinite matrix, tolerance not met, ...
struct SolveError : Error {
  using Error::Error;
};

[[gnu::format(printf, 1, 2)]] inline std::string strfmt(const char* fmt, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return std::string(buf);
}

inline void require_symmetric(const SpMat& a, double rel_tol = 1e-12) {
  if (a.rows() != a.cols())
    throw SolveError(strfmt("matrix is %ld x %ld, not square", long(a.rows()), long(a.cols())));
  SpMat diff = SpMat(a.transpose()) - a;
  double max_diff = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMat::InnerIterator it(diff, k); it; ++it)
      max_diff = std::max(max_diff, std::abs(it.value()));
  double scale = 0.0;
  for (int k = 0; k < a.outerSize(); ++k)
    for (SpMat::InnerIterator it(a, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
  if (max_diff > rel_tol * std::max(scale, 1e-300))
    throw SolveError(strfmt("matrix is not symmetric: max |A-A'| = %g vs scale %g",
                            max_diff, scale));
}

namespace detail {

inline double simpson(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Signed ∫_a^b f by adaptive Simpson; rel_tol is relative to a first whole-interval estimate.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = detail::simpson(b - a, fa, fm, fb);
  const double tol = rel_tol * std::max(std::abs(whole), 1e-300);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace wcontact
