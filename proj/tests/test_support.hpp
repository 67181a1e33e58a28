#pragma once

#include "minherm/adequacy.hpp"
#include "minherm/core.hpp"
#include "minherm/rng.hpp"

// Shared helpers for the test suites.

namespace minherm::testing {

inline CVector e_k(Eigen::Index n, Eigen::Index k) {
  CVector v = CVector::Zero(n);
  v(k) = 1.0;
  return v;
}

/// One-dimensional pair spanned by unit vectors u and w.
inline OrthoPair span_pair(const CVector& u, const CVector& w) {
  CMatrix V(u.size(), 1), W(w.size(), 1);
  V.col(0) = u / u.norm();
  W.col(0) = w / w.norm();
  return validate_pair(V, W);
}

/// Random sphere point with positive definite components (as the descent
/// starts produce).
inline SpherePoint random_sphere_point(Rng& rng, Eigen::Index r, Eigen::Index s) {
  return SpherePoint{rng.positive_definite_sphere(r),
                     rng.positive_definite_sphere(s)};
}

/// Random hermitian sphere point, not necessarily positive.
inline SpherePoint random_signed_sphere_point(Rng& rng, Eigen::Index r,
                                              Eigen::Index s) {
  CMatrix a = rng.hermitian(r);
  CMatrix b = rng.hermitian(s);
  return SpherePoint{a / a.norm(), b / b.norm()};
}

/// Central finite difference of F along the projective retraction, the
/// independent oracle for the Riemannian directional derivative.
inline double fd_directional(const OrthoPair& pair, const SpherePoint& p,
                             const CMatrix& X, const CMatrix& Y, double h) {
  const double fp = F(pair, retract_tangent(p, h * X, h * Y));
  const double fm = F(pair, retract_tangent(p, -h * X, -h * Y));
  return (fp - fm) / (2 * h);
}

/// Second central difference of F along the retraction; at critical points
/// this approximates the Hessian quadratic form.
inline double fd_second(const OrthoPair& pair, const SpherePoint& p,
                        const CMatrix& X, const CMatrix& Y, double h) {
  const double fp = F(pair, retract_tangent(p, h * X, h * Y));
  const double f0 = F(pair, p);
  const double fm = F(pair, retract_tangent(p, -h * X, -h * Y));
  return (fp - 2 * f0 + fm) / (h * h);
}

}  // namespace minherm::testing
