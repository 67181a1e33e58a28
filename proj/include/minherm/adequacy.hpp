#pragma once

#include "minherm/core.hpp"

#include <cstdint>

namespace minherm {

/// Point on the product of Frobenius unit spheres of hermitian matrices:
/// a is r x r, b is s x s, a = a*, b = b*, tr(a^2) = tr(b^2) = 1.
struct SpherePoint {
  CMatrix a;
  CMatrix b;
};

/// Validates hermiticity and unit Frobenius norm.
SpherePoint make_sphere_point(const CMatrix& a, const CMatrix& b,
                              double hermitian_tol = kHermitianTol,
                              double sphere_tol = kSphereTol);

struct DescentConfig {
  int max_iters = 5000;
  double step = 1.0;        // raw update of the reference iteration
  double grad_tol = 1e-11;  // on the Riemannian gradient norm
  int restarts = 16;
  std::uint64_t seed = 0;
  bool line_search = false;  // halve step while F increases (max 30 halvings)
  int threads = 1;           // restarts run in parallel; 0 = hardware count
};

struct AdequacyResult {
  double delta = 0.0;       // F at the returned minimizer
  SpherePoint minimizer;    // a >= 0, b >= 0 by construction of the iteration
  double grad_norm = 0.0;
  double lambda = 0.0;      // multiplier <S_a(V* D V), a> at the minimizer
  double mu = 0.0;          // multiplier <S_b(W* D W), b>
  int iterations = 0;
  int restart_index = 0;
  bool converged = false;   // grad_norm < grad_tol
};

/// Diagonal of V a^2 V* minus diagonal of W b^2 W*. Entries sum to
/// tr(a^2) - tr(b^2), i.e. to zero on the sphere.
RVector delta_diag(const OrthoPair& pair, const SpherePoint& p);

/// Squared distance between the two moment diagonals. The adequacy of the
/// pair is the minimum of this function over the product sphere.
double F(const OrthoPair& pair, const SpherePoint& p);

/// Riemannian gradient of F at p: 2 (S_a(V* D V)_tan, -S_b(W* D W)_tan)
/// with S_a(X) = aX + Xa and X_tan = X - <X,a> a. Both components are
/// hermitian and trace-orthogonal to a resp. b.
void gradient(const OrthoPair& pair, const SpherePoint& p, CMatrix& grad_a,
              CMatrix& grad_b);

/// Multipliers and critical-point residuals:
/// lambda = <S_a(V* D V), a>, res_a = ||S_a(V* D V) - lambda a||_F, and the
/// same on the W side. Both residuals vanish exactly at critical points.
struct CriticalResidual {
  double lambda = 0.0;
  double mu = 0.0;
  double res_a = 0.0;
  double res_b = 0.0;
};
CriticalResidual critical_residual(const OrthoPair& pair, const SpherePoint& p);

/// Hessian quadratic form of F at a (numerically) critical point p applied to
/// the tangent pair (X, Y). Throws NotCritical when the residuals at p exceed
/// crit_tol.
double hessian_quadratic(const OrthoPair& pair, const SpherePoint& p,
                         const CMatrix& X, const CMatrix& Y,
                         double crit_tol = 1e-6);

/// Smooth projective retraction used by the finite-difference oracles:
/// (a + X, b + Y) normalized back to the product sphere.
SpherePoint retract_tangent(const SpherePoint& p, const CMatrix& X, const CMatrix& Y);

/// One modulus-then-normalize retraction step of the descent iteration:
/// |m| / || |m| ||_F via eigendecomposition.
CMatrix abs_normalize(const CMatrix& m);

/// Multi-start gradient descent for the adequacy. Each restart iterates
/// (alpha, beta) = (a,b) - step * grad F followed by the modulus/normalize
/// retraction, from a random positive definite start on the sphere, and the
/// best F over restarts wins (ties broken by restart index). A warm start, if
/// given, runs as one extra deterministic restart with index -1.
AdequacyResult descend(const OrthoPair& pair, const DescentConfig& cfg = {},
                       const SpherePoint* warm_start = nullptr);

}  // namespace minherm
