#pragma once

#include "minherm/core.hpp"

namespace minherm {

/// Pair of trace-one PSD states supported in V resp. W, stored compactly:
/// the full matrices are V c_hat V* and W d_hat W*.
struct DensityPoint {
  CMatrix c_hat;  // r x r, PSD, trace 1
  CMatrix d_hat;  // s x s, PSD, trace 1
};

CMatrix density_full_c(const OrthoPair& pair, const DensityPoint& p);
CMatrix density_full_d(const OrthoPair& pair, const DensityPoint& p);

struct FwOptions {
  int max_iters = 50000;
  double gap_tol = 1e-9;
  bool line_search = true;  // exact minimization on each segment; else 2/(k+2)
};

struct FwResult {
  double delta = 0.0;   // squared distance of the two moment bodies
  DensityPoint point;
  double fw_gap = 0.0;  // final duality gap, an upper bound on delta - min
  int iterations = 0;
  bool converged = false;
};

/// Independent computation of the adequacy as the squared distance between
/// the diagonal images of the two state bodies, by Frank-Wolfe. The linear
/// minimization oracle over each body is an extreme eigenvector of the
/// compressed diagonal gradient, which is exactly the extremal structure of
/// the bodies (rank-one projectors onto unit vectors of V resp. W).
FwResult fw_distance(const OrthoPair& pair, const FwOptions& opts = {});

struct MembershipResult {
  bool inside = false;
  double objective = 0.0;  // final squared distance to the target
  double gap = 0.0;
  CMatrix witness_c_hat;   // compact witness, c = V c_hat V*
  int iterations = 0;
  bool converged = false;
};

/// Decides whether target (a nonnegative vector summing to one) lies in the
/// diagonal image of the V-state body, within tol: minimizes the squared
/// distance with the same Frank-Wolfe oracle and certifies via the final
/// objective against tol^2.
MembershipResult moment_body_membership(const OrthoPair& pair,
                                        const RVector& target, double tol,
                                        const FwOptions& opts = {});

}  // namespace minherm
