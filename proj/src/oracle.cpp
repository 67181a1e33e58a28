#include "minherm/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace minherm {

CMatrix density_full_c(const OrthoPair& pair, const DensityPoint& p) {
  return pair.V * p.c_hat * pair.V.adjoint();
}

CMatrix density_full_d(const OrthoPair& pair, const DensityPoint& p) {
  return pair.W * p.d_hat * pair.W.adjoint();
}

namespace {

// Rank-one projector onto the eigenvector of the smallest (or largest)
// eigenvalue of a hermitian matrix.
CMatrix extreme_projector(const CMatrix& G, bool smallest) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(G);
  const Eigen::Index idx = smallest ? 0 : G.rows() - 1;
  const CVector u = es.eigenvectors().col(idx);
  return u * u.adjoint();
}

double segment_step(const RVector& D, const RVector& D_target, int iter,
                    bool line_search) {
  if (!line_search) return 2.0 / (iter + 2.0);
  const RVector dir = D_target - D;
  const double den = dir.squaredNorm();
  if (den <= 0.0) return 0.0;
  return std::clamp(-D.dot(dir) / den, 0.0, 1.0);
}

}  // namespace

FwResult fw_distance(const OrthoPair& pair, const FwOptions& opts) {
  const Eigen::Index r = pair.r(), s = pair.s();
  FwResult out;
  out.point.c_hat = CMatrix::Identity(r, r) / static_cast<double>(r);
  out.point.d_hat = CMatrix::Identity(s, s) / static_cast<double>(s);

  RVector D = diag_conj(pair.V, out.point.c_hat) -
              diag_conj(pair.W, out.point.d_hat);
  for (int k = 0; k < opts.max_iters; ++k) {
    // gradient in the compact parameters is (2 V* diag(D) V, -2 W* diag(D) W)
    const CMatrix GV = hermitize(pair.V.adjoint() * D.asDiagonal() * pair.V);
    const CMatrix GW = hermitize(pair.W.adjoint() * D.asDiagonal() * pair.W);
    const CMatrix S = extreme_projector(GV, /*smallest=*/true);
    const CMatrix T = extreme_projector(GW, /*smallest=*/false);
    const RVector Ds = diag_conj(pair.V, S) - diag_conj(pair.W, T);

    out.fw_gap = 2.0 * D.dot(D - Ds);
    out.iterations = k;
    if (out.fw_gap < opts.gap_tol) {
      out.converged = true;
      break;
    }
    const double gamma = segment_step(D, Ds, k, opts.line_search);
    if (gamma == 0.0) break;  // no progress along the segment
    out.point.c_hat += gamma * (S - out.point.c_hat);
    out.point.d_hat += gamma * (T - out.point.d_hat);
    D += gamma * (Ds - D);
  }
  out.point.c_hat = hermitize(out.point.c_hat);
  out.point.d_hat = hermitize(out.point.d_hat);
  D = diag_conj(pair.V, out.point.c_hat) - diag_conj(pair.W, out.point.d_hat);
  out.delta = D.squaredNorm();
  return out;
}

MembershipResult moment_body_membership(const OrthoPair& pair,
                                        const RVector& target, double tol,
                                        const FwOptions& opts) {
  if (target.size() != pair.n())
    throw DimensionMismatch("moment_body_membership: target has wrong length");
  if (target.minCoeff() < -kMomentTol || std::abs(target.sum() - 1.0) > 1e-9)
    throw Error("moment_body_membership: target must be nonnegative and sum to 1");

  const Eigen::Index r = pair.r();
  MembershipResult out;
  out.witness_c_hat = CMatrix::Identity(r, r) / static_cast<double>(r);

  // The gap bounds objective - minimum, so driving it an order of magnitude
  // below tol^2 makes the membership decision trustworthy at tolerance tol.
  const double gap_tol = std::min(opts.gap_tol, 0.1 * tol * tol);

  RVector D = diag_conj(pair.V, out.witness_c_hat) - target;
  for (int k = 0; k < opts.max_iters; ++k) {
    const CMatrix GV = hermitize(pair.V.adjoint() * D.asDiagonal() * pair.V);
    const CMatrix S = extreme_projector(GV, /*smallest=*/true);
    const RVector Ds = diag_conj(pair.V, S) - target;

    out.gap = 2.0 * D.dot(D - Ds);
    out.iterations = k;
    if (out.gap < gap_tol) {
      out.converged = true;
      break;
    }
    const double gamma = segment_step(D, Ds, k, opts.line_search);
    if (gamma == 0.0) break;
    out.witness_c_hat += gamma * (S - out.witness_c_hat);
    D += gamma * (Ds - D);
  }
  out.witness_c_hat = hermitize(out.witness_c_hat);
  out.objective = (diag_conj(pair.V, out.witness_c_hat) - target).squaredNorm();
  out.inside = out.objective <= tol * tol;
  return out;
}

}  // namespace minherm
