#include "minherm/rank_one.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace minherm {

RankOneCritical lift_rank_one(const OrthoPair& pair, const CVector& a_tilde,
                              const CVector& b_tilde) {
  if (a_tilde.size() != pair.r() || b_tilde.size() != pair.s())
    throw DimensionMismatch("lift_rank_one: vector sizes do not match the pair");

  RankOneCritical c;
  c.a_tilde = a_tilde / a_tilde.norm();
  c.b_tilde = b_tilde / b_tilde.norm();
  c.alpha = pair.V * c.a_tilde;
  c.beta = pair.W * c.b_tilde;

  const Eigen::Index n = pair.n();
  c.s = c.alpha.cwiseAbs();
  c.t = c.beta.cwiseAbs();
  c.phi = CVector::Ones(n);
  c.psi = CVector::Ones(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (c.s(k) > 0) c.phi(k) = std::conj(c.alpha(k)) / c.s(k);
    if (c.t(k) > 0) c.psi(k) = std::conj(c.beta(k)) / c.t(k);
  }

  const RVector s2 = c.s.cwiseAbs2();
  const RVector t2 = c.t.cwiseAbs2();
  const RVector diff = s2 - t2;
  c.lambda = 2.0 * diff.dot(s2);
  c.mu = 2.0 * diff.dot(t2);

  c.sigma = RVector(n);
  c.tau = RVector(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    c.sigma(k) = c.s(k) * (s2(k) - (0.5 * c.lambda + t2(k)));
    c.tau(k) = -(c.t(k) * (t2(k) + (0.5 * c.mu - s2(k))));
  }
  return c;
}

double CharacterizationReport::max_ii() const {
  return std::max(res_ii_v, res_ii_w);
}

double CharacterizationReport::max_iii() const {
  double m = 0.0;
  for (double v : {res_sum_s, res_sum_t, res_phase_phi, res_phase_psi,
                   res_unit_a, res_unit_b, res_annihilation_v,
                   res_annihilation_w, res_cubic_s, res_cubic_t})
    m = std::max(m, v);
  return m;
}

CharacterizationReport verify_characterization(const OrthoPair& pair,
                                               const RankOneCritical& c,
                                               double tol) {
  CharacterizationReport rep;
  rep.tol = tol;
  const Eigen::Index n = pair.n();

  // route ii: the two complex vector equations in the alpha/beta coordinates
  CVector xi(n), eta(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double da = std::norm(c.alpha(k)) - std::norm(c.beta(k));
    xi(k) = (da - 0.5 * c.lambda) * c.alpha(k);
    eta(k) = (da - 0.5 * c.mu) * c.beta(k);
  }
  rep.res_ii_v = (pair.V.adjoint() * xi).norm();
  rep.res_ii_w = (pair.W.adjoint() * eta).norm();

  // route iii: normalization and unimodularity ...
  rep.res_sum_s = std::abs(c.s.squaredNorm() - 1.0);
  rep.res_sum_t = std::abs(c.t.squaredNorm() - 1.0);
  rep.res_phase_phi = (c.phi.cwiseAbs() - RVector::Ones(n)).cwiseAbs().maxCoeff();
  rep.res_phase_psi = (c.psi.cwiseAbs() - RVector::Ones(n)).cwiseAbs().maxCoeff();

  // ... the reconstructed vectors must be unit ...
  const CVector rec_a = pair.V.adjoint() * (c.phi.conjugate().cwiseProduct(c.s.cast<Complex>()));
  const CVector rec_b = pair.W.adjoint() * (c.psi.conjugate().cwiseProduct(c.t.cast<Complex>()));
  rep.res_unit_a = std::abs(rec_a.norm() - 1.0);
  rep.res_unit_b = std::abs(rec_b.norm() - 1.0);

  // ... the annihilation sums ...
  const CVector ann_v = pair.V.adjoint() * (c.phi.conjugate().cwiseProduct(c.sigma.cast<Complex>()));
  const CVector ann_w = pair.W.adjoint() * (c.psi.conjugate().cwiseProduct(c.tau.cast<Complex>()));
  rep.res_annihilation_v = ann_v.norm();
  rep.res_annihilation_w = ann_w.norm();

  // ... and the coupled cubic systems in s, t, sigma, tau.
  const RVector s2 = c.s.cwiseAbs2();
  const RVector t2 = c.t.cwiseAbs2();
  const double half_lambda = (s2 - t2).dot(s2);
  const double half_mu = (s2 - t2).dot(t2);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double rs =
        c.s(k) * s2(k) - (half_lambda + t2(k)) * c.s(k) - c.sigma(k);
    const double rt = c.t(k) * t2(k) + (half_mu - s2(k)) * c.t(k) + c.tau(k);
    rep.res_cubic_s = std::max(rep.res_cubic_s, std::abs(rs));
    rep.res_cubic_t = std::max(rep.res_cubic_t, std::abs(rt));
  }

  rep.ii_pass = rep.max_ii() < tol;
  rep.iii_pass = rep.max_iii() < tol;
  rep.equivalent = (rep.ii_pass == rep.iii_pass) ||
                   (rep.max_ii() < tol * 10 && rep.max_iii() < tol * 10);
  return rep;
}

double rank_one_defect(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  RVector ev = es.eigenvalues().cwiseAbs();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  return ev.size() > 1 ? ev(1) : 0.0;
}

CVector dominant_eigenvector(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  return es.eigenvectors().col(a.rows() - 1);
}

}  // namespace minherm
