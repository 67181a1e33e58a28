#pragma once

#include "minherm/core.hpp"

namespace minherm {

/// Real/phase decomposition of a rank-one candidate critical point. With
/// a = <.,a~> a~ and b = <.,b~> b~, the coordinates are alpha = V a~ and
/// beta = W b~, split as alpha_k = conj(phi_k) s_k with s_k = |alpha_k| and
/// |phi_k| = 1 (phi_k = 1 where alpha_k = 0).
struct RankOneCritical {
  CVector a_tilde;  // unit vector in C^r
  CVector b_tilde;  // unit vector in C^s
  CVector alpha;    // n-vector, coordinates of V a~ in the standard basis
  CVector beta;
  RVector s;        // |alpha|
  RVector t;        // |beta|
  CVector phi;      // unimodular phases, s_k = phi_k alpha_k
  CVector psi;
  RVector sigma;    // s_k^3 - (lambda/2 + t_k^2) s_k
  RVector tau;      // -(t_k^3 + (mu/2 - s_k^2) t_k)
  double lambda = 0.0;  // 2 sum (s^2 - t^2) s^2
  double mu = 0.0;      // 2 sum (s^2 - t^2) t^2; lambda >= mu always
};

/// Lifts unit vectors (a~, b~) to the full coordinate system above.
RankOneCritical lift_rank_one(const OrthoPair& pair, const CVector& a_tilde,
                              const CVector& b_tilde);

/// Residuals of the two equivalent characterizations of rank-one critical
/// points: the complex vector equations (route ii) and the real/phase system
/// (route iii: normalization, unimodularity, annihilation sums, cubics).
struct CharacterizationReport {
  double res_ii_v = 0.0;   // || sum (|a_k|^2 - |b_k|^2 - lambda/2) alpha_k V* e_k ||
  double res_ii_w = 0.0;
  double res_sum_s = 0.0;  // |sum s^2 - 1|
  double res_sum_t = 0.0;
  double res_phase_phi = 0.0;  // max | |phi_k| - 1 |
  double res_phase_psi = 0.0;
  double res_unit_a = 0.0;     // | ||sum conj(phi) s V* e_k|| - 1 |
  double res_unit_b = 0.0;
  double res_annihilation_v = 0.0;  // || sum conj(phi) sigma V* e_k ||
  double res_annihilation_w = 0.0;
  double res_cubic_s = 0.0;  // max_k cubic system residual
  double res_cubic_t = 0.0;
  double tol = 0.0;
  bool ii_pass = false;
  bool iii_pass = false;
  bool equivalent = false;  // both pass or both fail, within tol * 10

  double max_ii() const;
  double max_iii() const;
};

CharacterizationReport verify_characterization(const OrthoPair& pair,
                                               const RankOneCritical& candidate,
                                               double tol);

/// Distance of a unit-Frobenius PSD matrix from rank one: its second largest
/// eigenvalue magnitude. Zero iff a = a~ a~* for a unit vector a~.
double rank_one_defect(const CMatrix& a);

/// Unit eigenvector of the largest eigenvalue.
CVector dominant_eigenvector(const CMatrix& a);

}  // namespace minherm
