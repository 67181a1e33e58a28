#pragma once

#include "minherm/adequacy.hpp"
#include "minherm/core.hpp"
#include "minherm/moment.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minherm {

enum class Appendix { A3, B4, C5 };

/// Hard-coded support example: the column system, the generating vector w,
/// the reference certificate coefficients (as doubles and as exact rational
/// strings), and the validated isometry pair.
struct Fixture {
  std::string name;
  int n = 0;
  int dim_v = 0;
  CMatrix columns;   // n x n system of vectors spanning V
  CVector w;         // unit vector spanning W
  RVector expected_x;
  std::vector<std::pair<std::string, std::string>> expected_x_rational;
  OrthoPair pair;
};

Fixture appendix_fixture(Appendix which);

/// Hermitian matrix Z = lambda (P_V - P_W) + R together with the data needed
/// to check its structure: R must annihilate V and W and satisfy
/// ||R|| <= lambda in operator norm.
struct MinimalMatrixSpec {
  OrthoPair pair;
  double lambda = 1.0;
  CMatrix R;
};

/// Evidence that (V, W) is a support: a valid certificate, or an adequacy
/// estimate below the support threshold.
struct SupportEvidence {
  std::optional<SupportCertificate> certificate;
  std::optional<double> adequacy;
};

/// Assembles Z = lambda (P_V - P_W) + R after checking the structural
/// invariants and the support evidence. Throws NotASupport when the evidence
/// is missing or fails; minimality of the result then follows from the
/// support property, and can be probed with random diagonals.
CMatrix build_minimal(const MinimalMatrixSpec& spec, const SupportEvidence& evidence,
                      double support_tol = kSupportTol);

double spectral_norm(const CMatrix& M);

/// Block-diagonal support in dimension n = 3h + 4k + 5l built from copies of
/// the three fixture blocks; dim V = 2h + 2k + 3l, dim W = 1. The returned
/// certificate is for the composed square system, whose determinant is the
/// product of the block determinants.
struct ComposedSupport {
  OrthoPair pair;
  CMatrix columns;
  CVector w;
  SupportCertificate certificate;
};

ComposedSupport block_compose(int h, int k, int l);

/// Perturbation campaign around a certified square system: each trial applies
/// a global unitary Q = exp(eps H), H random anti-hermitian of unit Frobenius
/// norm, and recomputes the certificate. Q preserves orthogonality and
/// dimensions exactly, so every perturbed pair stays in the same flag.
struct CampaignStats {
  int trials = 0;
  int valid = 0;
  double min_abs_det = 0.0;
  double min_x = 0.0;
  double max_residual = 0.0;
};

CampaignStats interior_campaign(const CMatrix& columns, const CVector& w,
                                double epsilon, int trials, std::uint64_t seed,
                                int threads = 1);

/// Curve sweep: x_j = j dx, U_j = exp(i x_j A), delta estimated for the pair
/// (U_j V, U_j W) by descent, warm-started from the previous minimizer.
struct SweepSpec {
  OrthoPair pair;
  CMatrix generator;  // hermitian
  double dx = 0.01;
  int steps = 1;
};

struct SweepSample {
  double x = 0.0;
  double delta = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
};

std::vector<SweepSample> sweep_curve(const SweepSpec& spec,
                                     const DescentConfig& descent_cfg = {},
                                     bool warm_start = true);

}  // namespace minherm
