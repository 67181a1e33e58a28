#include "minherm/constructions.hpp"

#include "minherm/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <atomic>
#include <cmath>
#include <thread>

namespace minherm {

namespace {

using std::sqrt;

Complex cx(double re, double im) { return {re, im}; }

// Parses a decimal integer string into long double; the fixture rationals
// exceed 64-bit integers but a ratio carried in long double stays well
// below the 1e-12 comparison tolerance.
long double parse_decimal(const std::string& digits) {
  long double v = 0.0L;
  for (char c : digits) v = v * 10.0L + (c - '0');
  return v;
}

RVector rationals_to_doubles(
    const std::vector<std::pair<std::string, std::string>>& fractions) {
  RVector out(static_cast<Eigen::Index>(fractions.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out(i) = static_cast<double>(parse_decimal(fractions[i].first) /
                                 parse_decimal(fractions[i].second));
  return out;
}

// Orthonormal basis of the column space, by SVD rank truncation.
CMatrix column_space_basis(const CMatrix& columns, int rank) {
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

Fixture finish_fixture(Fixture f) {
  f.expected_x = rationals_to_doubles(f.expected_x_rational);
  f.pair = validate_pair(column_space_basis(f.columns, f.dim_v),
                         f.w / f.w.norm());
  return f;
}

Fixture fixture_a3() {
  Fixture f;
  f.name = "a3";
  f.n = 3;
  f.dim_v = 2;

  const double d1 = sqrt(157449642458577.0);
  const double d2 = sqrt(175782050184862.0);
  CMatrix cols(3, 3);
  cols.col(0) << cx(1886514, -7511450) / d1, 0.0, -cx(4236005, -8917684) / d1;
  cols.col(1) << -cx(6034458, 5957865) / d2, cx(10006368, 1934893) / d2, 0.0;
  cols.col(2) << -cx(30683, 33081) / (28.0 * sqrt(4664715.0)),
      cx(1537.0 / 4, 479.0 / 4) * sqrt(3.0 / 1554905.0),
      cx(61.0 / 7, 157.0 / 14) * sqrt(55.0 / 84813.0);
  f.columns = cols;

  f.w = CVector(3);
  f.w << cx(5, -1) / (2.0 * sqrt(15.0)), cx(0.5, -0.5) * sqrt(3.0 / 5.0),
      2.0 / sqrt(15.0);

  f.expected_x_rational = {{"115667", "303810"},
                           {"85199", "222794"},
                           {"395794", "1670955"}};
  return finish_fixture(std::move(f));
}

Fixture fixture_b4() {
  Fixture f;
  f.name = "b4";
  f.n = 4;
  f.dim_v = 2;

  const double e1 = sqrt(212114.0), e2 = sqrt(1918749.0), e3 = sqrt(29729.0),
               e4 = sqrt(1909509.0);
  const double q = sqrt(2.0 / 106057.0);
  CMatrix cols(4, 4);
  cols.col(0) << -cx(698.0 / 3, 75) / e1, cx(1036.0 / 3, 51) / e1,
      cx(77.0 / 3, -218.0 / 3) * q, cx(-113.0 / 3, 49.0 / 3) * q;
  cols.col(1) << -cx(530, -655.0 / 2) / e2, cx(760, -173.0 / 2) / e2,
      cx(219.0 / 2, -782) / e2, cx(263.0 / 2, 552) / e2;
  cols.col(2) << -cx(75, 45.0 / 4) / e3, cx(54, -365.0 / 4) / e3,
      -cx(18, -243.0 / 4) / e3, -cx(169.0 / 2, 159.0 / 4) / e3;
  cols.col(3) << -cx(1345.0 / 2, 283) / e4, cx(563.0 / 2, 239) / e4,
      cx(738, 263.0 / 2) / e4, -cx(782, -519.0 / 2) / e4;
  f.columns = cols;

  const double rt2 = sqrt(2.0);
  f.w = CVector(4);
  f.w << cx(0.5, -0.5) / rt2, cx(0.5, -0.5) / rt2, cx(0.5, 0.5) / rt2,
      cx(0.5, 0.5) / rt2;

  f.expected_x_rational = {{"20559837596768881", "124590980225106843"},
                           {"96813856451303497", "415303267417022810"},
                           {"1154873210442508", "8612279739062685"},
                           {"49954131355895969", "106792268764377294"}};
  return finish_fixture(std::move(f));
}

Fixture fixture_c5() {
  Fixture f;
  f.name = "c5";
  f.n = 5;
  f.dim_v = 3;

  // V is spanned by the rows of M_V; the five system vectors are the rows of
  // C * M_V, each normalized to unit length.
  CMatrix MV(3, 5);
  MV.row(0) << cx(-19.0 / 50, -1.0 / 50), cx(-2.0 / 25, 19.0 / 50),
      cx(-7.0 / 25, 3.0 / 25), cx(8.0 / 25, 3.0 / 25), cx(8.0 / 25, 11.0 / 50);
  MV.row(1) << cx(-1.0 / 5, 11.0 / 50), cx(1.0 / 10, 3.0 / 25),
      cx(19.0 / 50, -1.0 / 5), cx(19.0 / 50, 3.0 / 10), cx(-21.0 / 50, 0);
  MV.row(2) << cx(29.0 / 50, 0), cx(-1.0 / 50, 3.0 / 10),
      cx(-1.0 / 10, -8.0 / 25), cx(1.0 / 5, 9.0 / 50), cx(1.0 / 5, -21.0 / 50);

  CMatrix C(5, 3);
  C.row(0) << cx(-16.0 / 5, 53.0 / 10), cx(-4.0 / 5, -5.0 / 2),
      cx(8.0 / 5, 29.0 / 10);
  C.row(1) << cx(1, 0.5), cx(-3.0 / 5, 0), cx(2.0 / 5, 13.0 / 10);
  C.row(2) << cx(0, -13.0 / 5), cx(-11.0 / 5, 29.0 / 10), cx(4.0 / 5, 1);
  C.row(3) << cx(1, 3.0 / 5), cx(3.0 / 5, 7.0 / 5), cx(0.5, 7.0 / 10);
  C.row(4) << cx(13.0 / 10, 3.0 / 2), cx(-2.0 / 5, 9.0 / 5),
      cx(-14.0 / 5, -3.0 / 10);

  const CMatrix P = C * MV;  // rows are the raw system vectors
  CMatrix cols(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    const CVector v = P.row(i).transpose();
    cols.col(i) = v / v.norm();
  }
  f.columns = cols;

  const double rt10 = sqrt(10.0);
  f.w = CVector(5);
  f.w << cx(1, -1) / rt10, cx(1, -1) / rt10, cx(1, 1) / rt10, cx(1, 1) / rt10,
      cx(1, 1) / rt10;

  f.expected_x_rational = {
      {"38245034600180718292066117", "93505493283505350729949090"},
      {"876893808432404350620802", "9350549328350535072994909"},
      {"11840789324853298629489761", "93505493283505350729949090"},
      {"11483749488079211997737796", "46752746641752675364974545"},
      {"1168323229798886630670960", "9350549328350535072994909"}};
  return finish_fixture(std::move(f));
}

}  // namespace

Fixture appendix_fixture(Appendix which) {
  switch (which) {
    case Appendix::A3:
      return fixture_a3();
    case Appendix::B4:
      return fixture_b4();
    case Appendix::C5:
      return fixture_c5();
  }
  throw Error("appendix_fixture: unknown fixture");
}

double spectral_norm(const CMatrix& M) {
  if (max_abs(M - M.adjoint()) < 1e-12) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(M), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues()(0);
}

CMatrix build_minimal(const MinimalMatrixSpec& spec,
                      const SupportEvidence& evidence, double support_tol) {
  const Eigen::Index n = spec.pair.n();
  if (spec.lambda <= 0)
    throw Error("build_minimal: lambda must be positive");
  if (spec.R.rows() != n || spec.R.cols() != n)
    throw DimensionMismatch("build_minimal: R has wrong shape");
  if (max_abs(spec.R - spec.R.adjoint()) > 1e-10)
    throw Error("build_minimal: R is not hermitian");

  const CMatrix PV = spec.pair.projector_v();
  const CMatrix PW = spec.pair.projector_w();
  const double annihilation =
      std::max({max_abs(spec.R * PV), max_abs(PV * spec.R),
                max_abs(spec.R * PW), max_abs(PW * spec.R)});
  if (annihilation > 1e-10)
    throw Error("build_minimal: R does not annihilate V and W");
  if (spectral_norm(spec.R) > spec.lambda + 1e-10)
    throw Error("build_minimal: ||R|| exceeds lambda");

  const bool certified =
      (evidence.certificate && evidence.certificate->valid) ||
      (evidence.adequacy && *evidence.adequacy < support_tol);
  if (!certified)
    throw NotASupport("build_minimal: the pair is not certified as a support");

  return hermitize(spec.lambda * (PV - PW) + spec.R);
}

ComposedSupport block_compose(int h, int k, int l) {
  if (h < 0 || k < 0 || l < 0 || h + k + l < 1)
    throw EmptyComposition("block_compose: need at least one block");

  struct Block {
    const Fixture fixture;
    int copies;
  };
  const std::vector<Block> blocks = {{appendix_fixture(Appendix::A3), h},
                                     {appendix_fixture(Appendix::B4), k},
                                     {appendix_fixture(Appendix::C5), l}};

  int n = 0, dim_v = 0, total_copies = 0;
  for (const auto& blk : blocks) {
    n += blk.copies * blk.fixture.n;
    dim_v += blk.copies * blk.fixture.dim_v;
    total_copies += blk.copies;
  }

  ComposedSupport out;
  out.columns = CMatrix::Zero(n, n);
  out.w = CVector::Zero(n);
  CMatrix vmap = CMatrix::Zero(n, dim_v);

  int row = 0, col_v = 0;
  for (const auto& blk : blocks) {
    for (int c = 0; c < blk.copies; ++c) {
      const int bn = blk.fixture.n;
      out.columns.block(row, row, bn, bn) = blk.fixture.columns;
      out.w.segment(row, bn) = blk.fixture.w;
      vmap.block(row, col_v, bn, blk.fixture.dim_v) = blk.fixture.pair.V;
      row += bn;
      col_v += blk.fixture.dim_v;
    }
  }
  out.w /= std::sqrt(static_cast<double>(total_copies));

  out.pair = validate_pair(vmap, out.w);
  out.certificate = support_certificate(out.columns, out.w);
  return out;
}

CampaignStats interior_campaign(const CMatrix& columns, const CVector& w,
                                double epsilon, int trials, std::uint64_t seed,
                                int threads) {
  if (epsilon < 0 || trials < 1)
    throw Error("interior_campaign: need epsilon >= 0 and trials >= 1");
  const SupportCertificate base = support_certificate(columns, w);
  if (!base.valid)
    throw NotASupport(
        "interior_campaign: the system carries no valid square certificate");

  const Eigen::Index n = columns.rows();
  CampaignStats stats;
  stats.trials = trials;
  std::vector<SupportCertificate> certs(trials);

  auto work = [&](int trial) {
    Rng rng(seed, static_cast<std::uint64_t>(trial));
    const CMatrix H = rng.anti_hermitian_unit(n);
    // H = i K with K hermitian, so exp(eps H) = exp(i eps K) is unitary.
    const CMatrix Q = unitary_exp(Complex(0, -1) * H, epsilon);
    certs[trial] = support_certificate(Q * columns, Q * w);
  };

  int nthreads = threads == 0
                     ? static_cast<int>(std::thread::hardware_concurrency())
                     : threads;
  nthreads = std::max(1, std::min(nthreads, trials));
  if (nthreads == 1) {
    for (int t = 0; t < trials; ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> counter{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        for (int i = counter.fetch_add(1); i < trials; i = counter.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  stats.min_abs_det = certs[0].det_abs;
  stats.min_x = certs[0].solution.minCoeff();
  for (const auto& cert : certs) {
    if (cert.valid) ++stats.valid;
    stats.min_abs_det = std::min(stats.min_abs_det, cert.det_abs);
    stats.min_x = std::min(stats.min_x, cert.solution.minCoeff());
    stats.max_residual = std::max(stats.max_residual, cert.residual);
  }
  return stats;
}

std::vector<SweepSample> sweep_curve(const SweepSpec& spec,
                                     const DescentConfig& descent_cfg,
                                     bool warm_start) {
  if (spec.steps < 1 || spec.dx <= 0)
    throw Error("sweep_curve: need steps >= 1 and dx > 0");
  if (max_abs(spec.generator - spec.generator.adjoint()) > 1e-10)
    throw Error("sweep_curve: generator must be hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(spec.generator));
  const CMatrix& U0 = es.eigenvectors();
  const RVector& ev = es.eigenvalues();

  std::vector<SweepSample> samples;
  samples.reserve(spec.steps);
  SpherePoint previous;
  bool have_previous = false;
  for (int j = 1; j <= spec.steps; ++j) {
    const double x = j * spec.dx;
    const CVector phases = (Complex(0, x) * ev.cast<Complex>().array()).exp();
    const CMatrix U = U0 * phases.asDiagonal() * U0.adjoint();
    const OrthoPair moved = validate_pair(U * spec.pair.V, U * spec.pair.W);
    const AdequacyResult res =
        descend(moved, descent_cfg,
                (warm_start && have_previous) ? &previous : nullptr);
    samples.push_back({x, res.delta, res.grad_norm, res.converged});
    if (warm_start) {
      previous = res.minimizer;
      have_previous = true;
    }
  }
  return samples;
}

}  // namespace minherm
