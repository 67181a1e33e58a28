#include "minherm/moment.hpp"
#include "minherm/constructions.hpp"
#include "minherm/rng.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>

using namespace minherm;
using namespace minherm::testing;

TEST_CASE("orthogonalize_same_moment keeps an already orthogonal system") {
  Rng rng(3);
  CMatrix v = rng.orthonormal_columns(5, 3);
  v.col(0) *= 3.0;
  v.col(1) *= 2.0;  // distinct norms so the SVD order is fixed
  const CMatrix out = orthogonalize_same_moment(v);
  REQUIRE(out.cols() == 3);
  // equality up to per-column unit phase
  for (int j = 0; j < 3; ++j) {
    const Complex ip = (v.col(j).adjoint() * out.col(j))(0);
    CHECK(std::abs(std::abs(ip) - v.col(j).squaredNorm()) < 1e-10);
  }
  CHECK((hadamard_square(out) - hadamard_square(v)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orthogonalize_same_moment collapses repeated columns") {
  Rng rng(4);
  CVector c = rng.unit_vector(4) * 1.7;
  CMatrix v(4, 2);
  v.col(0) = c;
  v.col(1) = c;
  const CMatrix out = orthogonalize_same_moment(v);
  REQUIRE(out.cols() == 1);
  CHECK(std::abs(out.col(0).norm() - std::sqrt(2.0) * c.norm()) < 1e-12);
  CHECK((hadamard_square(out) - 2.0 * hadamard_square(c)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orthogonalize_same_moment rejects zero input") {
  CHECK_THROWS_AS(orthogonalize_same_moment(CMatrix::Zero(3, 2)), ZeroInput);
}

TEST_CASE("orthogonalize_same_moment truncates rank-deficient systems") {
  // four vectors spanning a plane collapse to two orthogonal ones with the
  // same moment
  const Fixture f = appendix_fixture(Appendix::B4);
  const CMatrix out = orthogonalize_same_moment(f.columns);
  REQUIRE(out.cols() == 2);
  CHECK((hadamard_square(out) - hadamard_square(f.columns)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs((out.col(0).adjoint() * out.col(1))(0)) < 1e-12);
  // output lies in the same subspace
  const CMatrix PV = f.pair.projector_v();
  CHECK(max_abs(PV * out - out) < 1e-12);
}

TEST_CASE("moment and span preservation on random systems") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index n = 3 + trial % 4;
    const Eigen::Index p = 1 + trial % 3;
    const CMatrix v = rng.complex_gaussian_matrix(n, p);
    const CMatrix out = orthogonalize_same_moment(v);

    CHECK((hadamard_square(out) - hadamard_square(v)).cwiseAbs().maxCoeff() < 1e-10);

    // span preservation: orthogonal projectors onto the input and output
    // column spaces agree in operator norm
    auto projector = [](const CMatrix& m) {
      Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
      Eigen::Index rank = 0;
      const RVector& sv = svd.singularValues();
      while (rank < sv.size() && sv(rank) > 1e-11 * sv(0)) ++rank;
      const CMatrix U = svd.matrixU().leftCols(rank);
      return CMatrix(U * U.adjoint());
    };
    CHECK(spectral_norm(projector(out) - projector(v)) < 1e-10);
    // columns are mutually orthogonal
    const CMatrix gram = out.adjoint() * out;
    CHECK(max_abs(gram - CMatrix(gram.diagonal().asDiagonal())) < 1e-10);
  }
}

TEST_CASE("support certificate matches the reference appendix A coefficients") {
  const Fixture f = appendix_fixture(Appendix::A3);
  const SupportCertificate cert = support_certificate(f.columns, f.w);
  CHECK(cert.valid);
  CHECK(cert.residual < 1e-12);
  CHECK(cert.det_abs > 1e-8);
  CHECK((cert.solution - f.expected_x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(cert.solution.sum() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("support certificate matches the reference appendix B coefficients") {
  const Fixture f = appendix_fixture(Appendix::B4);
  const SupportCertificate cert = support_certificate(f.columns, f.w);
  CHECK(cert.valid);
  CHECK(cert.residual < 1e-12);
  CHECK((cert.solution - f.expected_x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("standard basis obstruction yields an invalid certificate") {
  CMatrix cols(3, 3);
  cols.col(0) = e_k(3, 0);
  cols.col(1) = e_k(3, 1);
  cols.col(2) = e_k(3, 0);
  const SupportCertificate cert = support_certificate(cols, e_k(3, 2));
  CHECK_FALSE(cert.valid);
  CHECK(cert.det_abs < 1e-12);  // row 3 of the system is zero
}

TEST_CASE("certificate soundness: valid implies the support condition") {
  for (Appendix which : {Appendix::A3, Appendix::B4, Appendix::C5}) {
    const Fixture f = appendix_fixture(which);
    const SupportCertificate cert = support_certificate(f.columns, f.w);
    REQUIRE(cert.valid);
    // sum_i X_i (v^i o conj(v^i)) == w o conj(w)
    RVector lhs = RVector::Zero(f.n);
    for (int i = 0; i < f.n; ++i)
      lhs += cert.solution(i) * f.columns.col(i).cwiseAbs2();
    CHECK((lhs - f.w.cwiseAbs2()).cwiseAbs().maxCoeff() < kCertTol);
  }
}

TEST_CASE("normalize_witness uniform coefficients rescale an orthonormal system") {
  Rng rng(9);
  const CMatrix v = rng.orthonormal_columns(5, 4);
  const CMatrix out = normalize_witness(v, RVector::Ones(4));
  CHECK(max_abs(out - v / 2.0) < 1e-14);  // sqrt(n)=2 for 4 unit columns
}

TEST_CASE("normalize_witness reproduces the appendix A moment direction") {
  const Fixture f = appendix_fixture(Appendix::A3);
  const SupportCertificate cert = support_certificate(f.columns, f.w);
  const CMatrix out = normalize_witness(f.columns, cert.solution);
  // moment(out) = (sum X_i ||v^i||^2)^-1 sum X_i (v^i o conj(v^i)),
  // both sides recomputed independently
  double total = 0.0;
  RVector expected = RVector::Zero(f.n);
  for (int i = 0; i < f.n; ++i) {
    total += cert.solution(i) * f.columns.col(i).squaredNorm();
    expected += cert.solution(i) * f.columns.col(i).cwiseAbs2();
  }
  expected /= total;
  CHECK((hadamard_square(out) - expected).cwiseAbs().maxCoeff() < 1e-13);
  // and that direction is w o conj(w) up to the same normalization
  CHECK((expected - f.w.cwiseAbs2() / total).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("normalize_witness rejects nonpositive coefficients") {
  Rng rng(10);
  const CMatrix v = rng.complex_gaussian_matrix(4, 3);
  RVector X(3);
  X << 1.0, 0.0, 2.0;
  CHECK_THROWS_AS(normalize_witness(v, X), NonpositiveCoefficient);
}
