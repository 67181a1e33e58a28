#include "minherm/adequacy.hpp"

#include "minherm/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace minherm {

SpherePoint make_sphere_point(const CMatrix& a, const CMatrix& b,
                              double hermitian_tol, double sphere_tol) {
  if (max_abs(a - a.adjoint()) > hermitian_tol ||
      max_abs(b - b.adjoint()) > hermitian_tol)
    throw Error("make_sphere_point: component is not hermitian");
  if (std::abs(a.squaredNorm() - 1.0) > sphere_tol ||
      std::abs(b.squaredNorm() - 1.0) > sphere_tol)
    throw Error("make_sphere_point: component is off the unit sphere");
  return SpherePoint{hermitize(a), hermitize(b)};
}

RVector delta_diag(const OrthoPair& pair, const SpherePoint& p) {
  return diag_conj(pair.V, p.a * p.a) - diag_conj(pair.W, p.b * p.b);
}

double F(const OrthoPair& pair, const SpherePoint& p) {
  return delta_diag(pair, p).squaredNorm();
}

namespace {

// V* diag(d) V, hermitized against rounding.
CMatrix compress_diag(const CMatrix& V, const RVector& d) {
  return hermitize(V.adjoint() * d.asDiagonal() * V);
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& M) {
  return a * M + M * a;
}

}  // namespace

void gradient(const OrthoPair& pair, const SpherePoint& p, CMatrix& grad_a,
              CMatrix& grad_b) {
  const RVector d = delta_diag(pair, p);
  const CMatrix Sa = anticommutator(p.a, compress_diag(pair.V, d));
  const CMatrix Sb = anticommutator(p.b, compress_diag(pair.W, d));
  grad_a = 2.0 * (Sa - hermitian_inner(Sa, p.a) * p.a);
  grad_b = -2.0 * (Sb - hermitian_inner(Sb, p.b) * p.b);
}

CriticalResidual critical_residual(const OrthoPair& pair, const SpherePoint& p) {
  const RVector d = delta_diag(pair, p);
  const CMatrix Sa = anticommutator(p.a, compress_diag(pair.V, d));
  const CMatrix Sb = anticommutator(p.b, compress_diag(pair.W, d));
  CriticalResidual out;
  out.lambda = hermitian_inner(Sa, p.a);
  out.mu = hermitian_inner(Sb, p.b);
  out.res_a = (Sa - out.lambda * p.a).norm();
  out.res_b = (Sb - out.mu * p.b).norm();
  return out;
}

double hessian_quadratic(const OrthoPair& pair, const SpherePoint& p,
                         const CMatrix& X, const CMatrix& Y, double crit_tol) {
  const CriticalResidual cr = critical_residual(pair, p);
  if (cr.res_a > crit_tol || cr.res_b > crit_tol)
    throw NotCritical("hessian_quadratic: point is not critical (residuals " +
                      std::to_string(cr.res_a) + ", " + std::to_string(cr.res_b) + ")");

  const RVector d = delta_diag(pair, p);
  const RVector dX = diag_conj(pair.V, anticommutator(p.a, X));
  const RVector dY = -diag_conj(pair.W, anticommutator(p.b, Y));

  const CMatrix AV = compress_diag(pair.V, d);
  const CMatrix AW = compress_diag(pair.W, d);
  const double term_x =
      hermitian_inner(AV, X * X - X.squaredNorm() * (p.a * p.a));
  const double term_y =
      hermitian_inner(AW, Y * Y - Y.squaredNorm() * (p.b * p.b));
  // Second derivative of F along the geodesic through p with velocity (X, Y):
  // Taylor expansion of a(t)^2 with the radial acceleration -||X||^2 a gives
  // Delta(t) = Delta + t d1 + t^2 d2, F''(0) = 2||d1||^2 + 4 <Delta, d2>.
  return 2.0 * (dX + dY).squaredNorm() + 4.0 * (term_x - term_y);
}

SpherePoint retract_tangent(const SpherePoint& p, const CMatrix& X, const CMatrix& Y) {
  CMatrix a = p.a + X;
  CMatrix b = p.b + Y;
  return SpherePoint{a / a.norm(), b / b.norm()};
}

CMatrix abs_normalize(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  RVector ev = es.eigenvalues().cwiseAbs();
  const double nrm = ev.norm();
  if (nrm == 0.0) return m;  // zero update, keep the point
  ev /= nrm;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

struct RestartOutcome {
  SpherePoint point;
  double f = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

RestartOutcome run_restart(const OrthoPair& pair, const DescentConfig& cfg,
                           SpherePoint p) {
  RestartOutcome out;
  double f = F(pair, p);
  CMatrix Ga, Gb;
  int i = 0;
  for (; i < cfg.max_iters; ++i) {
    gradient(pair, p, Ga, Gb);
    const double gn = std::sqrt(Ga.squaredNorm() + Gb.squaredNorm());
    if (gn < cfg.grad_tol) {
      out.converged = true;
      break;
    }
    double step = cfg.step;
    SpherePoint next;
    double f_next = 0.0;
    bool accepted = false;
    for (int halving = 0; halving <= 30; ++halving) {
      next = SpherePoint{abs_normalize(p.a - step * Ga),
                         abs_normalize(p.b - step * Gb)};
      f_next = F(pair, next);
      if (!cfg.line_search || f_next <= f + 1e-14) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no decreasing step left, stall at p
    p = std::move(next);
    f = f_next;
  }
  gradient(pair, p, Ga, Gb);
  out.grad_norm = std::sqrt(Ga.squaredNorm() + Gb.squaredNorm());
  out.converged = out.grad_norm < cfg.grad_tol;
  out.point = std::move(p);
  out.f = F(pair, out.point);
  out.iterations = i;
  return out;
}

SpherePoint random_start(const OrthoPair& pair, std::uint64_t seed,
                         std::uint64_t stream) {
  Rng rng(seed, stream);
  return SpherePoint{rng.positive_definite_sphere(pair.r()),
                     rng.positive_definite_sphere(pair.s())};
}

}  // namespace

AdequacyResult descend(const OrthoPair& pair, const DescentConfig& cfg,
                       const SpherePoint* warm_start) {
  if (cfg.max_iters < 1 || cfg.restarts < 1 || cfg.step <= 0 || cfg.step > 1 ||
      cfg.grad_tol <= 0)
    throw Error("descend: invalid configuration");

  const int extra = warm_start ? 1 : 0;
  const int total = cfg.restarts + extra;
  std::vector<RestartOutcome> outcomes(total);

  auto work = [&](int k) {
    // slot 0 is the warm start when present; random restarts keep their
    // stream index independent of it
    if (warm_start && k == 0)
      outcomes[0] = run_restart(pair, cfg, *warm_start);
    else
      outcomes[k] = run_restart(pair, cfg,
                                random_start(pair, cfg.seed, k - extra));
  };

  int threads = cfg.threads == 0
                    ? static_cast<int>(std::thread::hardware_concurrency())
                    : cfg.threads;
  threads = std::max(1, std::min<int>(threads, total));
  if (threads == 1) {
    for (int k = 0; k < total; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> counter{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&]() {
        for (int k = counter.fetch_add(1); k < total; k = counter.fetch_add(1))
          work(k);
      });
    for (auto& th : pool) th.join();
  }

  int best = 0;
  for (int k = 1; k < total; ++k)
    if (outcomes[k].f < outcomes[best].f) best = k;

  const RestartOutcome& win = outcomes[best];
  const CriticalResidual cr = critical_residual(pair, win.point);
  AdequacyResult res;
  res.delta = win.f;
  res.minimizer = win.point;
  res.grad_norm = win.grad_norm;
  res.lambda = cr.lambda;
  res.mu = cr.mu;
  res.iterations = win.iterations;
  res.restart_index = best - extra;  // warm start reports as -1
  res.converged = win.converged;
  return res;
}

}  // namespace minherm
