#include "minherm/adequacy.hpp"
#include "minherm/constructions.hpp"
#include "minherm/core.hpp"
#include "minherm/moment.hpp"
#include "minherm/oracle.hpp"
#include "minherm/rank_one.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace minherm;

PYBIND11_MODULE(_minherm, m) {
  m.doc() = "supports of minimal hermitian matrices: moments, adequacy "
            "descent, convex-distance oracle and constructions";

  py::register_exception<Error>(m, "MinhermError");

  py::class_<OrthoPair>(m, "OrthoPair")
      .def_readonly("V", &OrthoPair::V)
      .def_readonly("W", &OrthoPair::W)
      .def_property_readonly("n", &OrthoPair::n)
      .def_property_readonly("r", &OrthoPair::r)
      .def_property_readonly("s", &OrthoPair::s)
      .def("projector_v", &OrthoPair::projector_v)
      .def("projector_w", &OrthoPair::projector_w);

  m.def("validate_pair", &validate_pair, py::arg("V"), py::arg("W"),
        py::arg("ortho_tol") = kOrthoTol,
        "validate a pair of isometries with orthogonal ranges");
  m.def("hadamard_square", &hadamard_square, py::arg("v"),
        "moment of a system: the diagonal of v v*");
  m.def("orthogonalize_same_moment", &orthogonalize_same_moment, py::arg("v"),
        py::arg("rank_rel_tol") = kSvdRankRelTol);

  py::class_<SupportCertificate>(m, "SupportCertificate")
      .def_readonly("system", &SupportCertificate::system)
      .def_readonly("rhs", &SupportCertificate::rhs)
      .def_readonly("solution", &SupportCertificate::solution)
      .def_readonly("residual", &SupportCertificate::residual)
      .def_readonly("det_abs", &SupportCertificate::det_abs)
      .def_readonly("valid", &SupportCertificate::valid);

  m.def("support_certificate", &support_certificate, py::arg("columns"),
        py::arg("w"), py::arg("det_tol_scale") = kDetTolScale,
        py::arg("cert_tol") = kCertTol);
  m.def("normalize_witness", &normalize_witness, py::arg("columns"), py::arg("X"));

  py::class_<SpherePoint>(m, "SpherePoint")
      .def(py::init([](const CMatrix& a, const CMatrix& b) {
             return make_sphere_point(a, b);
           }),
           py::arg("a"), py::arg("b"))
      .def_readonly("a", &SpherePoint::a)
      .def_readonly("b", &SpherePoint::b);

  py::class_<DescentConfig>(m, "DescentConfig")
      .def(py::init<>())
      .def_readwrite("max_iters", &DescentConfig::max_iters)
      .def_readwrite("step", &DescentConfig::step)
      .def_readwrite("grad_tol", &DescentConfig::grad_tol)
      .def_readwrite("restarts", &DescentConfig::restarts)
      .def_readwrite("seed", &DescentConfig::seed)
      .def_readwrite("line_search", &DescentConfig::line_search)
      .def_readwrite("threads", &DescentConfig::threads);

  py::class_<AdequacyResult>(m, "AdequacyResult")
      .def_readonly("delta", &AdequacyResult::delta)
      .def_readonly("minimizer", &AdequacyResult::minimizer)
      .def_readonly("grad_norm", &AdequacyResult::grad_norm)
      .def_readonly("lambda_", &AdequacyResult::lambda)
      .def_readonly("mu", &AdequacyResult::mu)
      .def_readonly("iterations", &AdequacyResult::iterations)
      .def_readonly("restart_index", &AdequacyResult::restart_index)
      .def_readonly("converged", &AdequacyResult::converged);

  m.def("delta_diag", &delta_diag, py::arg("pair"), py::arg("p"));
  m.def("F", &F, py::arg("pair"), py::arg("p"));
  m.def(
      "gradient",
      [](const OrthoPair& pair, const SpherePoint& p) {
        CMatrix ga, gb;
        gradient(pair, p, ga, gb);
        return py::make_tuple(ga, gb);
      },
      py::arg("pair"), py::arg("p"));
  m.def(
      "critical_residual",
      [](const OrthoPair& pair, const SpherePoint& p) {
        const CriticalResidual cr = critical_residual(pair, p);
        return py::make_tuple(cr.lambda, cr.mu, cr.res_a, cr.res_b);
      },
      py::arg("pair"), py::arg("p"));
  m.def("hessian_quadratic", &hessian_quadratic, py::arg("pair"), py::arg("p"),
        py::arg("X"), py::arg("Y"), py::arg("crit_tol") = 1e-6);
  m.def(
      "descend",
      [](const OrthoPair& pair, const DescentConfig& cfg) {
        return descend(pair, cfg);
      },
      py::arg("pair"), py::arg("cfg") = DescentConfig{});

  py::class_<FwOptions>(m, "FwOptions")
      .def(py::init<>())
      .def_readwrite("max_iters", &FwOptions::max_iters)
      .def_readwrite("gap_tol", &FwOptions::gap_tol)
      .def_readwrite("line_search", &FwOptions::line_search);

  py::class_<DensityPoint>(m, "DensityPoint")
      .def_readonly("c_hat", &DensityPoint::c_hat)
      .def_readonly("d_hat", &DensityPoint::d_hat);

  py::class_<FwResult>(m, "FwResult")
      .def_readonly("delta", &FwResult::delta)
      .def_readonly("point", &FwResult::point)
      .def_readonly("fw_gap", &FwResult::fw_gap)
      .def_readonly("iterations", &FwResult::iterations)
      .def_readonly("converged", &FwResult::converged);

  m.def("fw_distance", &fw_distance, py::arg("pair"),
        py::arg("opts") = FwOptions{});

  py::class_<MembershipResult>(m, "MembershipResult")
      .def_readonly("inside", &MembershipResult::inside)
      .def_readonly("objective", &MembershipResult::objective)
      .def_readonly("gap", &MembershipResult::gap)
      .def_readonly("witness_c_hat", &MembershipResult::witness_c_hat)
      .def_readonly("iterations", &MembershipResult::iterations)
      .def_readonly("converged", &MembershipResult::converged);

  m.def("moment_body_membership", &moment_body_membership, py::arg("pair"),
        py::arg("target"), py::arg("tol"), py::arg("opts") = FwOptions{});

  py::class_<RankOneCritical>(m, "RankOneCritical")
      .def_readonly("a_tilde", &RankOneCritical::a_tilde)
      .def_readonly("b_tilde", &RankOneCritical::b_tilde)
      .def_readonly("alpha", &RankOneCritical::alpha)
      .def_readonly("beta", &RankOneCritical::beta)
      .def_readonly("s", &RankOneCritical::s)
      .def_readonly("t", &RankOneCritical::t)
      .def_readonly("phi", &RankOneCritical::phi)
      .def_readonly("psi", &RankOneCritical::psi)
      .def_readonly("sigma", &RankOneCritical::sigma)
      .def_readonly("tau", &RankOneCritical::tau)
      .def_readonly("lambda_", &RankOneCritical::lambda)
      .def_readonly("mu", &RankOneCritical::mu);

  m.def("lift_rank_one", &lift_rank_one, py::arg("pair"), py::arg("a_tilde"),
        py::arg("b_tilde"));

  py::class_<CharacterizationReport>(m, "CharacterizationReport")
      .def_readonly("res_ii_v", &CharacterizationReport::res_ii_v)
      .def_readonly("res_ii_w", &CharacterizationReport::res_ii_w)
      .def_readonly("res_annihilation_v", &CharacterizationReport::res_annihilation_v)
      .def_readonly("res_annihilation_w", &CharacterizationReport::res_annihilation_w)
      .def_readonly("res_cubic_s", &CharacterizationReport::res_cubic_s)
      .def_readonly("res_cubic_t", &CharacterizationReport::res_cubic_t)
      .def_readonly("ii_pass", &CharacterizationReport::ii_pass)
      .def_readonly("iii_pass", &CharacterizationReport::iii_pass)
      .def_readonly("equivalent", &CharacterizationReport::equivalent);

  m.def("verify_characterization", &verify_characterization, py::arg("pair"),
        py::arg("candidate"), py::arg("tol"));
  m.def("rank_one_defect", &rank_one_defect, py::arg("a"));
  m.def("dominant_eigenvector", &dominant_eigenvector, py::arg("a"));

  py::enum_<Appendix>(m, "Appendix")
      .value("A3", Appendix::A3)
      .value("B4", Appendix::B4)
      .value("C5", Appendix::C5);

  py::class_<Fixture>(m, "Fixture")
      .def_readonly("name", &Fixture::name)
      .def_readonly("n", &Fixture::n)
      .def_readonly("dim_v", &Fixture::dim_v)
      .def_readonly("columns", &Fixture::columns)
      .def_readonly("w", &Fixture::w)
      .def_readonly("expected_x", &Fixture::expected_x)
      .def_readonly("expected_x_rational", &Fixture::expected_x_rational)
      .def_readonly("pair", &Fixture::pair);

  m.def("appendix_fixture", &appendix_fixture, py::arg("which"));

  py::class_<ComposedSupport>(m, "ComposedSupport")
      .def_readonly("pair", &ComposedSupport::pair)
      .def_readonly("columns", &ComposedSupport::columns)
      .def_readonly("w", &ComposedSupport::w)
      .def_readonly("certificate", &ComposedSupport::certificate);

  m.def("block_compose", &block_compose, py::arg("h"), py::arg("k"), py::arg("l"));

  py::class_<CampaignStats>(m, "CampaignStats")
      .def_readonly("trials", &CampaignStats::trials)
      .def_readonly("valid", &CampaignStats::valid)
      .def_readonly("min_abs_det", &CampaignStats::min_abs_det)
      .def_readonly("min_x", &CampaignStats::min_x)
      .def_readonly("max_residual", &CampaignStats::max_residual);

  m.def("interior_campaign", &interior_campaign, py::arg("columns"),
        py::arg("w"), py::arg("epsilon"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 1);

  m.def(
      "build_minimal",
      [](const OrthoPair& pair, double lambda, const CMatrix& R,
         std::optional<SupportCertificate> cert, std::optional<double> adequacy,
         double support_tol) {
        return build_minimal(MinimalMatrixSpec{pair, lambda, R},
                             SupportEvidence{std::move(cert), adequacy},
                             support_tol);
      },
      py::arg("pair"), py::arg("lambda_"), py::arg("R"),
      py::arg("certificate") = std::nullopt, py::arg("adequacy") = std::nullopt,
      py::arg("support_tol") = kSupportTol);

  m.def("spectral_norm", &spectral_norm, py::arg("M"));

  py::class_<SweepSample>(m, "SweepSample")
      .def_readonly("x", &SweepSample::x)
      .def_readonly("delta", &SweepSample::delta)
      .def_readonly("grad_norm", &SweepSample::grad_norm)
      .def_readonly("converged", &SweepSample::converged);

  m.def(
      "sweep_curve",
      [](const OrthoPair& pair, const CMatrix& generator, double dx, int steps,
         const DescentConfig& cfg, bool warm_start) {
        return sweep_curve(SweepSpec{pair, generator, dx, steps}, cfg,
                           warm_start);
      },
      py::arg("pair"), py::arg("generator"), py::arg("dx"), py::arg("steps"),
      py::arg("cfg") = DescentConfig{}, py::arg("warm_start") = true);
}
