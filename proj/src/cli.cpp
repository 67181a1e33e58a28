#include "minherm/cli.hpp"

#include "minherm/io.hpp"
#include "minherm/rng.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace minherm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitUsage = 64;

struct Global {
  std::uint64_t seed = 0;
  int threads = 1;
  bool strict = false;
  std::string out_path;
};

void emit(const Json& j, const Global& g, std::ostream& out) {
  if (g.out_path.empty())
    out << j.dump(2) << "\n";
  else
    save_json(j, g.out_path);
}

Appendix parse_appendix(const std::string& name) {
  if (name == "a3") return Appendix::A3;
  if (name == "b4") return Appendix::B4;
  if (name == "c5") return Appendix::C5;
  throw Error("unknown fixture '" + name + "' (expected a3, b4 or c5)");
}

int cmd_adequacy(const Global& g, const std::string& pair_path,
                 const DescentConfig& cfg, std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  const AdequacyResult res = descend(pf.pair, cfg);
  emit(adequacy_result_to_json(res), g, out);
  return (!res.converged && g.strict) ? kExitNoConvergence : kExitOk;
}

int cmd_oracle(const Global& g, const std::string& pair_path,
               const FwOptions& opts, std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  const FwResult res = fw_distance(pf.pair, opts);
  emit(fw_result_to_json(res), g, out);
  return (!res.converged && g.strict) ? kExitNoConvergence : kExitOk;
}

int cmd_critical(const Global& g, const std::string& pair_path,
                 const DescentConfig& cfg, double tol, std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  const AdequacyResult res = descend(pf.pair, cfg);
  const double defect_a = rank_one_defect(res.minimizer.a);
  const double defect_b = rank_one_defect(res.minimizer.b);
  const CriticalResidual cr = critical_residual(pf.pair, res.minimizer);

  Json j{{"delta", res.delta},
         {"converged", res.converged},
         {"lambda", cr.lambda},
         {"mu", cr.mu},
         {"res_a", cr.res_a},
         {"res_b", cr.res_b},
         {"rank_one_defect_a", defect_a},
         {"rank_one_defect_b", defect_b}};

  const bool rank_one = defect_a < 1e-7 && defect_b < 1e-7;
  j["rank_one"] = rank_one;
  if (rank_one) {
    const RankOneCritical cand =
        lift_rank_one(pf.pair, dominant_eigenvector(res.minimizer.a),
                      dominant_eigenvector(res.minimizer.b));
    j["report"] = characterization_to_json(
        verify_characterization(pf.pair, cand, tol));
  }
  emit(j, g, out);
  return (!res.converged && g.strict) ? kExitNoConvergence : kExitOk;
}

int cmd_verify_appendix(const Global& g, const std::string& which,
                        std::ostream& out) {
  const Fixture f = appendix_fixture(parse_appendix(which));
  const SupportCertificate cert = support_certificate(f.columns, f.w);
  const double max_err =
      (cert.solution - f.expected_x).cwiseAbs().maxCoeff();
  Json j{{"fixture", f.name},
         {"n", f.n},
         {"dim_v", f.dim_v},
         {"det", cert.det_abs},
         {"residual", cert.residual},
         {"max_x_error", max_err},
         {"sum_x", cert.solution.sum()},
         {"valid", cert.valid}};
  emit(j, g, out);
  return cert.valid && max_err < 1e-12 ? kExitOk : kExitInput;
}

int cmd_compose(const Global& g, int h, int k, int l, std::ostream& out) {
  const ComposedSupport comp = block_compose(h, k, l);
  if (!g.out_path.empty())
    save_json(pair_to_json(PairFile{comp.pair, comp.columns, comp.w}),
              g.out_path);
  Json j{{"n", comp.pair.n()},
         {"dim_v", comp.pair.r()},
         {"certificate", certificate_to_json(comp.certificate)}};
  out << j.dump(2) << "\n";
  return comp.certificate.valid ? kExitOk : kExitInput;
}

int cmd_perturb(const Global& g, const std::string& pair_path, double eps,
                int trials, std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  if (!pf.columns || !pf.w)
    throw Error("perturb: the pair file carries no square column system "
                "(fields 'columns' and 'w')");
  const CampaignStats stats =
      interior_campaign(*pf.columns, *pf.w, eps, trials, g.seed, g.threads);
  emit(campaign_to_json(stats), g, out);
  return kExitOk;
}

int cmd_sweep(const Global& g, const std::string& pair_path,
              const std::string& gen_path, double dx, int steps,
              const DescentConfig& cfg, bool warm, const std::string& csv_path,
              std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  const CMatrix A = matrix_from_json(load_json(gen_path));
  const SweepSpec spec{pf.pair, A, dx, steps};
  const std::vector<SweepSample> samples = sweep_curve(spec, cfg, warm);

  std::ostringstream csv;
  csv << "x,delta,grad_norm,converged\n";
  int unconverged = 0;
  for (const auto& s : samples) {
    csv << s.x << ',' << s.delta << ',' << s.grad_norm << ','
        << (s.converged ? 1 : 0) << '\n';
    if (!s.converged) ++unconverged;
  }
  if (csv_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(csv_path);
    if (!f) throw Error("sweep: cannot open " + csv_path);
    f << csv.str();
    out << Json{{"samples", samples.size()}, {"unconverged", unconverged}}
               .dump(2)
        << "\n";
  }
  return (unconverged > 0 && g.strict) ? kExitNoConvergence : kExitOk;
}

int cmd_minimal(const Global& g, const std::string& pair_path, double lambda,
                const std::string& r_path, double support_tol,
                std::ostream& out) {
  const PairFile pf = load_pair(pair_path);
  const Eigen::Index n = pf.pair.n();
  MinimalMatrixSpec spec{pf.pair, lambda,
                         r_path.empty() ? CMatrix::Zero(n, n)
                                        : matrix_from_json(load_json(r_path))};

  SupportEvidence evidence;
  Json ev_json;
  if (pf.columns && pf.w) {
    evidence.certificate = support_certificate(*pf.columns, *pf.w);
    ev_json = {{"kind", "certificate"},
               {"certificate", certificate_to_json(*evidence.certificate)}};
  } else {
    DescentConfig cfg;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    const AdequacyResult res = descend(pf.pair, cfg);
    evidence.adequacy = res.delta;
    ev_json = {{"kind", "adequacy"}, {"delta", res.delta}};
  }

  const CMatrix Z = build_minimal(spec, evidence, support_tol);
  emit(Json{{"Z", matrix_to_json(Z)},
            {"norm", spectral_norm(Z)},
            {"evidence", ev_json}},
       g, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"supports of minimal hermitian matrices: adequacy descent, "
               "convex-distance oracle, certificates and constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "seed for every random draw");
  app.add_option("--threads", g.threads,
                 "worker threads for restarts and campaign trials (0 = auto)");
  app.add_flag("--strict", g.strict, "exit 3 when an optimizer fails to converge");
  app.add_option("--out", g.out_path, "write the result to this file instead of stdout");

  // adequacy
  auto* adequacy_cmd = app.add_subcommand("adequacy", "estimate delta(V, W) by multi-start descent");
  std::string pair_path;
  DescentConfig dcfg;
  adequacy_cmd->add_option("--pair", pair_path, "pair JSON file")->required();
  adequacy_cmd->add_option("--restarts", dcfg.restarts, "random restarts");
  adequacy_cmd->add_option("--max-iters", dcfg.max_iters, "iteration cap per restart");
  adequacy_cmd->add_option("--tol", dcfg.grad_tol, "gradient norm tolerance");
  adequacy_cmd->add_option("--step", dcfg.step, "step size in (0, 1]");
  adequacy_cmd->add_flag("--line-search", dcfg.line_search, "halve the step while F increases");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "delta(V, W) as a convex set distance, by Frank-Wolfe");
  std::string oracle_pair;
  FwOptions fw_opts;
  oracle_cmd->add_option("--pair", oracle_pair, "pair JSON file")->required();
  oracle_cmd->add_option("--gap-tol", fw_opts.gap_tol, "duality gap tolerance");
  oracle_cmd->add_option("--max-iters", fw_opts.max_iters, "iteration cap");
  bool fixed_step = false;
  oracle_cmd->add_flag("--fixed-step", fixed_step, "use the 2/(k+2) step instead of line search");

  // critical
  auto* critical_cmd = app.add_subcommand("critical", "critical point residuals at the descent minimizer");
  std::string critical_pair;
  bool from_descent = false;
  double crit_tol = 1e-7;
  DescentConfig crit_cfg;
  critical_cmd->add_option("--pair", critical_pair, "pair JSON file")->required();
  critical_cmd->add_flag("--from-descent", from_descent,
                         "run the descent first and verify at its minimizer (default behavior)");
  critical_cmd->add_option("--tol", crit_tol, "residual tolerance for the report");
  critical_cmd->add_option("--restarts", crit_cfg.restarts, "descent restarts");

  // verify-appendix
  auto* verify_cmd = app.add_subcommand("verify-appendix", "check a hard-coded support example");
  std::string which;
  verify_cmd->add_option("fixture", which, "a3, b4 or c5")->required();

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "block-diagonal support in dimension 3h + 4k + 5l");
  int ch = 0, ck = 0, cl = 0;
  // --h must stay available as an option name
  compose_cmd->set_help_flag("--help", "print this help message and exit");
  compose_cmd->add_option("--h", ch, "copies of the 3-dimensional block");
  compose_cmd->add_option("--k", ck, "copies of the 4-dimensional block");
  compose_cmd->add_option("--l", cl, "copies of the 5-dimensional block");

  // perturb
  auto* perturb_cmd = app.add_subcommand("perturb", "unitary perturbation campaign around a certified system");
  std::string perturb_pair;
  double eps = 1e-3;
  int trials = 100;
  perturb_cmd->add_option("--pair", perturb_pair, "pair JSON file with columns and w")->required();
  perturb_cmd->add_option("--eps", eps, "perturbation size");
  perturb_cmd->add_option("--trials", trials, "number of trials");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "delta along the unitary curve exp(i x A)");
  std::string sweep_pair, gen_path, csv_path;
  double dx = 0.01;
  int steps = 650;
  DescentConfig sweep_cfg;
  sweep_cfg.restarts = 4;
  bool no_warm = false;
  sweep_cmd->add_option("--pair", sweep_pair, "pair JSON file")->required();
  sweep_cmd->add_option("--gen", gen_path, "hermitian generator JSON file")->required();
  sweep_cmd->add_option("--dx", dx, "grid spacing");
  sweep_cmd->add_option("--steps", steps, "number of samples");
  sweep_cmd->add_option("--restarts", sweep_cfg.restarts, "descent restarts per sample");
  sweep_cmd->add_option("--max-iters", sweep_cfg.max_iters, "iteration cap per restart");
  sweep_cmd->add_flag("--line-search", sweep_cfg.line_search, "halve the step while F increases");
  sweep_cmd->add_flag("--no-warm-start", no_warm, "do not chain minimizers between samples");
  sweep_cmd->add_option("--csv", csv_path, "CSV output path (default: --out, else stdout)");

  // minimal
  auto* minimal_cmd = app.add_subcommand("minimal", "assemble lambda (P_V - P_W) + R for a certified support");
  std::string minimal_pair, r_path;
  double lambda = 1.0, support_tol = kSupportTol;
  minimal_cmd->add_option("--pair", minimal_pair, "pair JSON file")->required();
  minimal_cmd->add_option("--lambda", lambda, "positive eigenvalue");
  minimal_cmd->add_option("--R", r_path, "JSON file with the hermitian block R");
  minimal_cmd->add_option("--support-tol", support_tol, "adequacy threshold certifying a support");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*adequacy_cmd) {
      dcfg.seed = g.seed;
      dcfg.threads = g.threads;
      return cmd_adequacy(g, pair_path, dcfg, out);
    }
    if (*oracle_cmd) {
      fw_opts.line_search = !fixed_step;
      return cmd_oracle(g, oracle_pair, fw_opts, out);
    }
    if (*critical_cmd) {
      (void)from_descent;  // the descent route is the only one
      crit_cfg.seed = g.seed;
      crit_cfg.threads = g.threads;
      return cmd_critical(g, critical_pair, crit_cfg, crit_tol, out);
    }
    if (*verify_cmd) return cmd_verify_appendix(g, which, out);
    if (*compose_cmd) return cmd_compose(g, ch, ck, cl, out);
    if (*perturb_cmd) return cmd_perturb(g, perturb_pair, eps, trials, out);
    if (*sweep_cmd) {
      sweep_cfg.seed = g.seed;
      sweep_cfg.threads = g.threads;
      if (csv_path.empty()) csv_path = g.out_path;
      return cmd_sweep(g, sweep_pair, gen_path, dx, steps, sweep_cfg, !no_warm,
                       csv_path, out);
    }
    if (*minimal_cmd)
      return cmd_minimal(g, minimal_pair, lambda, r_path, support_tol, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace minherm::cli
