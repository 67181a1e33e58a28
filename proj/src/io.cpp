#include "minherm/io.hpp"

#include <fstream>

namespace minherm {

Json matrix_to_json(const CMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw Error("matrix_from_json: expected {rows, cols, entries}");
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw Error("matrix_from_json: empty shape");
  const Json& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows * cols))
    throw Error("matrix_from_json: entries length != rows * cols");
  CMatrix m(rows, cols);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c, ++idx) {
      const Json& e = entries[idx];
      if (!e.is_array() || e.size() != 2)
        throw Error("matrix_from_json: each entry must be [re, im]");
      m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  if (!entries_finite(m)) throw Error("matrix_from_json: non-finite entries");
  return m;
}

Json vector_to_json(const CVector& v) { return matrix_to_json(v); }

CVector vector_from_json(const Json& j) {
  CMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw Error("vector_from_json: expected a single column");
  return m.col(0);
}

Json pair_to_json(const PairFile& p) {
  Json j{{"n", p.pair.n()},
         {"V", matrix_to_json(p.pair.V)},
         {"W", matrix_to_json(p.pair.W)}};
  if (p.columns) j["columns"] = matrix_to_json(*p.columns);
  if (p.w) j["w"] = vector_to_json(*p.w);
  return j;
}

PairFile pair_from_json(const Json& j, double ortho_tol) {
  if (!j.contains("V") || !j.contains("W"))
    throw Error("pair_from_json: expected {n, V, W}");
  PairFile p{validate_pair(matrix_from_json(j.at("V")),
                           matrix_from_json(j.at("W")), ortho_tol),
             std::nullopt, std::nullopt};
  if (j.contains("n") && j.at("n").get<Eigen::Index>() != p.pair.n())
    throw Error("pair_from_json: declared n disagrees with V");
  if (j.contains("columns")) p.columns = matrix_from_json(j.at("columns"));
  if (j.contains("w")) p.w = vector_from_json(j.at("w"));
  return p;
}

PairFile load_pair(const std::string& path, double ortho_tol) {
  return pair_from_json(load_json(path), ortho_tol);
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_json: cannot open " + path);
  out << j.dump(2) << "\n";
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_json: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("load_json: " + path + ": " + e.what());
  }
  return j;
}

Json certificate_to_json(const SupportCertificate& c) {
  return Json{{"det", c.det_abs},
              {"residual", c.residual},
              {"X", std::vector<double>(c.solution.data(),
                                        c.solution.data() + c.solution.size())},
              {"valid", c.valid}};
}

Json adequacy_result_to_json(const AdequacyResult& r) {
  return Json{{"delta", r.delta},
              {"grad_norm", r.grad_norm},
              {"lambda", r.lambda},
              {"mu", r.mu},
              {"iterations", r.iterations},
              {"restart_index", r.restart_index},
              {"converged", r.converged},
              {"a", matrix_to_json(r.minimizer.a)},
              {"b", matrix_to_json(r.minimizer.b)}};
}

Json fw_result_to_json(const FwResult& r) {
  return Json{{"delta", r.delta},
              {"fw_gap", r.fw_gap},
              {"iters", r.iterations},
              {"converged", r.converged}};
}

Json membership_to_json(const MembershipResult& r) {
  return Json{{"inside", r.inside},
              {"objective", r.objective},
              {"gap", r.gap},
              {"iters", r.iterations},
              {"converged", r.converged},
              {"witness_c_hat", matrix_to_json(r.witness_c_hat)}};
}

Json characterization_to_json(const CharacterizationReport& r) {
  return Json{{"res_ii_v", r.res_ii_v},
              {"res_ii_w", r.res_ii_w},
              {"res_sum_s", r.res_sum_s},
              {"res_sum_t", r.res_sum_t},
              {"res_phase_phi", r.res_phase_phi},
              {"res_phase_psi", r.res_phase_psi},
              {"res_unit_a", r.res_unit_a},
              {"res_unit_b", r.res_unit_b},
              {"res_annihilation_v", r.res_annihilation_v},
              {"res_annihilation_w", r.res_annihilation_w},
              {"res_cubic_s", r.res_cubic_s},
              {"res_cubic_t", r.res_cubic_t},
              {"tol", r.tol},
              {"ii_pass", r.ii_pass},
              {"iii_pass", r.iii_pass},
              {"equivalent", r.equivalent}};
}

Json campaign_to_json(const CampaignStats& s) {
  return Json{{"trials", s.trials},
              {"valid", s.valid},
              {"min_abs_det", s.min_abs_det},
              {"min_x", s.min_x},
              {"max_residual", s.max_residual}};
}

}  // namespace minherm
