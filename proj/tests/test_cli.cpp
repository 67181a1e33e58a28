#include "minherm/cli.hpp"
#include "minherm/constructions.hpp"
#include "minherm/io.hpp"
#include "minherm/rng.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace minherm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("minherm_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("cli verify-appendix a3 reports the golden residuals") {
  std::string out;
  const int code = run_cli({"verify-appendix", "a3"}, &out);
  CHECK(code == 0);
  const Json j = Json::parse(out);
  CHECK(j.at("residual").get<double>() < 1e-12);
  CHECK(j.at("max_x_error").get<double>() < 1e-12);
  CHECK(j.at("valid").get<bool>());
}

TEST_CASE("cli rejects a missing pair file with exit 2") {
  std::string err;
  const int code = run_cli({"adequacy", "--pair", "/nonexistent/missing.json"},
                           nullptr, &err);
  CHECK(code == 2);
  CHECK(err.find("missing.json") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 64") {
  std::string err;
  CHECK(run_cli({"adequacy"}, nullptr, &err) == 64);  // --pair is required
  CHECK(run_cli({"no-such-command"}, nullptr, &err) == 64);
}

TEST_CASE("cli --strict turns non-convergence into exit 3") {
  TempDir tmp;
  Rng rng(86);
  const OrthoPair pair = rng.random_pair(5, 2, 2);
  const std::string path = tmp.file("pair.json");
  save_json(pair_to_json(PairFile{pair, std::nullopt, std::nullopt}), path);

  std::string out;
  // one iteration cannot reach the gradient tolerance on a generic pair
  CHECK(run_cli({"--strict", "adequacy", "--pair", path, "--max-iters", "1",
                 "--restarts", "1"},
                &out) == 3);
  CHECK_FALSE(Json::parse(out).at("converged").get<bool>());
  // without --strict the same run exits 0
  CHECK(run_cli({"adequacy", "--pair", path, "--max-iters", "1", "--restarts",
                 "1"},
                &out) == 0);
}

TEST_CASE("cli compose then adequacy pipeline finds a support") {
  TempDir tmp;
  const std::string pair_path = tmp.file("pair.json");
  std::string out;
  int code = run_cli({"--out", pair_path, "compose", "--h", "1", "--k", "1",
                      "--l", "0"},
                     &out);
  CHECK(code == 0);
  CHECK(Json::parse(out).at("certificate").at("valid").get<bool>());

  code = run_cli({"--seed", "3", "adequacy", "--pair", pair_path, "--restarts",
                  "6"},
                 &out);
  CHECK(code == 0);
  const Json res = Json::parse(out);
  CHECK(res.at("delta").get<double>() < 1e-10);
  CHECK(res.at("converged").get<bool>());
}

TEST_CASE("cli adequacy output is deterministic for a fixed seed") {
  TempDir tmp;
  const std::string pair_path = tmp.file("pair.json");
  run_cli({"--out", pair_path, "compose", "--h", "1", "--k", "0", "--l", "0"});
  std::string first, second;
  CHECK(run_cli({"--seed", "11", "adequacy", "--pair", pair_path}, &first) == 0);
  CHECK(run_cli({"--seed", "11", "adequacy", "--pair", pair_path}, &second) == 0);
  CHECK(first == second);
}

TEST_CASE("cli matrix round-trip is bitwise exact") {
  TempDir tmp;
  const Fixture f = appendix_fixture(Appendix::B4);
  const std::string path = tmp.file("m.json");
  save_json(matrix_to_json(f.columns), path);
  const CMatrix back = matrix_from_json(load_json(path));
  REQUIRE(back.rows() == f.columns.rows());
  for (Eigen::Index i = 0; i < back.rows(); ++i)
    for (Eigen::Index j = 0; j < back.cols(); ++j)
      CHECK(back(i, j) == f.columns(i, j));
}

TEST_CASE("matrix json round-trip is bitwise exact on random data") {
  Rng rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix m =
        rng.complex_gaussian_matrix(1 + trial % 5, 1 + (trial * 7) % 4) * 1e3;
    const CMatrix back = matrix_from_json(Json::parse(matrix_to_json(m).dump()));
    CHECK((back.array() == m.array()).all());
  }
}

TEST_CASE("malformed matrix json is rejected") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse(
                      R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})")),
                  Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1})")), Error);
  CHECK_THROWS_AS(
      matrix_from_json(Json::parse(
          R"({"rows": 1, "cols": 1, "entries": [[1, 0, 3]]})")),
      Error);
}

TEST_CASE("cli oracle agrees with the stored certificate fixtures") {
  TempDir tmp;
  const Fixture f = appendix_fixture(Appendix::A3);
  const std::string path = tmp.file("pair.json");
  save_json(pair_to_json(PairFile{f.pair, f.columns, f.w}), path);

  std::string out;
  CHECK(run_cli({"oracle", "--pair", path}, &out) == 0);
  CHECK(Json::parse(out).at("delta").get<double>() < 1e-8);
}

TEST_CASE("cli perturb requires the witness system") {
  TempDir tmp;
  const Fixture f = appendix_fixture(Appendix::A3);
  const std::string bare = tmp.file("bare.json");
  save_json(pair_to_json(PairFile{f.pair, std::nullopt, std::nullopt}), bare);
  std::string err;
  CHECK(run_cli({"perturb", "--pair", bare, "--trials", "3"}, nullptr, &err) == 2);

  const std::string full = tmp.file("full.json");
  save_json(pair_to_json(PairFile{f.pair, f.columns, f.w}), full);
  std::string out;
  CHECK(run_cli({"--seed", "5", "perturb", "--pair", full, "--eps", "1e-3",
                 "--trials", "5"},
                &out) == 0);
  CHECK(Json::parse(out).at("valid").get<int>() == 5);
}

TEST_CASE("cli sweep writes the CSV header and rows") {
  TempDir tmp;
  const Fixture f = appendix_fixture(Appendix::A3);
  const std::string pair_path = tmp.file("pair.json");
  save_json(pair_to_json(PairFile{f.pair, std::nullopt, std::nullopt}), pair_path);
  const std::string gen_path = tmp.file("gen.json");
  save_json(matrix_to_json(CMatrix::Zero(3, 3)), gen_path);
  const std::string csv_path = tmp.file("sweep.csv");

  std::string out;
  const int code = run_cli({"sweep", "--pair", pair_path, "--gen", gen_path,
                            "--dx", "0.01", "--steps", "3", "--csv", csv_path},
                           &out);
  CHECK(code == 0);
  std::ifstream csv(csv_path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "x,delta,grad_norm,converged");
  int rows = 0;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("cli minimal builds the projector difference from a certificate") {
  TempDir tmp;
  const Fixture f = appendix_fixture(Appendix::A3);
  const std::string path = tmp.file("pair.json");
  save_json(pair_to_json(PairFile{f.pair, f.columns, f.w}), path);
  std::string out;
  CHECK(run_cli({"minimal", "--pair", path, "--lambda", "1.0"}, &out) == 0);
  const Json j = Json::parse(out);
  CHECK(j.at("norm").get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  const CMatrix Z = matrix_from_json(j.at("Z"));
  CHECK(max_abs(Z - (f.pair.projector_v() - f.pair.projector_w())) < 1e-12);
}
