// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "frame_io.hpp"
#include "support.hpp"

using namespace rhf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rhf_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("rho") {
  CHECK(run({"rho", "--field", "R", "--r", "8"}).out == "rho=8 a=0 b=0 c=3\n");
  CHECK(run({"rho", "--field", "C", "--r", "2"}).out == "rho=4 a=0 b=0 c=1\n");
  CHECK(run({"rho", "--field", "Q", "--r", "2"}).code == cli::kUsage);
  CHECK(run({"rho", "--field", "R", "--r", "0"}).code == cli::kUsage);
  CHECK(run({"rho", "--field", "R"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("build emits the real (4,2,4) frame and round-trips bit-exactly") {
  const Run r = run({"build", "--field", "R", "--r", "2", "--n", "4"});
  REQUIRE(r.code == cli::kPass);
  const io::FrameFile ff = io::frame_from_json(io::Json::parse(r.out));
  const auto expect = testing::real424_isometries();
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_abs_diff(ff.frame[i], expect[i]) <= 1e-12);
  CHECK(ff.metadata.at("variant") == "generic");

  TempDir tmp;
  const FusionFrame c = build_eitff(Field::Complex, 3, 4);
  io::write_json(tmp.file("c.json"), io::frame_to_json(c, {{"seed", 5}}));
  const io::FrameFile back = io::read_frame(tmp.file("c.json"));
  for (std::size_t i = 0; i < c.n(); ++i) CHECK(back.frame[i] == c[i]);
  CHECK(back.metadata.at("seed") == 5);
}

TEST_CASE("build exit codes") {
  TempDir tmp;
  const Run bad = run({"build", "--field", "R", "--r", "2", "--n", "5"});
  CHECK(bad.code == cli::kInfeasible);
  CHECK(bad.out.find("n <= rho+2 violated") != std::string::npos);
  CHECK(run({"build", "--field", "R", "--r", "4", "--n", "6", "--variant", "totally_symmetric"}).code ==
        cli::kInfeasible);
  CHECK(run({"build", "--field", "R", "--r", "2", "--n", "4", "--variant", "odd"}).code == cli::kUsage);
  CHECK(run({"build", "--field", "R", "--r", "2", "--n", "2"}).code == cli::kUsage);
  CHECK(run({"build", "--field", "R", "--r", "2", "--n", "4", "--out", tmp.file("no/such/dir.json")})
            .code == cli::kIoError);

  const std::string path = tmp.file("c4.json");
  CHECK(run({"build", "--field", "C", "--r", "4", "--n", "8", "--variant", "generic", "--out", path})
            .code == cli::kPass);
  CHECK(run({"verify", path}).code == cli::kPass);
}

TEST_CASE("verify report and exit codes") {
  TempDir tmp;
  const std::string path = tmp.file("f424.json");
  REQUIRE(run({"build", "--field", "R", "--r", "2", "--n", "4", "--out", path}).code == 0);
  const Run ok = run({"verify", path});
  CHECK(ok.code == cli::kPass);
  CHECK(ok.out.rfind("tightness=", 0) == 0);
  CHECK(ok.out.find(" equiisoclinic=") != std::string::npos);
  CHECK(ok.out.find(" welch_gap=") != std::string::npos);
  CHECK(ok.out.find(" coherence=0.57735026918962") != std::string::npos);
  CHECK(ok.out.find(" gerzon=ok\n") != std::string::npos);
  CHECK(ok.out.find("result=pass") != std::string::npos);

  // hand-corrupted entry
  io::Json j = io::read_json(path);
  j["isometries"][1]["data"][0][0] = 0.6;
  write_text(tmp.file("corrupt.json"), j.dump());
  const Run corrupt = run({"verify", tmp.file("corrupt.json")});
  CHECK(corrupt.code == cli::kVerifyFail);
  CHECK(corrupt.out.find("result=fail") != std::string::npos);

  // truncated JSON
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  write_text(tmp.file("trunc.json"), text.substr(0, text.size() / 2));
  CHECK(run({"verify", tmp.file("trunc.json")}).code == cli::kIoError);
  CHECK(run({"verify", tmp.file("missing.json")}).code == cli::kIoError);

  // schema violations
  io::Json bad_field = io::read_json(path);
  bad_field["isometries"][0]["data"][0][1] = 0.5;
  write_text(tmp.file("imag.json"), bad_field.dump());
  CHECK(run({"verify", tmp.file("imag.json")}).code == cli::kIoError);
  io::Json short_n = io::read_json(path);
  short_n["n"] = 3;
  write_text(tmp.file("n.json"), short_n.dump());
  CHECK(run({"verify", tmp.file("n.json")}).code == cli::kIoError);

  CHECK(run({"verify", path, "--tol", "-1"}).code == cli::kUsage);
}

TEST_CASE("naimark and angles") {
  TempDir tmp;
  const std::string path = tmp.file("r45.json");
  REQUIRE(run({"build", "--field", "R", "--r", "4", "--n", "5", "--out", path}).code == 0);
  const std::string comp = tmp.file("comp.json");
  CHECK(run({"naimark", path, "--out", comp}).code == cli::kPass);
  const io::FrameFile cf = io::read_frame(comp);
  CHECK(cf.frame.d() == 12);
  CHECK(run({"verify", comp, "--tol", "1e-9"}).code == cli::kPass);

  const Run a = run({"angles", path});
  CHECK(a.code == cli::kPass);
  std::istringstream lines(a.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 10);
  CHECK(a.out.rfind("pair=1,2 angles=", 0) == 0);
}

TEST_CASE("sym witness, check and probe") {
  TempDir tmp;
  const std::string ex = tmp.file("f424.json");
  REQUIRE(run({"build", "--field", "R", "--r", "2", "--n", "4", "--out", ex}).code == 0);

  const std::string cert = tmp.file("cert.json");
  CHECK(run({"sym", "witness", ex, "--perm", "1 3 2 4", "--out", cert}).code == cli::kPass);
  CHECK(run({"sym", "check", ex, cert}).code == cli::kPass);
  CHECK(run({"sym", "witness", ex, "--perm", "(23)"}).code == cli::kUsage);
  CHECK(run({"sym", "witness", ex, "--perm", "2 1 3"}).code == cli::kUsage);

  // a certificate for the wrong permutation fails the check
  io::Json wrong = io::read_json(cert);
  wrong["perm"] = "2 1 3 4";
  write_text(tmp.file("wrong.json"), wrong.dump());
  CHECK(run({"sym", "check", ex, tmp.file("wrong.json")}).code == cli::kVerifyFail);
  write_text(tmp.file("junk.json"), "{\"perm\": 3}");
  CHECK(run({"sym", "check", ex, tmp.file("junk.json")}).code == cli::kIoError);

  CHECK(run({"sym", "probe", ex}).out == "symmetry=total (numerically-decided)\n");
  const std::string c14 = tmp.file("c14.json");
  REQUIRE(run({"build", "--field", "C", "--r", "1", "--n", "4", "--out", c14}).code == 0);
  CHECK(run({"sym", "probe", c14}).out == "symmetry=alternating (numerically-decided)\n");
  const Run none = run({"sym", "witness", c14, "--perm", "2 1 3 4"});
  CHECK(none.code == cli::kVerifyFail);
  CHECK(none.out.find("witness=none") != std::string::npos);
  CHECK(run({"sym"}).code == cli::kUsage);
}

TEST_CASE("exists") {
  const Run u = run({"exists", "--field", "R", "--r", "4", "--n", "6", "--total"});
  CHECK(u.code == cli::kPass);
  CHECK(u.out.rfind("unknown ", 0) == 0);
  CHECK(run({"exists", "--field", "C", "--r", "1", "--n", "4", "--total"}).out.rfind("no ", 0) == 0);
  CHECK(run({"exists", "--field", "R", "--r", "2", "--n", "4", "--total"}).out.rfind("yes ", 0) == 0);
  CHECK(run({"exists", "--field", "R", "--r", "2", "--n", "4"}).out.rfind("yes ", 0) == 0);
  CHECK(run({"exists", "--field", "R", "--r", "2", "--n", "5"}).out.rfind("no ", 0) == 0);
}

TEST_CASE("omp demo") {
  TempDir tmp;
  const std::string ex = tmp.file("f424.json");
  REQUIRE(run({"build", "--field", "R", "--r", "2", "--n", "4", "--out", ex}).code == 0);
  const Run r = run({"omp", "demo", ex, "--k", "1", "--trials", "200", "--seed", "7"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.rfind("recovered=200/200 ", 0) == 0);
  CHECK(r.out.find("guaranteed=yes") != std::string::npos);
  // deterministic given the seed
  CHECK(run({"omp", "demo", ex, "--k", "1", "--trials", "200", "--seed", "7"}).out == r.out);
  CHECK(run({"omp", "demo", ex, "--k", "5"}).code == cli::kUsage);
  CHECK(run({"omp", "demo", ex, "--k", "2"}).out.find("guaranteed=no") != std::string::npos);
}
