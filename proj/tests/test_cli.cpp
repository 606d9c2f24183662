// End-to-end runs of the installed binary through a shell, checking exit
// codes, emitted files, and determinism.  MOPUC_CLI_PATH comes from CMake.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path cap = fs::temp_directory_path() /
                       ("mopuc_cli_capture_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++) + ".txt");
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(MOPUC_CLI_PATH) + " " + args + " > " + cap.string() +
         " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(cap);
  return r;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() /
                     ("mopuc_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::vector<fs::path> files_with_extension(const fs::path& dir,
                                           const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("help and argument errors") {
  CHECK(run_cli("--help").code == 0);
  const RunResult help = run_cli("--help");
  CHECK(help.output.find("solve") != std::string::npos);
  CHECK(help.output.find("verify") != std::string::npos);

  CHECK(run_cli("").code == 1);  // a subcommand is required
  CHECK(run_cli("solve --preset SYS-LEB").code == 1);  // missing --n

  const RunResult unknown = run_cli("solve --preset SYS-NOPE --n 1");
  CHECK(unknown.code == 1);
  CHECK(unknown.output.find("UnknownPreset") != std::string::npos);

  const RunResult bad_index = run_cli("solve --preset SYS-LEB --n x");
  CHECK(bad_index.code == 1);

  const RunResult both = run_cli(
      "solve --preset SYS-LEB --system foo.json --n 1");
  CHECK(both.code == 1);
}

TEST_CASE("solve writes a self-describing JSON document") {
  const fs::path dir = fresh_dir("solve");
  const RunResult r =
      run_cli("solve --preset SYS-LEB --n 2 --out " + dir.string());
  REQUIRE(r.code == 0);
  CHECK(r.output.find("wrote ") != std::string::npos);

  const auto out = files_with_extension(dir, ".json");
  REQUIRE(out.size() == 1);
  const json j = json::parse(slurp(out[0]));
  CHECK(j.at("command") == "solve");
  CHECK(j.at("n") == "2");
  CHECK(j.at("config").at("components").size() == 1);
  const json& poly = j.at("result").at("poly");
  CHECK(poly.at("two_min") == -2);
  REQUIRE(poly.at("coeffs").size() == 3);
  CHECK(std::abs(poly.at("coeffs")[0][0].get<double>()) < 1e-12);
  CHECK(std::abs(poly.at("coeffs")[2][0].get<double>() - 1.0) < 1e-12);
  CHECK(j.at("result").at("report").at("verdict") == "normal");
}

TEST_CASE("moments CSV is well-formed") {
  const fs::path dir = fresh_dir("moments");
  REQUIRE(run_cli("moments --preset SYS-BS:0.5 --max-freq 5 --out " +
                  dir.string())
              .code == 0);
  const auto out = files_with_extension(dir, ".csv");
  REQUIRE(out.size() == 1);
  std::ifstream in(out[0]);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "component,two_t,re,im");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
    CHECK(line.rfind("1,", 0) == 0);  // single component
  }
  CHECK(rows == 21);  // two_t in [-10, 10]
}

TEST_CASE("theorem-check failures exit with code 2 and still write reports") {
  const fs::path dir = fresh_dir("verify_fail");
  const RunResult r = run_cli(
      "verify --preset SYS-A2 --mode circle --n 1,1 --taus 4 "
      "--tol-circle 1e-20 --out " +
      dir.string());
  CHECK(r.code == 2);
  CHECK(r.output.find("TheoremViolated") != std::string::npos);
  CHECK(files_with_extension(dir, ".json").size() == 1);
  CHECK(files_with_extension(dir, ".csv").size() == 1);

  const json j = json::parse(slurp(files_with_extension(dir, ".json")[0]));
  bool found_failure = false;
  for (const json& v : j.at("circle")) {
    if (!v.at("pass").get<bool>()) found_failure = true;
  }
  CHECK(found_failure);
}

TEST_CASE("repeat runs with one seed are byte-identical") {
  const fs::path d1 = fresh_dir("scan1");
  const fs::path d2 = fresh_dir("scan2");
  const std::string args = "scan --preset SYS-A2 --max-index 1 --mode hp-offdiag";
  REQUIRE(run_cli(args + " --out " + d1.string()).code == 0);
  REQUIRE(run_cli(args + " --out " + d2.string()).code == 0);
  const auto f1 = files_with_extension(d1, ".csv");
  const auto f2 = files_with_extension(d2, ".csv");
  REQUIRE(f1.size() == 1);
  REQUIRE(f2.size() == 1);
  CHECK(slurp(f1[0]) == slurp(f2[0]));
}

TEST_CASE("thread count does not change verification output") {
  const fs::path d1 = fresh_dir("verify_par");
  const fs::path d2 = fresh_dir("verify_seq");
  const std::string args = "verify --preset SYS-A2 --mode disk --n 2,1 --out ";
  REQUIRE(run_cli(args + d1.string()).code == 0);
  REQUIRE(run_cli(args + d2.string(), "MOPUC_THREADS=1").code == 0);
  const auto f1 = files_with_extension(d1, ".json");
  const auto f2 = files_with_extension(d2, ".json");
  REQUIRE(f1.size() == 1);
  REQUIRE(f2.size() == 1);
  CHECK(slurp(f1[0]) == slurp(f2[0]));
}

TEST_CASE("zeros subcommand emits both JSON and a root table") {
  const fs::path dir = fresh_dir("zeros");
  const RunResult r = run_cli(
      "zeros --preset SYS-LEB --n 1 --tau 0 --out " + dir.string());
  REQUIRE(r.code == 0);
  const auto csvs = files_with_extension(dir, ".csv");
  REQUIRE(csvs.size() == 1);
  const std::string body = slurp(csvs[0]);
  CHECK(body.rfind("re,im,abs,arg,class,arc\n", 0) == 0);
  CHECK(body.find("on_circle") != std::string::npos);

  const json j = json::parse(slurp(files_with_extension(dir, ".json")[0]));
  CHECK(j.at("report").at("n_on") == 2);
}
