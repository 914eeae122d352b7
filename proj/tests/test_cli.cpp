// End-to-end tests of the command-line binary: exit codes, output formats,
// determinism, and the published report schema.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const std::string kCli = HODGEBOUND_CLI_PATH;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("hodgebound_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs `prefix cli args` through the shell, capturing stdout.
RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  static int counter = 0;
  const fs::path out_file = work_dir() / ("out" + std::to_string(counter++) + ".txt");
  std::string cmd = env_prefix + " \"" + kCli + "\" " + args + " > \"" +
                    out_file.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_input(const std::string& name, const std::string& body) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("verify subcommand exit codes") {
  CHECK(run("verify --suite algebra").exit_code == 0);
  CHECK(run("verify --suite bogus").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify --suite algebra --trials 0").exit_code == 2);
}

TEST_CASE("verify emits schema-shaped json") {
  const RunResult r = run("verify --suite identities --seed 3");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("tool") == "hodgebound");
  CHECK(doc.at("version").is_string());
  CHECK(doc.at("seed") == 3);
  REQUIRE(doc.at("records").is_array());
  int pass = 0, fail = 0, na = 0;
  for (const auto& rec : doc.at("records")) {
    CHECK(rec.at("name").is_string());
    CHECK(rec.at("inputs").is_object());
    CHECK(rec.at("values").is_object());
    const std::string status = rec.at("status");
    CHECK((status == "pass" || status == "fail" || status == "not-applicable"));
    pass += status == "pass";
    fail += status == "fail";
    na += status == "not-applicable";
    CHECK((rec.at("residual").is_number() || rec.at("residual").is_null()));
    CHECK(rec.at("note").is_string());
  }
  const Json& s = doc.at("summary");
  CHECK(s.at("pass") == pass);
  CHECK(s.at("fail") == fail);
  CHECK(s.at("not_applicable") == na);
  CHECK(s.at("total") == int(doc.at("records").size()));
}

TEST_CASE("published schema agrees with the emitted shape") {
  std::ifstream in(HODGEBOUND_SCHEMA_PATH);
  REQUIRE(in.good());
  const Json schema = Json::parse(in);
  // the required key lists in the schema match what the binary writes
  const RunResult r = run("verify --suite algebra");
  const Json doc = Json::parse(r.out);
  for (const auto& key : schema.at("required")) CHECK(doc.contains(key.get<std::string>()));
  const Json& rec_schema = schema.at("definitions").at("record");
  REQUIRE(!doc.at("records").empty());
  for (const auto& key : rec_schema.at("required"))
    CHECK(doc.at("records")[0].contains(key.get<std::string>()));
  for (const auto& key : schema.at("properties").at("summary").at("required"))
    CHECK(doc.at("summary").contains(key.get<std::string>()));
}

TEST_CASE("reports are byte-identical across runs") {
  const RunResult a = run("verify --suite inequalities --seed 11 --trials 40");
  const RunResult b = run("verify --suite inequalities --seed 11 --trials 40");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  // a different seed perturbs at least one residual
  const RunResult c = run("verify --suite inequalities --seed 12 --trials 40");
  CHECK(c.exit_code == 0);
}

TEST_CASE("csv format") {
  const RunResult r = run("verify --suite algebra --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("name,status,residual,note\n", 0) == 0);
  const RunResult s = run("sphere --n 3 --m 1 --c 1 --format csv");
  CHECK(s.exit_code == 0);
  CHECK(s.out.rfind("q,lambda_exact,lambda_coexact,lambda_first\n", 0) == 0);
  // header plus one row per degree 0..n
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 5);
}

TEST_CASE("tolerance override") {
  CHECK(run("verify --suite algebra", "HODGEBOUND_TOL=1e-6").exit_code == 0);
  CHECK(run("verify --suite algebra", "HODGEBOUND_TOL=abc").exit_code == 2);
  CHECK(run("verify --suite algebra", "HODGEBOUND_TOL=-1").exit_code == 2);
  CHECK(run("verify --suite algebra", "HODGEBOUND_TOL=0").exit_code == 2);
  // an absurdly tight tolerance turns benign rounding into failures
  CHECK(run("clifford --n 5 --p 2 --mu 0.7", "HODGEBOUND_TOL=1e-300").exit_code == 1);
}

TEST_CASE("clifford subcommand") {
  const RunResult r = run("clifford --n 4 --p 2 --mu 1 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("n,p,mu,H,B2,Bring2,gamma_p,beta_p,thm11,alpha,ric_min,ejiri,"
                    "equality_regime,critical_ratio,residual,status\n",
                    0) == 0);
  CHECK(r.out.find("4,2,1,0,4,4,-1,-1,0,4,2,2,1,1,") != std::string::npos);

  CHECK(run("clifford --n 4 --p 2 --mu 0").exit_code == 2);
  CHECK(run("clifford --n 4 --p 2").exit_code == 2);
  CHECK(run("clifford --n 4 --p 2 --sweep nonsense").exit_code == 2);
  CHECK(run("clifford --n 4 --p 2 --sweep 2:1:5").exit_code == 2);

  // a sweep across the critical ratio appends the flagged row
  const RunResult sweep = run("clifford --n 5 --p 2 --sweep 0.5:1:3");
  REQUIRE(sweep.exit_code == 0);
  const Json doc = Json::parse(sweep.out);
  REQUIRE(doc.at("records").size() == 4);
  int critical_rows = 0;
  for (const auto& rec : doc.at("records"))
    for (const auto& [k, v] : rec.at("values").items())
      if (k == "critical_ratio" && v.get<double>() == 1.0) ++critical_rows;
  CHECK(critical_rows == 1);
}

TEST_CASE("bounds subcommand") {
  const std::string good = write_input("good.json", R"({
    "n": 4, "m": 1,
    "h": [[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]],
    "ambient": {"kind": "constant", "c": 1.0},
    "ric_min": 2.0
  })");
  const RunResult r = run("bounds --input \"" + good + "\" --p 2");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.out);
  bool saw_thm15 = false;
  for (const auto& rec : doc.at("records"))
    if (rec.at("name") == "thm15") {
      saw_thm15 = true;
      CHECK(rec.at("status") == "pass");
      CHECK(rec.at("values").at("value").get<double>() == doctest::Approx(0.0));
    }
  CHECK(saw_thm15);

  // without ric_min the ricci-based bound is not applicable
  const std::string no_ric = write_input("noric.json", R"({
    "n": 4, "m": 1,
    "h": [[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]]
  })");
  const RunResult r2 = run("bounds --input \"" + no_ric + "\" --p 2");
  REQUIRE(r2.exit_code == 0);
  const Json doc2 = Json::parse(r2.out);
  for (const auto& rec : doc2.at("records"))
    if (rec.at("name") == "thm15") CHECK(rec.at("status") == "not-applicable");

  const std::string bad = write_input("bad.json", "{ not json");
  CHECK(run("bounds --input \"" + bad + "\" --p 2").exit_code == 2);
  const std::string asym = write_input("asym.json", R"({
    "n": 2, "m": 1, "h": [[[0,1],[0,0]]]
  })");
  CHECK(run("bounds --input \"" + asym + "\" --p 1").exit_code == 2);
  CHECK(run("bounds --p 2").exit_code == 2);
}

TEST_CASE("sphere subcommand rejects nonpositive intrinsic curvature") {
  CHECK(run("sphere --n 4 --m 1 --c -1 --hnorm 0").exit_code == 2);
  CHECK(run("sphere --n 4 --m 1 --c -1 --hnorm 2").exit_code == 0);
}
