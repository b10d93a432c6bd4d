#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// ctest runs from the build directory, next to the pseudou binary
RunResult run(const std::string& args) {
  const char* bin = std::getenv("PSEUDOU_BIN");
  const std::string cmd =
      (bin ? std::string(bin) : "./pseudou") + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kBoost =
    R"({"form":{"m":1,"n":1},"matrix":{"dim":2,"entries":)"
    R"([[[1.25,0],[0.75,0]],[[0.75,0],[1.25,0]]]}})";

}  // namespace

TEST_CASE("table subcommands match the published values") {
  auto r = run("verlinde --g 3 --p 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"N\":98}\n");

  r = run("theta --p 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"theta\":3}\n");

  r = run("recurrence --p 5 --zeta 1 --mod 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"period\":24,\"zeros_mod_24\":[4,10,16,22]}\n");
}

TEST_CASE("signature emits the full record with exact integers") {
  const auto r = run("signature --g 2 --p 5 --zeta 1");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("N") == 5);
  CHECK(j.at("sigma") == 3);
  CHECK(j.at("h_plus") == 4);
  CHECK(j.at("zeta").at("order") == 10);
}

TEST_CASE("count-roots reports the counting data") {
  const auto r = run("count-roots --g 4 --p 31");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("lower_bound") == 6);
  CHECK(j.at("count").get<int>() >= 6);
  CHECK(j.at("meets_lower_bound") == true);
  CHECK(j.at("window_count").get<double>() <=
        j.at("window_bound").get<double>());
}

TEST_CASE("matrix subcommands round-trip through JSON") {
  std::ofstream("cli_input.json") << kBoost;
  auto r = run("dgw-phase --input cli_input.json");
  CHECK(r.exit_code == 0);
  // a real boost is hyperbolic: no unit-circle spectrum, phase 0
  CHECK(json::parse(r.out).at("phase").get<double>() ==
        doctest::Approx(0.0).epsilon(1e-12));

  r = run("canonical-form --input cli_input.json");
  CHECK(r.exit_code == 0);
  const json c = json::parse(r.out);
  CHECK(c.at("hyperbolic_pairs").size() == 1);
  CHECK(c.at("unit_entries").empty());
  CHECK(c.at("C").at("dim") == 2);

  r = run("commutators --input cli_input.json");
  CHECK(r.exit_code == 0);
  const json d = json::parse(r.out);
  CHECK(d.at("count").get<int>() <= 28);  // 14 (m+n)
  CHECK(d.at("residual").get<double>() < 1e-8);
  std::remove("cli_input.json");
}

TEST_CASE("burau takes a braid word and a unit parameter") {
  // q = exp(i pi / 4): |arg q| < 2 pi / 4, and q is not a k-th root of
  // unity for any k up to the strand count, so the form is nonsingular
  std::ofstream("cli_burau.json")
      << R"({"strands":4,"letters":[1,2,-1],)"
      << R"("q":[0.7071067811865476,0.7071067811865476]})";
  const auto r = run("burau --input cli_burau.json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("matrix").at("dim") == 3);
  CHECK(j.at("definite") == true);
  CHECK(j.at("unitarizable") == "definite-window");

  // at q = i the order equals the strand count: singular form
  std::ofstream("cli_burau.json")
      << R"({"strands":4,"letters":[1,2,-1],"q":[0,1]})";
  const auto s = run("burau --input cli_burau.json");
  CHECK(s.exit_code == 0);
  const json k = json::parse(s.out);
  CHECK(k.at("definite").is_null());
  CHECK(k.at("unitarizable") == "principal-root");
  std::remove("cli_burau.json");
}

TEST_CASE("input errors exit with code 2 and a position diagnostic") {
  std::ofstream("cli_bad.json") << "{bad";
  const auto r = run("dgw-phase --input cli_bad.json");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("parse error") != std::string::npos);
  CHECK(r.out.find("column") != std::string::npos);
  std::remove("cli_bad.json");

  CHECK(run("verlinde --g 3").exit_code == 2);       // missing flag
  CHECK(run("no-such-command").exit_code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = run("signature --g 5 --p 7 --zeta 3");
  const auto b = run("signature --g 5 --p 7 --zeta 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
