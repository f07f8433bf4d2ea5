#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "satake/json_io.hpp"

using namespace satake;
using satake::json_io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " '" SATAKE_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& f) { return "'" SATAKE_DATA_DIR "/" + f + "'"; }

Laurent entry(const json& m, const Weight& r, const Weight& c) {
  auto cm = json_io::coeffmatrix_from_json(m);
  return cm.get(r, c);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("satake matrix for A1") {
  auto r = run("satake --preset A1 --max-height 4 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(entry(j["matrix"], Weight{2}, Weight{2}) == Laurent::q_pow(1));
  CHECK(entry(j["matrix"], Weight{2}, Weight{0}) == Laurent::q_pow(1) - Laurent(1));
  auto csv = run("satake --preset A1 --max-height 4 --format csv");
  CHECK(csv.out.rfind("row,col,value\n", 0) == 0);
}

TEST_CASE("matrix commands invert each other") {
  auto m = json_io::coeffmatrix_from_json(json::parse(run("weight-mult --preset B2 --max-height 6").out)["matrix"]);
  auto n = json_io::coeffmatrix_from_json(json::parse(run("invert-mult --preset B2 --max-height 6").out)["matrix"]);
  CHECK((m * n).is_identity());
  auto s = json_io::coeffmatrix_from_json(json::parse(run("satake --preset A2~2 --max-height 6").out)["matrix"]);
  auto t = json_io::coeffmatrix_from_json(json::parse(run("inverse-satake --preset A2~2 --max-height 6").out)["matrix"]);
  CHECK((t * s).is_identity());
}

TEST_CASE("character matches the library") {
  auto d = RootDatumTheta::preset("G2");
  auto r = run("character --preset G2 --max-height 8");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["characters"].size() == index_set(d, 8).size());
  for (const auto& c : j["characters"]) {
    Weight l = json_io::weight_from_json(c["lambda"]);
    CHECK(json_io::gaelement_from_json(c["tau"]) == tau(d, l));
  }
  auto one = json::parse(run("character --preset A2 --lambda 1,1").out);
  CHECK(json_io::gaelement_from_json(one["characters"][0]["tau"]).coeff(Weight{0, 0}) == Laurent(2));
  CHECK(run("character --preset A2 --lambda 1,-1").code == 1);
}

TEST_CASE("series cache does not change output") {
  auto dir = std::filesystem::temp_directory_path() / "satake_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::string env = "SATAKE_CACHE_DIR='" + dir.string() + "'";
  auto plain = run("character --preset B2 --max-height 8");
  auto cold = run("character --preset B2 --max-height 8", env);
  CHECK(!std::filesystem::is_empty(dir));
  auto warm = run("character --preset B2 --max-height 8", env);
  CHECK(plain.out == cold.out);
  CHECK(plain.out == warm.out);
  // a corrupt entry is recomputed
  for (const auto& e : std::filesystem::directory_iterator(dir)) std::ofstream(e.path()) << "{";
  CHECK(run("character --preset B2 --max-height 8", env).out == plain.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("validate-data") {
  auto r = run("validate-data --endo " + data("identity.json"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);
  CHECK(run("validate-data --catalog all --format csv").code == 0);
  CHECK(run("validate-data --endo " + data("broken_transfer.json")).code == 2);
  CHECK(run("validate-data --endo /nonexistent.json").code == 1);
}

TEST_CASE("base change row for A1 and its torus") {
  auto r = run("base-change --endo " + data("a1_torus.json") + " --max-height 4");
  REQUIRE(r.code == 0);
  json m = json::parse(r.out)["matrix"];
  Laurent q = Laurent::q_pow(1);
  CHECK(entry(m, Weight{2}, Weight{2}) == q);
  CHECK(entry(m, Weight{2}, Weight{-2}) == q);
  CHECK(entry(m, Weight{2}, Weight{0}) == q - Laurent(1));
  auto b = json::parse(run("branch --catalog 'A2>A2' --max-height 4").out)["matrix"];
  CHECK(json_io::coeffmatrix_from_json(b).is_identity());
}

TEST_CASE("plancherel-check") {
  auto r = run("plancherel-check --preset A1 --q 9 --max 2");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  bool seen = false;
  for (const auto& p : j["pairs"])
    if (p["lambda"] == json::array({2}) && p["mu"] == json::array({2})) {
      CHECK(std::abs(p["value"][0].get<double>() - 90.0) < 1e-6);
      seen = true;
    }
  CHECK(seen);
  CHECK(run("plancherel-check --preset A1 --q 1 --max 2").code == 1);
}

TEST_CASE("l-function") {
  auto r = run("l-function --preset A1 --param 0");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(json_io::laurent_from_json(j["numerator"]) == Laurent(1));
  CHECK(run("l-function --preset A1 --param 1/2,0").code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("satake --preset Z9").code == 1);
  CHECK(run("satake --preset A1 --format xml").code == 1);
  CHECK(run("satake --preset A1 --datum x.json").code == 1);
}

TEST_CASE("custom datum file") {
  auto p = run("satake --datum " + data("a1_custom.json") + " --max-height 4");
  auto q = run("satake --preset A1 --max-height 4");
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["matrix"] == json::parse(q.out)["matrix"]);
}

}  // TEST_SUITE
