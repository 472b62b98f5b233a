#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "inducibility/commands.hpp"
#include "inducibility/serialize.hpp"

using namespace inducibility;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.status = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string fraction(const Json& v) { return v["num"].get<std::string>() + "/" + v["den"].get<std::string>(); }

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("tensor-chain density") {
  const Run r = run({"density", "--t", "4", "--quantum", "K4+A4", "tensor(M4, K4, K3, K3)"});
  REQUIRE(r.status == 0);
  const Json j = json_of(r);
  CHECK(j["command"] == "density");
  CHECK(j["t"] == 4);
  CHECK(fraction(j["values"][0]) == "11411/373248");
  CHECK(j["meta"]["version"].is_string());

  const Run direct = run({"--route", "direct", "density", "--t", "4", "--quantum", "K4+A4", "tensor(M4, K4, K3, K3)"});
  REQUIRE(direct.status == 0);
  CHECK(fraction(json_of(direct)["values"][0]) == "11411/373248");
}

TEST_CASE("limit of a tensor chain") {
  const Run r = run({"limit", "--t", "4", "--quantum", "P4", "--factors", "K4", "--nested", "tensor(K3,K3)"});
  REQUIRE(r.status == 0);
  CHECK(fraction(json_of(r)["values"][0]) == "1173/5824");
  const Run e1 = run({"limit", "--t", "4", "--quantum", "K4+A4", "--factors", "M4,K4", "--nested", "tensor(K3, K3)"});
  CHECK(fraction(json_of(e1)["values"][0]) == "1411/46592");
  const Run g18 = run({"limit", "--t", "4", "--quantum", "K4+A4", "--factors", "M4, K4, compose(tensor(K3,K3),K2)"});
  CHECK(fraction(json_of(g18)["values"][0]) == "3769/124416");
}

TEST_CASE("nested profile") {
  const Run r = run({"nested-profile", "--t", "4", "tensor(K3,K3)"});
  REQUIRE(r.status == 0);
  const Json j = json_of(r);
  const std::vector<std::string> basis{"K4", "A4", "T4", "S4", "M4", "C4", "Q4", "V4", "D4", "E4", "P4"};
  CHECK(j["basis"].get<std::vector<std::string>>() == basis);
  const std::vector<std::string> expected{"17/728", "17/728", "25/364", "25/364", "51/728", "51/728",
                                          "75/364", "75/364", "6/91",   "6/91",   "12/91"};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(fraction(j["values"][i]) == expected[i]);

  const Run m = run({"nested-profile", "--t", "4", "--matrix", "tensor(K3,K3)"});
  REQUIRE(m.status == 0);
  CHECK(json_of(m).contains("matrix"));
  CHECK(run({"nested-profile", "--t", "4", "loopK2"}).status == 2);
}

TEST_CASE("profile flavors") {
  const Json induced = json_of(run({"profile", "--t", "4", "--flavor", "induced", "C5"}));
  CHECK(induced["values"][10]["type"] == "P4");
  CHECK(fraction(induced["values"][10]) == "1/1");
  const Json rep = json_of(run({"profile", "--t", "4", "C5"}));
  CHECK(fraction(rep["values"][10]) == "24/125");
  const Json labeled = json_of(run({"profile", "--t", "3", "--flavor", "labeled", "K2"}));
  CHECK(labeled["values"].size() == 8);
  const Json spectral = json_of(run({"profile", "--t", "4", "--flavor", "spectral", "K4"}));
  CHECK(fraction(spectral["values"][0]) == "1/1");
  const Json approx = json_of(run({"--approx", "profile", "--t", "5", "union(loopK1:1, loopK1:alpha)"}));
  CHECK(approx["values"][0]["num"].is_null());
  CHECK(approx["values"][0]["approx"].is_number());
}

TEST_CASE("estimates report seeds and errors") {
  const Run r = run({"estimate", "--t", "4", "--samples", "20000", "--seed", "9", "C5"});
  REQUIRE(r.status == 0);
  const Json j = json_of(r);
  CHECK(j["meta"]["seed"] == 9);
  CHECK(j["values"][0]["stderr"].is_number());
  CHECK(run({"estimate", "--t", "4", "--samples", "20000", "--seed", "9", "C5"}).out == r.out);
  const Json six = json_of(run({"estimate", "--t", "6", "--samples", "1000", "--seed", "1", "loopK1"}));
  CHECK(six["values"][0]["approx"] == 1.0);
}

TEST_CASE("bounds, tables and conversion") {
  const Json b = json_of(run({"bounds", "--t", "4"}));
  std::vector<std::string> got;
  for (const auto& v : b["values"]) got.push_back(fraction(v));
  CHECK(std::find(got.begin(), got.end(), "6/31") != got.end());
  CHECK(std::find(got.begin(), got.end(), "4/9") != got.end());

  const Run t = run({"tables", "--which", "exoo4"});
  CHECK(t.status == 0);
  const Run table = run({"--format", "table", "tables", "--which", "headline"});
  CHECK(table.status == 0);
  CHECK(table.out.find("1411/46592") != std::string::npos);

  const Json enc = json_of(run({"convert", "--encode", "C5"}));
  CHECK(enc.dump().find("Dhc") != std::string::npos);
  const Run dec = run({"convert", "--graph6", "Dhc"});
  CHECK(dec.status == 0);
  CHECK(run({"convert"}).status == 2);
}

TEST_CASE("failing catalogue rows set exit status 1") {
  const auto dir = fresh_dir("induce_cli_catalog");
  std::filesystem::create_directories(dir);
  const auto path = dir / "rows.json";
  std::ofstream(path) << R"([{"id": "bad", "construction": "K2", "quantum": "C4", "t": 4, "expected": "1/3"}])";
  const Run r = run({"tables", "--catalog", path.string()});
  CHECK(r.status == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("errors exit with status 2 and a diagnostic") {
  const Run r = run({"profile", "--t", "4", "blowup(K3)"});
  CHECK(r.status == 2);
  CHECK(r.err.find("blowup expects 2 arguments, got 1") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"profile", "--t", "4", "paley(7)"}).status == 2);
  CHECK(run({"profile", "--t", "4", "union(loopK1:1, loopK1:alpha)"}).err.find("--approx") != std::string::npos);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"density", "--t", "4", "--quantum", "K3", "C5"}).status == 2);
  CHECK(run({"--budget", "10", "profile", "--t", "4", "C5"}).status == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"nested-profile", "--t", "4", "C5"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> tab{"--format", "table", "density", "--t", "4", "--quantum", "P4", "C5"};
  CHECK(run(tab).out == run(tab).out);
}

TEST_CASE("cache hits reproduce the output") {
  const auto dir = fresh_dir("induce_cli_cache");
  const std::vector<std::string> args{"--cache", dir.string(), "nested-profile", "--t", "4", "tensor(K3, K3)"};
  const Run first = run(args);
  REQUIRE(first.status == 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    CHECK(entry.path().extension() == ".json");
    std::ifstream in(entry.path());
    const Json stored = Json::parse(in);
    CHECK(stored["status"] == 0);
    CHECK(stored["output"] == first.out);
  }
  CHECK(files == 1);
  const Run second = run(args);
  CHECK(second.out == first.out);
  CHECK(second.status == first.status);
  // spacing differences canonicalize to the same key
  run({"--cache", dir.string(), "nested-profile", "--t", "4", "tensor(K3,K3)"});
  files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  CHECK(run({"nested-profile", "--t", "4", "tensor(K3, K3)"}).out == first.out);
  std::filesystem::remove_all(dir);
}
