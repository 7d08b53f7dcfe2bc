#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = gammoid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

const std::string kData = GAMMOID_DATA_DIR;

}  // namespace

TEST_CASE("link on fan(3)") {
  const Run r = run({"link", "--family", "fan", "--depth", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("value 3", 0) == 0);
  CHECK(run_json({"link", "--family", "fan", "--depth", "3"})["value"] == 3);
}

TEST_CASE("exact set on two_strand") {
  const Run r = run({"exact", "--graph", kData + "/two_strand.g", "--set", "a1,x1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exact, order 1, hull {a1,x1}") != std::string::npos);
  const auto j = run_json({"exact", "--graph", kData + "/two_strand.g", "--set", "a1,x1"});
  CHECK(j["exact"] == true);
  CHECK(j["order"] == 1);
  CHECK(j["hull"] == nlohmann::json::array({"a1", "x1"}));
}

TEST_CASE("detect-ac on grid3Z") {
  const Run r = run({"detect-ac", "--family", "grid3Z", "--depth", "12", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("found") != std::string::npos);
  CHECK(r.out.find("across") != std::string::npos);
  const auto none = run_json({"detect-ac", "--family", "fan", "--depth", "5", "--k", "1"});
  CHECK(none["status"] == "none");
}

TEST_CASE("matroid and diagnose reports") {
  const auto m = run_json({"matroid", "--graph", kData + "/k4.g"});
  CHECK(m["rank"] == 4);
  CHECK(m["finitary"] == true);
  for (const auto& a : m["axioms"]) CHECK(a["holds"] == true);
  const auto d = run_json({"diagnose", "--family", "fans", "--depth", "8", "--depths", "2..8"});
  CHECK(d["verdict"] == "no");
  CHECK(d["depths"].size() == 7);
}

TEST_CASE("gen output parses back") {
  const auto g = run_json({"gen", "--family", "ac", "--depth", "2"});
  CHECK(g.dump() == nlohmann::json::parse(g.dump()).dump());
  const Run human = run({"gen", "--family", "ac", "--depth", "2"});
  CHECK(human.code == 0);
  CHECK_FALSE(human.out.empty());
}

TEST_CASE("construct prints steps and paths") {
  const auto c = run_json({"construct", "--family", "comb_steal", "--depth", "4"});
  CHECK(c.contains("steps"));
  CHECK(c.contains("paths"));
  CHECK(c["violations"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"link"}).code == 2);
  CHECK(run({"link", "--family", "fan"}).code == 2);
  CHECK(run({"link", "--family", "petersen", "--depth", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run missing = run({"link", "--graph", "/nonexistent.g"});
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"detect-ac", "--family", "ac", "--depth", "2", "--k", "0"}).code == 2);
  CHECK(run({"exact", "--graph", kData + "/two_strand.g", "--set", "zz"}).code == 1);
}
