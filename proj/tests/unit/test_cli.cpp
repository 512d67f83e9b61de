#include "cli.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qgalois::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kNonConfluent = std::string(QGALOIS_DATA_DIR) + "/nonconfluent.pres";

}  // namespace

TEST_CASE("reduce", "[cli]") {
  CHECK(run({"reduce", "d*a", "--algebra", "slq2"}).out == "1 + q^-1*b*c\n");
  CHECK(run({"reduce", "a^3", "--algebra", "af"}).out == "1\n");
  CHECK(run({"reduce", "q + q^2"}).out == "-1\n");
  CHECK(run({"reduce", "(1+q)^3"}).out == "-1\n");
  CHECK(run({"reduce", "d", "--algebra", "af"}).out == "a^2 + q*a^2*b*c\n");
  CHECK(run({"reduce", "b*a (x) a^4", "--algebra", "hplus"}).out == "q^-1*a*b (x) a\n");
  const auto j = nlohmann::json::parse(run({"reduce", "c*a", "--algebra", "af", "--format", "json"}).out);
  CHECK(j["normal_form"] == "q^-1*a*c");
  CHECK(j["algebra"] == "af");
}

TEST_CASE("reduce with a presentation file", "[cli]") {
  const auto r = run({"reduce", "a*b*b", "--presentation", kNonConfluent});
  CHECK(r.code == 0);
  CHECK(r.out == "b\n");
}

TEST_CASE("usage and parse errors exit with 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"reduce", "a*"}).code == 2);
  CHECK(run({"reduce", "x", "--algebra", "af"}).code == 2);
  CHECK(run({"reduce", "a", "--algebra", "nope"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"emit-table", "nope"}).code == 2);
  CHECK(run({"emit-table", "cleaving", "--format", "xml"}).code == 2);
  CHECK(run({"emit-table", "structure-constants", "--algebra", "slq2"}).code == 2);
  CHECK(run({"qbinom", "2", "3"}).code == 2);
  CHECK(run({"qbinom", "two", "1"}).code == 2);
  CHECK(run({"check-confluence", "--presentation", "/nonexistent.pres"}).code == 2);
  const auto r = run({"reduce", "a + (b", "--algebra", "af"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("qbinom", "[cli]") {
  CHECK(run({"qbinom", "4", "2"}).out == "1 + q + 2*q^2 + q^3 + q^4\nat q = w: 0\n");
  const auto j = nlohmann::json::parse(run({"qbinom", "6", "3", "--format", "json"}).out);
  CHECK(j["at_omega"] == "2");
  CHECK(j["polynomial"] == "1 + q + 2*q^2 + 3*q^3 + 3*q^4 + 3*q^5 + 3*q^6 + 2*q^7 + q^8 + q^9");
}

TEST_CASE("check-confluence", "[cli]") {
  const auto ok = run({"check-confluence", "--algebra", "slq2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("slq2: confluent") == 0);
  const auto bad = run({"check-confluence", "--presentation", kNonConfluent, "--format", "json"});
  CHECK(bad.code == 1);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j[0]["confluent"] == false);
  CHECK(j[0]["failures"][0]["overlap"] == "a*b*a");
  CHECK(run({"check-confluence"}).code == 0);
}

TEST_CASE("verify", "[cli]") {
  const auto r = run({"verify", "cocycle-table", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "cocycle-table");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() > 3);
  for (const auto& c : j["checks"]) CHECK(c.contains("reference"));
  const auto text = run({"verify", "integrals"});
  CHECK(text.code == 0);
  CHECK(text.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "properties", "--seed", "99"}).code == 0);
  CHECK(run({"verify", "splitting", "--bound", "3"}).code == 0);
}

TEST_CASE("emit-table json", "[cli]") {
  const auto cocycle = nlohmann::json::parse(run({"emit-table", "cocycle", "--format", "json"}).out);
  CHECK(cocycle["table"] == "cocycle");
  CHECK(cocycle["entries"].size() == 20);
  CHECK(cocycle.contains("default"));
  CHECK(cocycle.contains("basis_convention"));
  CHECK(cocycle["entries"][0]["args"] == nlohmann::json::array({"a", "a"}));
  CHECK(cocycle["entries"][0]["value"] == "a^3");

  const auto corep = nlohmann::json::parse(run({"emit-table", "corep"}).out);
  CHECK(corep["entries"].size() == 81);
  const auto n2 = nlohmann::json::parse(run({"emit-table", "corep", "--sub", "N2"}).out);
  CHECK(n2["table"] == "corep-n2");
  CHECK(n2["entries"].size() == 9);
  CHECK(run({"emit-table", "corep", "--sub", "N3"}).code == 2);

  const auto sc = nlohmann::json::parse(run({"emit-table", "structure-constants", "--algebra", "af"}).out);
  CHECK(sc["entries"].size() == 27 * 27 + 3 * 27);
  const auto integ = nlohmann::json::parse(run({"emit-table", "integrals"}).out);
  CHECK(integ["entries"].size() == 4);
  CHECK(integ["entries"][2]["value"] == "b^2*c^2 + a*b^2*c^2 + a^2*b^2*c^2");
}

TEST_CASE("emit-table tex", "[cli]") {
  const std::string t = run({"emit-table", "cleaving", "--format", "tex"}).out;
  CHECK(t.find("\\Phi(\\tilde{a}^{2}) &= a^{-1}") != std::string::npos);
  CHECK(t.find("\\Phi(\\tilde{b}^{2}) &= a^{-3} b^{2}") != std::string::npos);
  const std::string c = run({"emit-table", "cocycle", "--format", "tex"}).out;
  CHECK(c.find("\\sigma(\\tilde{b} \\otimes \\tilde{a} \\tilde{b}^{2}) &= q^{2} a^{-3} b^{3}") != std::string::npos);
  const std::string l = run({"emit-table", "lambda", "--format", "tex"}).out;
  CHECK(l.find("\\lambda(\\tilde{b}^{2}) &= \\tilde{b}^{2} \\otimes a^{-6}") != std::string::npos);
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const char* table : {"cocycle", "corep", "integrals"})
    CHECK(run({"emit-table", table, "--format", "tex"}).out == run({"emit-table", table, "--format", "tex"}).out);
  CHECK(run({"verify", "properties", "--format", "json"}).out == run({"verify", "properties", "--format", "json"}).out);
}
