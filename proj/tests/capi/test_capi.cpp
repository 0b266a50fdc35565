#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "cychom.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

std::string read_example(const std::string& name) {
  std::ifstream in(std::string(CYCHOM_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Session {
  cychom_session* s = nullptr;
  explicit Session(const char* cfg = nullptr) { REQUIRE(cychom_session_new(cfg, &s) == CYCHOM_OK); }
  ~Session() { cychom_session_free(s); }

  cychom_status run(const char* command, const Json& args, Json* report = nullptr) {
    char* out = nullptr;
    cychom_status st = cychom_run(s, command, args.dump().c_str(), &out);
    if (out && report) *report = Json::parse(out);
    cychom_string_free(out);
    return st;
  }
};

}  // namespace

TEST_CASE("version and session lifecycle") {
  CHECK(std::string(cychom_version()) == "0.1.0");
  Session a;
  Session b(R"({"field": {"Fp": 3}, "max_degree": 3, "seed": 5})");
  CHECK(std::string(cychom_last_error(a.s)).empty());
  cychom_session_free(nullptr);
  cychom_string_free(nullptr);
}

TEST_CASE("bad session configurations") {
  cychom_session* s = nullptr;
  CHECK(cychom_session_new(R"({"field": {"Fp": 4}})", &s) == CYCHOM_BAD_INPUT);
  CHECK(s == nullptr);
  CHECK(cychom_session_new("{not json", &s) == CYCHOM_BAD_INPUT);
  CHECK(cychom_session_new(nullptr, nullptr) == CYCHOM_BAD_INPUT);
}

TEST_CASE("homology of Q through the C API") {
  Session s;
  Json report;
  REQUIRE(s.run("homology", {{"input", read_example("q.json")}, {"mode", "full"}, {"D", 4}}, &report) == CYCHOM_OK);
  CHECK(report["status"] == "pass");
  CHECK(report["results"]["homology"] == Json({1, 0, 1, 0, 1}));
  CHECK(report["inputs-digest"].get<std::string>().size() == 64);
}

TEST_CASE("homology over F_2") {
  Session s(R"({"field": {"Fp": 2}})");
  Json report;
  REQUIRE(s.run("homology", {{"input", read_example("k2.json")}, {"mode", "full"}, {"D", 2}}, &report) == CYCHOM_OK);
  CHECK(report["results"]["homology"] == Json({2, 0, 2}));
}

TEST_CASE("malformed input reports a location") {
  Session s;
  Json bad = Json::parse(read_example("q.json"));
  bad["algebra"]["mult"][0][2] = 7;
  CHECK(s.run("check", {{"input", bad.dump()}}) == CYCHOM_BAD_INPUT);
  CHECK(std::string(cychom_last_error(s.s)).find("/algebra/mult/0/2") != std::string::npos);
  CHECK(s.run("check", {{"input", "{"}}) == CYCHOM_BAD_INPUT);
  CHECK(s.run("no-such-command", Json::object()) == CYCHOM_BAD_INPUT);
  char* out = nullptr;
  CHECK(cychom_run(s.s, "check", nullptr, &out) == CYCHOM_BAD_INPUT);
  CHECK(out == nullptr);
  CHECK(cychom_run(nullptr, "check", "{}", &out) == CYCHOM_BAD_INPUT);
}

TEST_CASE("failed axioms give CERT_FAILED with a report") {
  Session s;
  // x·x = 1 and 1 is not a unit for x: not associative-unital
  Json alg = {{"algebra",
               {{"dim", 2},
                {"mult", Json::array({Json::array({0, 0, 0, "1"}), Json::array({1, 1, 0, "1"}),
                                      Json::array({0, 1, 0, "1"})})},
                {"unit", Json::array({"1", "0"})}}}};
  Json report;
  REQUIRE(s.run("check", {{"input", alg.dump()}}, &report) == CYCHOM_CERT_FAILED);
  CHECK(report["status"] == "fail");
  bool some_failed = false;
  for (const auto& c : report["certificates"]) some_failed = some_failed || !c["pass"].get<bool>();
  CHECK(some_failed);
}

TEST_CASE("summaries") {
  Session s;
  char* report = nullptr;
  Json args = {{"input", read_example("q.json")}};
  REQUIRE(cychom_run(s.s, "check", args.dump().c_str(), &report) == CYCHOM_OK);
  char* text = nullptr;
  REQUIRE(cychom_summarize(report, &text) == CYCHOM_OK);
  CHECK(std::string(text).find("check") != std::string::npos);
  cychom_string_free(text);
  cychom_string_free(report);
  CHECK(cychom_summarize("][", &text) == CYCHOM_BAD_INPUT);
}
