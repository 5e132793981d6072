#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qg/commands.hpp"
#include "qg/report.hpp"

using namespace qg;

namespace {

// Validator for the draft-07 keywords the report schema uses.
std::vector<std::string> validate(const Json &v, const Json &s, const std::string &path) {
  std::vector<std::string> errs;
  auto type_ok = [&](const std::string &t) {
    if (t == "object")
      return v.is_object();
    if (t == "array")
      return v.is_array();
    if (t == "string")
      return v.is_string();
    if (t == "integer")
      return v.is_number_integer();
    if (t == "number")
      return v.is_number();
    if (t == "boolean")
      return v.is_boolean();
    if (t == "null")
      return v.is_null();
    return false;
  };
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto &t : s["type"])
        ok = ok || type_ok(t.get<std::string>());
    } else {
      ok = type_ok(s["type"].get<std::string>());
    }
    if (!ok) {
      errs.push_back(path + ": wrong type");
      return errs;
    }
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto &e : s["enum"])
      found = found || e == v;
    if (!found)
      errs.push_back(path + ": not in enum");
  }
  if (s.contains("minLength") && v.is_string() &&
      v.get<std::string>().size() < s["minLength"].get<std::size_t>())
    errs.push_back(path + ": too short");
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
    errs.push_back(path + ": below minimum");
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto &k : s["required"])
        if (!v.contains(k.get<std::string>()))
          errs.push_back(path + ": missing " + k.get<std::string>());
    const Json props = s.value("properties", Json::object());
    for (const auto &[k, sub] : v.items()) {
      if (props.contains(k)) {
        auto e = validate(sub, props[k], path + "/" + k);
        errs.insert(errs.end(), e.begin(), e.end());
      } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
        errs.push_back(path + ": unexpected " + k);
      }
    }
  }
  if (v.is_array() && s.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto e = validate(v[i], s["items"], path + "/" + std::to_string(i));
      errs.insert(errs.end(), e.begin(), e.end());
    }
  return errs;
}

const Json &schema() {
  static const Json s = [] {
    std::ifstream in(std::string(QG_SOURCE_DIR) + "/docs/report.schema.json");
    REQUIRE(in.good());
    return Json::parse(in);
  }();
  return s;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect_code = 0) {
  Run r = run(args);
  INFO(r.err);
  CHECK(r.code == expect_code);
  return Json::parse(r.out);
}

} // namespace

TEST_CASE("verify examples") {
  Json j = run_json({"verify", "--alg", "s2q", "--lhs", "L L' + q^2 K^2", "--rhs", "1"});
  CHECK(j["command"] == "verify");
  CHECK(j["algebra"] == "s2q");
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["status"] == "holds");

  Json f = run_json({"verify", "--alg", "suq2", "--lhs", "a b", "--rhs", "b a"}, 1);
  CHECK(f["results"][0]["status"] == "fails");
  CHECK(f["results"][0]["witness"].is_string());
  CHECK_FALSE(f["results"][0]["witness"].get<std::string>().empty());
}

TEST_CASE("normalize") {
  Json j = run_json({"normalize", "--alg", "suq2", "--expr", "a d"});
  CHECK(j["data"]["normal_form"] == "1 + q b c");
  CHECK(j["convention"]["relation_source"] == "eq9");
  CHECK(j["convention"]["antipode_exponent_sign"] == 1);
}

TEST_CASE("dirac example") {
  Json j = run_json({"classical", "dirac", "--g", "diag(i,-i)", "--window", "0", "6.3"});
  auto ev = j["data"]["eigenvalues"];
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].get<double>() == doctest::Approx(1.5707963267948966));
  CHECK(ev[1].get<double>() == doctest::Approx(4.71238898038469));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--alg", "suq2", "--lhs", "a +", "--rhs", "1"}).code == 2);
  CHECK(run({"verify", "--alg", "nope", "--lhs", "a", "--rhs", "a"}).code == 2);
  CHECK(run({"normalize", "--alg", "suq2", "--expr", "a", "--q", "2"}).code == 2);
  CHECK(run({"classical", "log", "--g", "diag(1,2)"}).code == 2);
  Run r = run({"bogus"});
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("text output") {
  Run r = run({"verify", "--alg", "suq2", "--lhs", "b c", "--rhs", "c b", "--text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("reports validate against the schema") {
  const std::vector<std::vector<std::string>> commands = {
      {"normalize", "--alg", "mq:2", "--expr", "g12 g11"},
      {"verify", "--alg", "suq2", "--lhs", "a b", "--rhs", "b a"},
      {"hopf", "delta", "--alg", "suq2", "--expr", "a"},
      {"hopf", "epsilon", "--alg", "suq2", "--expr", "a d"},
      {"hopf", "antipode", "--alg", "mq:2", "--expr", "g11"},
      {"hopf", "axioms", "--alg", "mq:2", "--max-degree", "1"},
      {"detq", "--alg", "mq:3"},
      {"presets"},
      {"gerbe", "x"},
      {"gerbe", "projection"},
      {"gerbe", "xext"},
      {"gerbe", "loop"},
      {"gerbe", "resolvent", "--alg", "suq:2", "--cuts", "i"},
      {"gerbe", "transition", "--cuts", "1,i,-1"},
      {"classical", "log", "--g", "diag(i,-i)", "--cuts", "3.14159"},
      {"classical", "section", "--n", "3"},
      {"classical", "transition", "--n", "2"},
      {"classical", "cocycle", "--n", "3", "--samples", "5"},
      {"classical", "loop"},
      {"classical", "degree", "--grid", "32"},
      {"classical", "dirac", "--g", "diag(i,-i)", "--window", "0", "6.3"},
      {"classical", "match", "--g", "diag(i,-i)", "--cuts", "0.1,3.0"},
      {"selftest", "--only", "4"},
  };
  for (const auto &args : commands) {
    std::string line;
    for (const auto &a : args)
      line += a + " ";
    INFO(line);
    Run r = run(args);
    INFO(r.err);
    REQUIRE(r.code != 2);
    Json j = Json::parse(r.out);
    auto errs = validate(j, schema(), "");
    for (const auto &e : errs)
      INFO(e);
    CHECK(errs.empty());
  }
  // The validator rejects a malformed report.
  Json bad = run_json({"presets"});
  bad["results"].push_back({{"name", "x"}, {"status", "maybe"}, {"witness", nullptr}, {"value", nullptr}});
  bad["extra"] = 1;
  CHECK(validate(bad, schema(), "").size() == 2);
}

TEST_CASE("seeded output is reproducible") {
  std::vector<std::string> cmd = {"classical", "cocycle", "--n", "3", "--samples", "4", "--seed", "9"};
  Json a = run_json(cmd), b = run_json(cmd);
  a["timing_ms"] = 0;
  b["timing_ms"] = 0;
  CHECK(a.dump() == b.dump());
  cmd.back() = "10";
  Json c = run_json(cmd);
  c["timing_ms"] = 0;
  CHECK(c.dump() != a.dump());
}

TEST_CASE("binary exit codes") {
  const char *bin = std::getenv("QG_BIN");
  REQUIRE(bin != nullptr);
  auto status = [&](const std::string &args) {
    std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status("verify --alg s2q --lhs \"L L' + q^2 K^2\" --rhs 1") == 0);
  CHECK(status("verify --alg suq2 --lhs \"a b\" --rhs \"b a\"") == 1);
  CHECK(status("frobnicate") == 2);
}

TEST_CASE("selftest criteria selection") {
  Json j = run_json({"selftest", "--only", "1,4"});
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["name"].get<std::string>().rfind("criterion 1", 0) == 0);
  CHECK(j["results"][1]["name"].get<std::string>().rfind("criterion 4", 0) == 0);
}
