#include <sstream>

#include "cli.hpp"
#include "cubicsq/rational.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cubicsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

// Every string leaf that looks numeric must already be a canonical rational.
void check_canonical(const nlohmann::json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j) check_canonical(v);
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) {
      CHECK(cubicsq::Rat::parse(s).str() == s);
    }
  } else {
    CHECK_FALSE(j.is_number_float());
  }
}

}  // namespace

TEST_CASE("text output") {
  auto r = run({"curve-double", "-2", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "(129/100, -383/1000)\n");
  r = run({"curve-mul", "-2", "3", "3", "5"});
  CHECK(r.out == "(164323/29241, -66234835/5000211)\n");
  r = run({"curve-add", "-2", "3", "5", "3", "-5"});
  CHECK(r.out == "inf\n");
  r = run({"curve-add", "-2", "inf", "3", "5"});
  CHECK(r.out == "(3, 5)\n");
  r = run({"halve", "-4", "5", "11"});
  CHECK(r.out == "(2, -2)\n");
  r = run({"square-test", "4", "5", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("square: -1 + w + 1/2*w^2") == 0);
  r = run({"ext-poly", "113", "3", "97/4", "847/8"});
  CHECK(r.out == "x^6 - 291x^4 + 28227x^2 - 717409\n");
  r = run({"norm", "2", "5", "-1", "0"});
  CHECK(r.out == "norm = 123\ntrace = 15\n");
}

TEST_CASE("star command reproduces the worked example") {
  const auto r = run({"--json", "star", "2", "9/10", "-3/5", "-1/5", "-16641/7660", "1290/383", "1000/383"});
  REQUIRE(r.code == 0);
  const auto rec = records(r.out);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0]["terms"]["s3"] == "-28099233/66234835");
  CHECK(rec[0]["terms"]["t3"] == "-5000211/66234835");
  CHECK(rec[0]["terms"]["Sigma"] == "-6138414/733445");
}

TEST_CASE("structured output round-trips") {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "curve-mul", "-2", "3", "3", "5"},
      {"--json", "halve", "-4", "5", "11"},
      {"--json", "search", "-2", "--e-bound", "10", "--a-bound", "200"},
      {"--json", "from-point", "2", "1", "3", "5"},
      {"--json", "to-point", "2", "-9/10", "3/5", "1/5"},
      {"--json", "square-test", "20", "-19", "-7"},
      {"--json", "kappa", "113", "3", "97/4", "847/8"},
      {"--json", "table1"},
  };
  for (const auto& c : cmds) {
    INFO(c[1]);
    const auto r = run(c);
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
      const auto j = nlohmann::json::parse(line);
      CHECK(j.contains("command"));
      CHECK(j.dump() == line);
      check_canonical(j);
    }
  }
}

TEST_CASE("table1 text report") {
  const auto r = run({"table1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x^6 - 291x^4 + 28227x^2 - 717409") != std::string::npos);
  CHECK(r.out.find("25 rows, all pass") != std::string::npos);
  const auto bad = run({"table1", "--table", "/nonexistent.json"});
  CHECK(bad.code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"curve-add", "-2", "3"}).code == 2);
  CHECK(run({"curve-add", "-2", "3", "x", "3", "5"}).code == 2);
  CHECK(run({"curve-double", "-2", "3", "5", "7"}).code == 2);
  CHECK(run({"halve", "-4", "5", "11", "--bogus"}).code == 2);

  auto r = run({"curve-double", "-2", "3", "4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("InvalidPoint") != std::string::npos);
  r = run({"to-point", "2", "1", "1", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotBinomial") != std::string::npos);
  r = run({"ext-poly", "2", "1", "129/100", "383/1000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("AlphaIsSquare") != std::string::npos);
  r = run({"--effort", "1", "halve", "-2", "3", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("EffortExceeded") != std::string::npos);
  r = run({"norm", "8", "1", "0", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("InvalidField") != std::string::npos);
  CHECK(run({"curve-add", "0", "inf", "inf"}).code == 1);
}
