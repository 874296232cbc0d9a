// Copyright 2026 The pgquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pgq/cli.hpp"
#include "pgq/expression.hpp"
#include "pgq/serialize.hpp"

using namespace pgq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("parse trees") {
  {
    const Expression e = parse("th*bth", 1);
    REQUIRE(e.kind == Expression::Kind::Product);
    REQUIRE(e.children.size() == 2);
    CHECK(e.children[0].gen == Generator{0, false});
    CHECK(e.children[1].gen == Generator{0, true});
  }
  {
    const Expression e = parse("(1+2i)*th1^2*bth2", 2);
    REQUIRE(e.kind == Expression::Kind::Product);
    REQUIRE(e.children.size() == 3);
    CHECK(e.children[1].kind == Expression::Kind::Power);
    CHECK(e.children[1].exponent == 2);
    CHECK(e.children[2].gen == Generator{1, true});
  }
  CHECK(parse("-th^2", 1).kind == Expression::Kind::Negate);
}

TEST_CASE("evaluation") {
  const Deformation d4(4), d6(6);
  CHECK(max_abs_diff(parse_poly("th*bth", d4, 1), ParaPoly::monomial(d4, Monomial::single(1, 1))) ==
        0.0);
  for (int k : {4, 6, 8}) {
    const Deformation d(k);
    CHECK(max_abs_diff(parse_poly("bth*th", d, 1),
                       ParaPoly::monomial(d, Monomial::single(1, 1), std::conj(d.qk()))) < 1e-15);
  }
  CHECK(max_abs_diff(parse_poly("(1+2i)*th1^2*bth2", d6, 2),
                     ParaPoly::monomial(d6, Monomial({2, 0}, {0, 1}), cplx(1, 2))) < 1e-15);
  CHECK(max_abs_diff(parse_poly("-th^2 + 3", d6, 1),
                     ParaPoly::constant(d6, 1, 3.0) -
                         ParaPoly::monomial(d6, Monomial::single(2, 0))) == 0.0);
  CHECK(parse_poly("th^2", d4, 1).is_zero());
  CHECK(max_abs_diff(parse_poly("th^0", d4, 1), ParaPoly::constant(d4, 1, 1.0)) == 0.0);
  CHECK(max_abs_diff(parse_poly("i*i", d4, 1), ParaPoly::constant(d4, 1, -1.0)) == 0.0);
  CHECK(max_abs_diff(parse_poly("0.5e1 - 2.5i", d4, 1), ParaPoly::constant(d4, 1, cplx(5, -2.5))) ==
        0.0);
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& text, int modes) -> long {
    try {
      parse(text, modes);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("th*", 1) == 3);
  CHECK(offset_of("th + ) ", 1) == 5);
  CHECK(offset_of("th1*bth3", 2) == 4);
  CHECK(offset_of("th", 2) == 0);
  CHECK(offset_of("(th", 1) == 3);
  CHECK(offset_of("th^x", 1) == 3);
  CHECK(offset_of("th $", 1) == 3);
  CHECK(offset_of("th^99999", 1) == 8);
  CHECK_THROWS_WITH(parse("th*", 1), doctest::Contains("at byte 3"));
  CHECK(offset_of("th1*bth2", 2) == -1);
}

TEST_CASE("printing round trips") {
  std::mt19937_64 rng(51);
  for (int k : {4, 6, 8}) {
    const Deformation d(k);
    for (int modes = 1; modes <= 2; ++modes) {
      for (int trial = 0; trial < 10; ++trial) {
        const ParaPoly p = random_parapoly(d, modes, rng);
        const std::string text = to_expression(p);
        CHECK(max_abs_diff(parse_poly(text, d, modes), p) < 1e-15);
      }
    }
    CHECK(to_expression(ParaPoly(d, 1)) == "0");
  }
}

TEST_CASE("command line: verify") {
  const Result r = run({"verify", "--k", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--k", "6", "--d", "2"}).code == cli::kExitOk);
  const Result j = run({"--format", "json", "verify", "--k", "8"});
  CHECK(j.code == cli::kExitOk);
  const Json report = Json::parse(j.out);
  CHECK(report["tolerance"] == 1e-10);
  CHECK(report["relations"].size() > 20);
  for (const auto& rel : report["relations"]) CHECK(rel["pass"] == true);
  // A zero tolerance cannot absorb rounding error.
  CHECK(run({"verify", "--k", "8", "--tolerance", "0"}).code == cli::kExitFailed);
}

TEST_CASE("command line: quantize and matrix") {
  const Result r = run({"quantize", "--k", "4", "--expr", "th"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["k"] == 4);
  CHECK(j["dim"] == 2);
  CHECK(j["rows"][0][1]["re"] == 1.0);
  CHECK(j["rows"][0][0]["re"] == 0.0);
  CHECK(j["rows"][1][0]["re"] == 0.0);
  const Json m = Json::parse(run({"matrix", "--k", "4", "--op", "theta"}).out);
  CHECK(m == j);
  const Result right = run({"quantize", "--k", "8", "--expr", "th", "--ordering", "right"});
  CHECK(right.code == cli::kExitOk);
  const FockOperator a = fock_operator_from_json(Json::parse(right.out));
  CHECK(std::abs(a(0, 1) - cplx(-1, 0)) < 1e-15);
  const Result pretty = run({"--format", "pretty", "matrix", "--k", "6", "--op", "Q"});
  CHECK(pretty.code == cli::kExitOk);
  CHECK(pretty.out.find("dim=3") != std::string::npos);
  for (const char* op : {"theta", "bartheta", "Q", "Qbar"}) {
    CHECK(run({"matrix", "--k", "4", "--d", "2", "--op", op, "--mode", "2"}).code == cli::kExitOk);
  }
  CHECK(run({"matrix", "--k", "8", "--op", "B"}).code == cli::kExitOk);
  CHECK(run({"matrix", "--k", "8", "--op", "Bdag"}).code == cli::kExitOk);
  const Json b2 = Json::parse(run({"quantize", "--k", "4", "--d", "2", "--expr", "th1*th2"}).out);
  CHECK(b2["dim"] == 4);
  CHECK(b2["rows"][0][3]["re"] == 1.0);
}

TEST_CASE("command line: symbols") {
  const Result r = run({"star", "--k", "4", "--lhs", "i*th + i*bth", "--rhs", "i*th + i*bth"});
  REQUIRE(r.code == cli::kExitOk);
  const ParaPoly p = parapoly_from_json(Json::parse(r.out));
  CHECK(max_abs_diff(p, ParaPoly::constant(Deformation(4), 1, -1.0)) < 1e-15);

  const std::string file = temp_file(
      "pgq_cli_matrix.json",
      R"({"k": 4, "d": 1, "dim": 2, "rows": [[{"re": 1, "im": 0}, {"re": 0, "im": 0}],)"
      R"( [{"re": 0, "im": 0}, {"re": 0, "im": 0}]]})");
  const Result deq = run({"dequantize", "--k", "4", "--matrix", file});
  REQUIRE(deq.code == cli::kExitOk);
  CHECK(max_abs_diff(parapoly_from_json(Json::parse(deq.out)),
                     ParaPoly::monomial(Deformation(4), Monomial::single(1, 1))) < 1e-15);
  const Result low = run({"lower-symbol", "--k", "4", "--matrix", file});
  REQUIRE(low.code == cli::kExitOk);
  CHECK(max_abs_diff(parapoly_from_json(Json::parse(low.out)),
                     ParaPoly::constant(Deformation(4), 1, 1.0)) < 1e-15);
  CHECK(run({"dequantize", "--k", "6", "--matrix", file}).code == cli::kExitUsage);
  const std::string two_mode = temp_file(
      "pgq_cli_matrix2.json", to_json(FockOperator::identity(Deformation(4), 2)).dump());
  CHECK(run({"dequantize", "--k", "4", "--matrix", two_mode}).code == cli::kExitUsage);
}

TEST_CASE("command line: demo") {
  const Result r = run({"demo", "quaternion"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("I*I = -1: pass") != std::string::npos);
}

TEST_CASE("command line: errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  const Result odd = run({"verify", "--k", "5"});
  CHECK(odd.code == cli::kExitUsage);
  CHECK(odd.err.find("odd k unsupported") != std::string::npos);
  const Result bad = run({"quantize", "--k", "4", "--expr", "th*"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("at byte 3") != std::string::npos);
  CHECK(run({"quantize", "--k", "4", "--expr", "th", "--ordering", "weyl"}).code == cli::kExitUsage);
  CHECK(run({"matrix", "--k", "4", "--op", "theta", "--mode", "2"}).code == cli::kExitUsage);
  CHECK(run({"matrix", "--k", "4", "--d", "2", "--op", "B"}).code == cli::kExitUsage);
  CHECK(run({"dequantize", "--k", "4", "--matrix", "/nonexistent/file.json"}).code ==
        cli::kExitUsage);
  CHECK(run({"demo", "octonion"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
