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

#include "pgq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pgq/expression.hpp"
#include "pgq/serialize.hpp"
#include "pgq/symbols.hpp"
#include "pgq/verify.hpp"

namespace pgq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // Empty: JSON for data, text for reports.
  std::string format;
  std::uint64_t seed = 0;
  int k = 0;
  int d = 1;
  double tolerance = kDefaultTolerance;
  std::string expr;
  std::string ordering = "antinormal";
  std::string matrix_file;
  std::string lhs;
  std::string rhs;
  std::string op;
  int mode = 1;
  std::string demo;
};

std::string format_entry(cplx c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%10.6f%+10.6fi", c.real(), c.imag());
  return buf;
}

void print(const FockOperator& a, const Options& o, std::ostream& out) {
  if (o.format != "pretty") {
    out << to_json(a).dump(2) << "\n";
    return;
  }
  out << "k=" << a.deformation().k() << " d=" << a.modes() << " dim=" << a.dim()
      << "\n";
  for (Eigen::Index r = 0; r < a.dim(); ++r) {
    for (Eigen::Index c = 0; c < a.dim(); ++c) {
      out << (c ? "  " : "") << format_entry(a(r, c));
    }
    out << "\n";
  }
}

void print(const ParaPoly& p, const Options& o, std::ostream& out) {
  if (o.format != "pretty") {
    out << to_json(p).dump(2) << "\n";
  } else {
    out << to_expression(p) << "\n";
  }
}

int print(const VerificationReport& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << r.pretty();
  }
  return r.all_pass() ? kExitOk : kExitFailed;
}

Deformation deformation_of(const Options& o) {
  try {
    return Deformation(o.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ParaPoly parse_expression(const std::string& text, const Deformation& def,
                          int modes) {
  try {
    return parse_poly(text, def, modes);
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

FockOperator read_matrix(const Options& o, const Deformation& def) {
  std::ifstream in(o.matrix_file);
  if (!in) throw UsageError("cannot open matrix file '" + o.matrix_file + "'");
  FockOperator a(def, 1);
  try {
    a = fock_operator_from_json(Json::parse(in));
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad matrix file: ") + e.what());
  }
  if (a.deformation().k() != def.k()) {
    throw UsageError("matrix file has k = " + std::to_string(a.deformation().k()) +
                     " but --k " + std::to_string(def.k()) + " was given");
  }
  if (a.modes() != 1) throw UsageError("only single-mode matrices are supported");
  return a;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Deformation def = deformation_of(o);
  if (o.d < 1) throw UsageError("--d must be >= 1");
  const VerificationReport report = verify_all(def, o.d, o.tolerance, o.seed);
  return print(report, o, out);
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const Deformation def = deformation_of(o);
  if (o.d < 1) throw UsageError("--d must be >= 1");
  if (o.mode < 1 || o.mode > o.d) throw UsageError("--mode outside 1..d");
  const int mode = o.mode - 1;
  if ((o.op == "B" || o.op == "Bdag") && o.d != 1) {
    throw UsageError("B and Bdag are single-mode operators");
  }
  if (o.op == "theta") {
    print(ladder(def, o.d, mode), o, out);
  } else if (o.op == "bartheta") {
    print(ladder_dag(def, o.d, mode), o, out);
  } else if (o.op == "Q") {
    print(q_power_N(def, o.d, +1, mode), o, out);
  } else if (o.op == "Qbar") {
    print(q_power_N(def, o.d, -1, mode), o, out);
  } else if (o.op == "B") {
    print(rescale_B(def).first, o, out);
  } else {
    print(rescale_B(def).second, o, out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Coherent-state quantization of paragrassmann algebras", "pgquant"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Even root-of-unity order k >= 4")->required();
  };

  auto* verify = app.add_subcommand("verify", "Check every algebraic relation");
  add_k(verify);
  verify->add_option("--d", o.d, "Number of modes");
  verify->add_option("--tolerance", o.tolerance, "Residual tolerance");

  auto* quant = app.add_subcommand("quantize", "Quantize an expression");
  add_k(quant);
  quant->add_option("--d", o.d, "Number of modes");
  quant->add_option("--expr", o.expr, "Paragrassmann expression")->required();
  quant->add_option("--ordering", o.ordering, "Kernel ordering")
      ->check(CLI::IsMember({"antinormal", "left", "right"}));

  auto* deq = app.add_subcommand("dequantize", "Upper symbol of a matrix");
  add_k(deq);
  deq->add_option("--matrix", o.matrix_file, "Matrix JSON file")->required();

  auto* star = app.add_subcommand("star", "Moyal star product of two symbols");
  add_k(star);
  star->add_option("--lhs", o.lhs, "Left symbol")->required();
  star->add_option("--rhs", o.rhs, "Right symbol")->required();

  auto* lower = app.add_subcommand("lower-symbol", "Lower symbol of a matrix");
  add_k(lower);
  lower->add_option("--matrix", o.matrix_file, "Matrix JSON file")->required();

  auto* matrix = app.add_subcommand("matrix", "Closed-form operator matrices");
  add_k(matrix);
  matrix->add_option("--d", o.d, "Number of modes");
  matrix->add_option("--op", o.op, "Operator")
      ->required()
      ->check(CLI::IsMember({"theta", "bartheta", "Q", "Qbar", "B", "Bdag"}));
  matrix->add_option("--mode", o.mode, "1-based mode index");

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->add_option("name", o.demo, "Demo name")
      ->required()
      ->check(CLI::IsMember({"quaternion"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pgquant: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (demo->parsed()) return print(quaternion_demo(kDefaultTolerance, o.seed), o, out);
    const Deformation def = deformation_of(o);
    if (quant->parsed()) {
      if (o.d < 1) throw UsageError("--d must be >= 1");
      print(quantize(parse_expression(o.expr, def, o.d), parse_ordering(o.ordering)),
            o, out);
    } else if (deq->parsed()) {
      print(upper_symbol(read_matrix(o, def)), o, out);
    } else if (star->parsed()) {
      print(moyal_star(parse_expression(o.lhs, def, 1), parse_expression(o.rhs, def, 1)),
            o, out);
    } else if (lower->parsed()) {
      print(lower_symbol(read_matrix(o, def)), o, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "pgquant: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "pgquant: error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pgq::cli
