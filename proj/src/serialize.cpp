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

#include "pgq/serialize.hpp"

#include <stdexcept>
#include <string>

namespace pgq {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("invalid JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    schema_error(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) schema_error(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

cplx complex_from(const Json& j) {
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  if (!re.is_number() || !im.is_number()) schema_error("re/im must be numbers");
  return {re.get<double>(), im.get<double>()};
}

std::vector<int> powers_from(const Json& j, const char* key, int modes,
                             int kprime) {
  const Json& arr = field(j, key);
  if (!arr.is_array() || static_cast<int>(arr.size()) != modes) {
    schema_error(std::string("'") + key + "' must hold d = " +
                 std::to_string(modes) + " integers");
  }
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) schema_error("powers must be integers");
    const int p = v.get<int>();
    if (p < 0 || p >= kprime) {
      schema_error("power " + std::to_string(p) + " outside 0..k'-1");
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

Json to_json(const ParaPoly& p) {
  Json j;
  j["k"] = p.deformation().k();
  j["d"] = p.modes();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["theta"] = m.theta();
    t["bar"] = m.bar();
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ParaPoly parapoly_from_json(const Json& j) {
  const Deformation def(int_field(j, "k"));
  const int modes = int_field(j, "d");
  if (modes < 1) schema_error("'d' must be >= 1");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) schema_error("'terms' must be an array");
  ParaPoly p(def, modes);
  for (const auto& t : terms) {
    Monomial m(powers_from(t, "theta", modes, def.kprime()),
               powers_from(t, "bar", modes, def.kprime()));
    p.add_term(m, complex_from(t));
  }
  return p;
}

Json to_json(const FockOperator& a) {
  Json j;
  j["k"] = a.deformation().k();
  j["d"] = a.modes();
  j["dim"] = a.dim();
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.dim(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.dim(); ++c) {
      row.push_back(Json{{"re", a(r, c).real()}, {"im", a(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

FockOperator fock_operator_from_json(const Json& j) {
  const Deformation def(int_field(j, "k"));
  const int modes = int_field(j, "d");
  if (modes < 1) schema_error("'d' must be >= 1");
  const int dim = int_field(j, "dim");
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    schema_error("'rows' must hold dim rows");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      schema_error("row " + std::to_string(r) + " must hold dim entries");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from(row[c]);
  }
  return FockOperator(def, modes, std::move(m));
}

Json to_json(const VerificationReport& r) {
  Json j;
  Json rel = Json::array();
  for (const auto& x : r.relations()) {
    rel.push_back(Json{{"name", x.name}, {"residual", x.residual}, {"pass", x.pass}});
  }
  j["relations"] = std::move(rel);
  j["tolerance"] = r.tolerance();
  if (!r.notes().empty()) j["notes"] = r.notes();
  return j;
}

}  // namespace pgq
