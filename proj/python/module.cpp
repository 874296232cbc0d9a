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


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pgq/bargmann.hpp"
#include "pgq/expression.hpp"
#include "pgq/quantization.hpp"
#include "pgq/serialize.hpp"
#include "pgq/symbols.hpp"
#include "pgq/verify.hpp"

namespace py = pybind11;
using namespace pgq;

namespace {

FockOperator to_operator(const Eigen::MatrixXcd& m, int k, int modes) {
  return FockOperator(Deformation(k), modes, m);
}

py::dict report_dict(const VerificationReport& r) {
  py::list relations;
  for (const auto& rel : r.relations()) {
    py::dict d;
    d["name"] = rel.name;
    d["residual"] = rel.residual;
    d["pass"] = rel.pass;
    relations.append(d);
  }
  py::dict out;
  out["relations"] = relations;
  out["tolerance"] = r.tolerance();
  out["notes"] = r.notes();
  out["all_pass"] = r.all_pass();
  return out;
}

py::dict terms_dict(const ParaPoly& p) {
  py::dict d;
  for (const auto& [m, c] : p.terms()) {
    d[py::make_tuple(py::tuple(py::cast(m.theta())), py::tuple(py::cast(m.bar())))] = c;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherent-state quantization of paragrassmann algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Deformation>(m, "Deformation")
      .def(py::init<int>(), py::arg("k"))
      .def_property_readonly("k", &Deformation::k)
      .def_property_readonly("kprime", &Deformation::kprime)
      .def_property_readonly("q", &Deformation::q)
      .def_property_readonly("qk", &Deformation::qk)
      .def("__repr__", [](const Deformation& d) {
        return "Deformation(k=" + std::to_string(d.k()) + ")";
      });

  m.def("qnumber", [](int n, int k) { return qnumber(n, Deformation(k)); }, py::arg("n"),
        py::arg("k"));
  m.def("qfactorial", [](int n, int k) { return qfactorial(n, Deformation(k)); }, py::arg("n"),
        py::arg("k"));

  py::class_<ParaPoly>(m, "ParaPoly")
      .def_static("parse",
                  [](const std::string& text, int k, int modes) {
                    return parse_poly(text, Deformation(k), modes);
                  },
                  py::arg("text"), py::arg("k"), py::arg("modes") = 1)
      .def_static("from_json",
                  [](const std::string& text) { return parapoly_from_json(Json::parse(text)); })
      .def_property_readonly("k", [](const ParaPoly& p) { return p.deformation().k(); })
      .def_property_readonly("modes", &ParaPoly::modes)
      .def_property_readonly("terms", &terms_dict)
      .def("coeff",
           [](const ParaPoly& p, std::vector<int> theta, std::vector<int> bar) {
             return p.coeff(Monomial(std::move(theta), std::move(bar)));
           })
      .def("is_zero", &ParaPoly::is_zero)
      .def("conjugate", [](const ParaPoly& p) { return conjugate(p); })
      .def("berezin", [](const ParaPoly& p) { return berezin_full_integral(p); })
      .def("to_json", [](const ParaPoly& p) { return to_json(p).dump(); })
      .def("max_abs_diff", [](const ParaPoly& a, const ParaPoly& b) { return max_abs_diff(a, b); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self * cplx())
      .def(cplx() * py::self)
      .def("__str__", &to_expression)
      .def("__repr__", [](const ParaPoly& p) { return "ParaPoly(" + to_expression(p) + ")"; });

  m.def("weight", [](int k, int modes) { return weight(Deformation(k), modes); }, py::arg("k"),
        py::arg("modes") = 1);
  m.def("inner_product", &inner_product);

  m.def(
      "quantize",
      [](const ParaPoly& f, const std::string& ordering) {
        return quantize(f, parse_ordering(ordering)).matrix();
      },
      py::arg("f"), py::arg("ordering") = "antinormal");
  m.def(
      "ladder",
      [](int k, int modes, int mode) { return ladder(Deformation(k), modes, mode).matrix(); },
      py::arg("k"), py::arg("modes") = 1, py::arg("mode") = 0);
  m.def(
      "ladder_dag",
      [](int k, int modes, int mode) { return ladder_dag(Deformation(k), modes, mode).matrix(); },
      py::arg("k"), py::arg("modes") = 1, py::arg("mode") = 0);
  m.def(
      "q_power_N",
      [](int k, int sign, int modes, int mode) {
        return q_power_N(Deformation(k), modes, sign, mode).matrix();
      },
      py::arg("k"), py::arg("sign"), py::arg("modes") = 1, py::arg("mode") = 0);
  m.def("rescale_B", [](int k) {
    const auto [b, bd] = rescale_B(Deformation(k));
    return std::make_pair(b.matrix(), bd.matrix());
  });

  m.def(
      "upper_symbol",
      [](const Eigen::MatrixXcd& a, int k) { return upper_symbol(to_operator(a, k, 1)); },
      py::arg("matrix"), py::arg("k"));
  m.def(
      "lower_symbol",
      [](const Eigen::MatrixXcd& a, int k) { return lower_symbol(to_operator(a, k, 1)); },
      py::arg("matrix"), py::arg("k"));
  m.def("moyal_star", &moyal_star, py::arg("f"), py::arg("g"));

  m.def(
      "to_bargmann",
      [](const std::vector<cplx>& psi, int k) { return to_bargmann(psi, Deformation(k)).poly(); },
      py::arg("psi"), py::arg("k"));

  m.def(
      "verify",
      [](int k, int modes, double tol, std::uint64_t seed) {
        return report_dict(verify_all(Deformation(k), modes, tol, seed));
      },
      py::arg("k"), py::arg("modes") = 1, py::arg("tolerance") = kDefaultTolerance,
      py::arg("seed") = 0);
  m.def("quaternion_demo", [] { return report_dict(quaternion_demo()); });
}
