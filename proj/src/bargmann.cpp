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

#include "pgq/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pgq/quantization.hpp"

namespace pgq {

ThetaPolynomial::ThetaPolynomial(ParaPoly p) : poly_(std::move(p)) {
  if (poly_.modes() != 1) {
    throw std::invalid_argument("ThetaPolynomial: single mode only");
  }
  for (const auto& [m, c] : poly_.terms()) {
    if (m.has_bar()) {
      throw std::invalid_argument("ThetaPolynomial: bar-theta content present");
    }
  }
}

std::vector<cplx> ThetaPolynomial::coefficients() const {
  std::vector<cplx> c(deformation().kprime());
  for (const auto& [m, v] : poly_.terms()) c[m.theta(0)] = v;
  return c;
}

ThetaPolynomial to_bargmann(std::span<const cplx> psi, const Deformation& def) {
  if (static_cast<int>(psi.size()) != def.kprime()) {
    throw std::invalid_argument("to_bargmann: vector length " +
                                std::to_string(psi.size()) + " != k' = " +
                                std::to_string(def.kprime()));
  }
  ParaPoly p(def, 1);
  for (int n = 0; n < def.kprime(); ++n) {
    p.add_term(Monomial::single(n, 0), psi[n] / std::sqrt(qfactorial(n, def)));
  }
  return ThetaPolynomial(std::move(p));
}

std::vector<cplx> from_bargmann(const ThetaPolynomial& p) {
  std::vector<cplx> psi = p.coefficients();
  for (int n = 0; n < static_cast<int>(psi.size()); ++n) {
    psi[n] *= std::sqrt(qfactorial(n, p.deformation()));
  }
  return psi;
}

ThetaPolynomial derivative(const ThetaPolynomial& p) {
  ParaPoly r(p.deformation(), 1);
  for (const auto& [m, c] : p.poly().terms()) {
    const int n = m.theta(0);
    if (n == 0) continue;
    r.add_term(Monomial::single(n - 1, 0), qnumber(n, p.deformation()) * c);
  }
  return ThetaPolynomial(std::move(r));
}

ThetaPolynomial multiply_theta(const ThetaPolynomial& p) {
  return ThetaPolynomial(
      multiply(ParaPoly::generator(p.deformation(), 1, {0, false}), p.poly()));
}

VerificationReport verify_bargmann(const Deformation& def, double tol,
                                   std::uint64_t seed, int samples) {
  VerificationReport report(tol);
  const int kp = def.kprime();
  const FockOperator a = quantize(ParaPoly::generator(def, 1, {0, false}));
  const FockOperator ad = quantize(ParaPoly::generator(def, 1, {0, true}));

  std::vector<Eigen::VectorXcd> vectors;
  for (int n = 0; n < kp; ++n) vectors.push_back(Eigen::VectorXcd::Unit(kp, n));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXcd v(kp);
    for (int n = 0; n < kp; ++n) v(n) = random_coefficient(rng);
    vectors.push_back(v);
  }
  auto as_span = [](const Eigen::VectorXcd& v) {
    return std::span<const cplx>(v.data(), static_cast<std::size_t>(v.size()));
  };
  double deriv = 0.0, mult = 0.0;
  for (const auto& v : vectors) {
    const ThetaPolynomial image = to_bargmann(as_span(v), def);
    const Eigen::VectorXcd av = a.matrix() * v;
    const Eigen::VectorXcd adv = ad.matrix() * v;
    deriv = std::max(deriv, max_abs_diff(to_bargmann(as_span(av), def).poly(),
                                         derivative(image).poly()));
    mult = std::max(mult, max_abs_diff(to_bargmann(as_span(adv), def).poly(),
                                       multiply_theta(image).poly()));
  }
  report.add("W A_th W^dagger = d_th (basis + " + std::to_string(samples) +
                 " random vectors)",
             deriv);
  report.add("W A_bth W^dagger = m_th (basis + " + std::to_string(samples) +
                 " random vectors)",
             mult);

  double nil = 0.0, qcomm = 0.0;
  for (int n = 0; n < kp; ++n) {
    ThetaPolynomial d(ParaPoly::monomial(def, Monomial::single(n, 0)));
    ThetaPolynomial m = d;
    for (int i = 0; i < kp; ++i) {
      d = derivative(d);
      m = multiply_theta(m);
    }
    nil = std::max({nil, max_abs_diff(d.poly(), ParaPoly(def, 1)),
                    max_abs_diff(m.poly(), ParaPoly(def, 1))});
    const ThetaPolynomial base(ParaPoly::monomial(def, Monomial::single(n, 0)));
    const ParaPoly lhs = derivative(multiply_theta(base)).poly() -
                        def.q() * multiply_theta(derivative(base)).poly();
    qcomm = std::max(qcomm, max_abs_diff(lhs, base.poly() * def.q_pow(-n)));
  }
  report.add("d_th^k' = m_th^k' = 0", nil);
  report.add("d_th m_th - q m_th d_th = q^-n on th^n", qcomm);
  return report;
}

}  // namespace pgq
