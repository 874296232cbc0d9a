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

#ifndef PGQ_BARGMANN_HPP
#define PGQ_BARGMANN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pgq/pgalgebra.hpp"
#include "pgq/report.hpp"

namespace pgq {

// Single-mode ParaPoly with no bar-theta content.
class ThetaPolynomial {
 public:
  explicit ThetaPolynomial(ParaPoly p);

  const ParaPoly& poly() const { return poly_; }
  const Deformation& deformation() const { return poly_.deformation(); }
  // Coefficient of theta^n, n = 0..k'-1.
  std::vector<cplx> coefficients() const;

 private:
  ParaPoly poly_;
};

// psi -> sum psi_n theta^n / sqrt([n]_q!)
ThetaPolynomial to_bargmann(std::span<const cplx> psi, const Deformation& def);
// Inverse of to_bargmann.
std::vector<cplx> from_bargmann(const ThetaPolynomial& p);

// theta^n -> [n]_q theta^{n-1}
ThetaPolynomial derivative(const ThetaPolynomial& p);
// theta^n -> theta^{n+1}, truncated at theta^{k'}
ThetaPolynomial multiply_theta(const ThetaPolynomial& p);

// Intertwining of A_theta, A_bartheta with the derivative and
// multiplication, nilpotency and the transported q-commutator.
VerificationReport verify_bargmann(const Deformation& def,
                                   double tol = kDefaultTolerance,
                                   std::uint64_t seed = 0, int samples = 20);

}  // namespace pgq

#endif
