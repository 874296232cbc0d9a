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

#ifndef PGQ_SYMBOLS_HPP
#define PGQ_SYMBOLS_HPP

#include <cstdint>

#include "pgq/quantization.hpp"

namespace pgq {

// (theta|A|theta) in canonical form, single mode.
ParaPoly lower_symbol(const FockOperator& a);

// (lambda_bra theta| A |lambda_ket theta) evaluated by multiplying the bra
// components, matrix entries and ket components in the algebra.
ParaPoly coherent_pairing(const FockOperator& a, cplx bra_scale = 1.0,
                          cplx ket_scale = 1.0);

// The unique f with quantize(f) = a, single mode. Solved diagonal by
// diagonal (t - s fixed) by back-substitution on a triangular system whose
// coefficients come from quantizing each monomial.
ParaPoly upper_symbol(const FockOperator& a);

// f * g = upper_symbol(A_f A_g)
ParaPoly moyal_star(const ParaPoly& f, const ParaPoly& g);

// Identities satisfied by lower symbols, including a comparison of the
// closed form with coherent_pairing on `samples` random matrices.
VerificationReport verify_lower_symbols(const Deformation& def,
                                        double tol = kDefaultTolerance,
                                        std::uint64_t seed = 0,
                                        int samples = 20);

// Round trips upper_symbol(quantize(f)) = f and quantize(upper_symbol(A))
// = A, the hermitian pairing quantize(conj f) = quantize(f)^dagger and star
// associativity on `samples` seeded random inputs.
VerificationReport verify_symbols(const Deformation& def,
                                  double tol = kDefaultTolerance,
                                  std::uint64_t seed = 0, int samples = 100);

// k = 4 symbols of i sigma^1, -i sigma^2, i sigma^3 and the quaternion
// product law on `samples` random complex quaternion pairs.
VerificationReport quaternion_demo(double tol = kDefaultTolerance,
                                   std::uint64_t seed = 0, int samples = 100);

}  // namespace pgq

#endif
