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


#include "pgq/verify.hpp"

#include <stdexcept>

#include "pgq/bargmann.hpp"
#include "pgq/quantization.hpp"
#include "pgq/symbols.hpp"

namespace pgq {

VerificationReport verify_all(const Deformation& def, int modes, double tol,
                              std::uint64_t seed) {
  if (modes < 1) throw std::invalid_argument("modes must be >= 1");
  VerificationReport report(tol);
  report.merge(verify_resolution(def, modes, tol));
  report.merge(verify_relations(def, modes, tol));
  if (modes == 1) {
    report.merge(check_kfermionic(def, tol));
    report.merge(verify_ordering_identities(def, tol));
    report.merge(verify_inner_product(def, tol, seed));
    report.merge(verify_lower_symbols(def, tol, seed));
    report.merge(verify_symbols(def, tol, seed));
    report.merge(verify_bargmann(def, tol, seed));
  }
  return report;
}

}  // namespace pgq
