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


#ifndef PGQ_VERIFY_HPP
#define PGQ_VERIFY_HPP

#include <cstdint>

#include "pgq/report.hpp"

namespace pgq {

class Deformation;

// Every check available for the given mode count. Single-mode runs add the
// k-fermionic, ordering, inner product, symbol and Bargmann suites.
VerificationReport verify_all(const Deformation& def, int modes,
                              double tol = kDefaultTolerance,
                              std::uint64_t seed = 0);

}  // namespace pgq

#endif
