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

#ifndef PGQ_QNUM_HPP
#define PGQ_QNUM_HPP

#include <complex>
#include <stdexcept>

namespace pgq {

using cplx = std::complex<double>;

constexpr double kDefaultTolerance = 1e-10;

// Parameters of the root-of-unity deformation. Only even k >= 4 is
// supported: q = exp(2 pi i / k) and the algebra phase is q_k = q^2, a
// primitive (k/2)-th root of unity that matches the nilpotency order k/2.
class Deformation {
 public:
  explicit Deformation(int k);

  int k() const { return k_; }
  int kprime() const { return kprime_; }
  cplx q() const { return q_; }
  cplx qk() const { return qk_; }

  // q^e for any integer e, reduced mod k before exponentiation.
  cplx q_pow(long e) const;
  // q_k^e, reduced mod k'.
  cplx qk_pow(long e) const;
  // Principal value of q^{e/2} = exp(i pi e / k).
  cplx q_half_pow(long e) const;

  friend bool operator==(const Deformation& a, const Deformation& b) {
    return a.k_ == b.k_;
  }

 private:
  int k_;
  int kprime_;
  cplx q_;
  cplx qk_;
};

inline Deformation new_deformation(int k) { return Deformation(k); }

// Symmetric q-number [n]_q = sin(2 pi n / k) / sin(2 pi / k), 0 <= n <= k.
double qnumber(int n, const Deformation& d);

// [n]_q! = [1]_q ... [n]_q with [0]_q! = 1, 0 <= n <= k'.
double qfactorial(int n, const Deformation& d);

}  // namespace pgq

#endif
