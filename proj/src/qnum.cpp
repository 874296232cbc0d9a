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

#include "pgq/qnum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pgq {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Deformation::Deformation(int k) : k_(k), kprime_(k / 2) {
  if (k % 2 != 0) {
    throw std::invalid_argument("odd k unsupported (k = " +
                                std::to_string(k) + ")");
  }
  if (k < 4) {
    throw std::invalid_argument("k must be >= 4 (k = " + std::to_string(k) +
                                " gives a degenerate algebra)");
  }
  q_ = std::polar(1.0, 2.0 * std::numbers::pi / k_);
  qk_ = std::polar(1.0, 2.0 * std::numbers::pi / kprime_);
}

cplx Deformation::q_pow(long e) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * mod(e, k_) / k_);
}

cplx Deformation::qk_pow(long e) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * mod(e, kprime_) / kprime_);
}

cplx Deformation::q_half_pow(long e) const {
  // exp(i pi e / k) has period 2k in e
  return std::polar(1.0, std::numbers::pi * mod(e, 2L * k_) / k_);
}

double qnumber(int n, const Deformation& d) {
  if (n < 0 || n > d.k()) {
    throw std::out_of_range("qnumber: n = " + std::to_string(n) +
                            " outside [0, k]");
  }
  if (n == 0 || n == d.kprime() || n == d.k()) return 0.0;
  const double step = 2.0 * std::numbers::pi / d.k();
  return std::sin(step * n) / std::sin(step);
}

double qfactorial(int n, const Deformation& d) {
  if (n < 0 || n > d.kprime()) {
    throw std::out_of_range("qfactorial: n = " + std::to_string(n) +
                            " outside [0, k']");
  }
  double f = 1.0;
  for (int j = 1; j <= n; ++j) f *= qnumber(j, d);
  return f;
}

}  // namespace pgq
