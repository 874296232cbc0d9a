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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pgq/qnum.hpp"

using pgq::cplx;
using pgq::Deformation;

namespace {

bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("deformation parameters") {
  const Deformation d4 = pgq::new_deformation(4);
  CHECK(d4.kprime() == 2);
  CHECK(near(d4.q(), cplx(0, 1)));
  CHECK(near(d4.qk(), cplx(-1, 0)));

  const Deformation d8(8);
  CHECK(d8.kprime() == 4);
  CHECK(near(d8.q(), std::polar(1.0, std::numbers::pi / 4)));
  CHECK(near(d8.qk(), cplx(0, 1)));
}

TEST_CASE("odd and degenerate k are rejected") {
  CHECK_THROWS_WITH_AS(pgq::new_deformation(5), doctest::Contains("odd k unsupported"),
                       std::invalid_argument);
  CHECK_THROWS_AS(Deformation(7), std::invalid_argument);
  CHECK_THROWS_AS(Deformation(2), std::invalid_argument);
  CHECK_THROWS_AS(Deformation(0), std::invalid_argument);
  CHECK_THROWS_AS(Deformation(-4), std::invalid_argument);
}

TEST_CASE("integer powers of q reduce correctly") {
  for (int k = 4; k <= 16; k += 2) {
    const Deformation d(k);
    for (long e = -3 * k; e <= 3 * k; ++e) {
      CHECK(near(d.q_pow(e), std::pow(d.q(), static_cast<double>(e)), 1e-12));
      CHECK(near(d.qk_pow(e), std::polar(1.0, 4.0 * std::numbers::pi * e / k), 1e-12));
      CHECK(near(d.q_half_pow(e), std::polar(1.0, std::numbers::pi * e / k), 1e-12));
    }
    CHECK(near(d.q_half_pow(2) , d.q()));
    CHECK(near(d.q_pow(k), 1.0));
    CHECK(near(d.qk_pow(d.kprime()), 1.0));
  }
}

TEST_CASE("q-numbers") {
  for (int k = 4; k <= 20; k += 2) {
    const Deformation d(k);
    CHECK(pgq::qnumber(0, d) == 0.0);
    CHECK(pgq::qnumber(1, d) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(pgq::qnumber(2, Deformation(8)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(pgq::qnumber(2, Deformation(4)) == 0.0);
  CHECK_THROWS_AS(pgq::qnumber(-1, Deformation(8)), std::out_of_range);
  CHECK_THROWS_AS(pgq::qnumber(9, Deformation(8)), std::out_of_range);
}

TEST_CASE("q-number reflection, zero at k' and positivity") {
  for (int k = 4; k <= 24; k += 2) {
    const Deformation d(k);
    const int kp = d.kprime();
    CHECK(pgq::qnumber(kp, d) == 0.0);
    CHECK(pgq::qnumber(k, d) == 0.0);
    for (int n = 0; n <= kp; ++n) {
      CHECK(pgq::qnumber(kp - n, d) == doctest::Approx(pgq::qnumber(n, d)).epsilon(1e-12));
      const double direct = std::sin(2 * std::numbers::pi * n / k) /
                            std::sin(2 * std::numbers::pi / k);
      CHECK(pgq::qnumber(n, d) == doctest::Approx(direct).epsilon(1e-13));
    }
    for (int n = 1; n < kp; ++n) CHECK(pgq::qnumber(n, d) > 0.0);
  }
}

TEST_CASE("q-factorials") {
  CHECK(pgq::qfactorial(0, Deformation(8)) == 1.0);
  CHECK(pgq::qfactorial(3, Deformation(8)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(pgq::qfactorial(2, Deformation(6)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pgq::qfactorial(2, Deformation(4)) == 0.0);
  CHECK_THROWS_AS(pgq::qfactorial(5, Deformation(8)), std::out_of_range);
  for (int k = 4; k <= 24; k += 2) {
    const Deformation d(k);
    double acc = 1.0;
    for (int n = 1; n < d.kprime(); ++n) {
      acc *= pgq::qnumber(n, d);
      CHECK(pgq::qfactorial(n, d) == doctest::Approx(acc).epsilon(1e-13));
      CHECK(pgq::qfactorial(n, d) > 0.0);
    }
  }
}
