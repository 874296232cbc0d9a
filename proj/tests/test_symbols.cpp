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
#include <random>

#include "oracles.hpp"
#include "pgq/symbols.hpp"

using namespace pgq;
using Eigen::MatrixXcd;

namespace {

const int kEvenK[] = {4, 6, 8, 10, 12};

ParaPoly mono(const Deformation& d, int s, int t, cplx c = 1.0) {
  return ParaPoly::monomial(d, Monomial::single(s, t), c);
}

FockOperator op2(cplx a00, cplx a01, cplx a10, cplx a11) {
  MatrixXcd m(2, 2);
  m << a00, a01, a10, a11;
  return FockOperator(Deformation(4), 1, m);
}

// (theta| A |theta) by multiplying the bra word, the entry and the ket word.
ParaPoly pairing_oracle(const FockOperator& a) {
  const Deformation& d = a.deformation();
  const int k = d.k();
  ParaPoly out(d, 1);
  for (int nb = 0; nb < d.kprime(); ++nb) {
    for (int n = 0; n < d.kprime(); ++n) {
      oracle::Word w;
      oracle::push(w, {0, true}, nb);
      oracle::push(w, {0, false}, n);
      const cplx c = a(nb, n) / std::sqrt(oracle::qfact(nb, k) * oracle::qfact(n, k));
      oracle::accumulate(out, oracle::canonicalize(w, c, d, 1));
    }
  }
  return out;
}

cplx f_ij(const ParaPoly& f, int i, int j) { return f.coeff(Monomial::single(i, j)); }

}  // namespace

TEST_CASE("lower symbols") {
  std::mt19937_64 rng(31);
  for (int k : kEvenK) {
    const Deformation d(k);
    const FockOperator one = FockOperator::identity(d, 1);
    const ParaPoly ident = lower_symbol(one);
    ParaPoly expected(d, 1);
    for (int n = 0; n < d.kprime(); ++n) {
      oracle::Word w;
      oracle::push(w, {0, true}, n);
      oracle::push(w, {0, false}, n);
      oracle::accumulate(expected, oracle::canonicalize(w, 1.0 / qfactorial(n, d), d, 1));
    }
    CHECK(max_abs_diff(ident, expected) < 1e-13);
    const ParaPoly th = ParaPoly::generator(d, 1, {0, false});
    CHECK(max_abs_diff(lower_symbol(ladder(d, 1, 0)), ident * th) < 1e-12);
    CHECK(max_abs_diff(lower_symbol(ladder_dag(d, 1, 0)), conjugate(th) * ident) < 1e-12);
    for (int trial = 0; trial < 20; ++trial) {
      const FockOperator a(d, 1, random_matrix(d.kprime(), rng));
      CHECK(max_abs_diff(lower_symbol(a), pairing_oracle(a)) < 1e-12);
      CHECK(max_abs_diff(lower_symbol(a), coherent_pairing(a)) < 1e-12);
    }
    const VerificationReport r = verify_lower_symbols(d);
    CHECK_MESSAGE(r.all_pass(), r.pretty());
  }
  const Deformation d4(4);
  const ParaPoly p0 = lower_symbol(op2(1, 0, 0, 0));
  CHECK(max_abs_diff(p0, ParaPoly::constant(d4, 1, 1.0)) < 1e-15);
  CHECK(max_abs_diff(p0, pairing_oracle(op2(1, 0, 0, 0))) < 1e-15);
  const ParaPoly p1 = lower_symbol(op2(0, 0, 0, 1));
  CHECK(max_abs_diff(p1, mono(d4, 1, 1, -1.0)) < 1e-15);
}

TEST_CASE("upper symbol closed form for two levels") {
  std::mt19937_64 rng(32);
  const Deformation d4(4);
  for (int trial = 0; trial < 50; ++trial) {
    cplx a[4];
    for (auto& c : a) c = random_coefficient(rng);
    const ParaPoly f = upper_symbol(op2(a[0], a[1], a[2], a[3]));
    CHECK(std::abs(f_ij(f, 0, 0) - a[3]) < 1e-14);
    CHECK(std::abs(f_ij(f, 1, 0) - a[1]) < 1e-14);
    CHECK(std::abs(f_ij(f, 0, 1) - a[2]) < 1e-14);
    CHECK(std::abs(f_ij(f, 1, 1) - (a[0] - a[3])) < 1e-14);
    CHECK(f.terms().size() <= 4);
  }
  CHECK(max_abs_diff(upper_symbol(FockOperator::identity(d4, 1)), ParaPoly::constant(d4, 1, 1.0)) <
        1e-15);
  CHECK(max_abs_diff(upper_symbol(op2(1, 0, 0, 0)), mono(d4, 1, 1)) < 1e-15);
  CHECK(max_abs_diff(quantize(mono(d4, 1, 1)), op2(1, 0, 0, 0)) < 1e-15);
}

TEST_CASE("symbol round trips") {
  std::mt19937_64 rng(33);
  for (int k : kEvenK) {
    const Deformation d(k);
    for (int trial = 0; trial < 100; ++trial) {
      const ParaPoly f = random_parapoly(d, 1, rng);
      CHECK(max_abs_diff(upper_symbol(quantize(f)), f) < 1e-9);
      const FockOperator a(d, 1, random_matrix(d.kprime(), rng));
      CHECK(max_abs_diff(quantize(upper_symbol(a)), a) < 1e-9);
    }
    for (int s = 0; s < d.kprime(); ++s) {
      for (int t = 0; t < d.kprime(); ++t) {
        CHECK(max_abs_diff(upper_symbol(quantize(mono(d, s, t))), mono(d, s, t)) < 1e-10);
      }
    }
    const VerificationReport r = verify_symbols(d);
    CHECK_MESSAGE(r.all_pass(), r.pretty());
  }
  CHECK_THROWS(upper_symbol(FockOperator::identity(Deformation(4), 2)));
}

TEST_CASE("star product") {
  std::mt19937_64 rng(34);
  const Deformation d4(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ParaPoly f = random_parapoly(d4, 1, rng);
    const ParaPoly g = random_parapoly(d4, 1, rng);
    const cplx f00 = f_ij(f, 0, 0), f10 = f_ij(f, 1, 0), f01 = f_ij(f, 0, 1), f11 = f_ij(f, 1, 1);
    const cplx g00 = f_ij(g, 0, 0), g10 = f_ij(g, 1, 0), g01 = f_ij(g, 0, 1), g11 = f_ij(g, 1, 1);
    ParaPoly e(d4, 1);
    e.add_term(Monomial::single(0, 0), f01 * g10 + f00 * g00);
    e.add_term(Monomial::single(1, 0), (f00 + f11) * g10 + f10 * g00);
    e.add_term(Monomial::single(0, 1), f01 * (g00 + g11) + f00 * g01);
    e.add_term(Monomial::single(1, 1), f00 * g11 + f11 * (g00 + g11) + f10 * g01 - f01 * g10);
    CHECK(max_abs_diff(moyal_star(f, g), e) < 1e-13);
  }
  for (int k : kEvenK) {
    const Deformation d(k);
    const ParaPoly one = ParaPoly::constant(d, 1, 1.0);
    const ParaPoly th = ParaPoly::generator(d, 1, {0, false});
    const ParaPoly bth = ParaPoly::generator(d, 1, {0, true});
    CHECK(moyal_star(th, th).is_zero() == (k == 4));
    CHECK(moyal_star(bth, bth).is_zero() == (k == 4));
    for (int trial = 0; trial < 10; ++trial) {
      const ParaPoly f = random_parapoly(d, 1, rng);
      const ParaPoly g = random_parapoly(d, 1, rng);
      const ParaPoly h = random_parapoly(d, 1, rng);
      CHECK(max_abs_diff(moyal_star(one, f), f) < 1e-10);
      CHECK(max_abs_diff(moyal_star(f, one), f) < 1e-10);
      CHECK(max_abs_diff(moyal_star(moyal_star(f, g), h), moyal_star(f, moyal_star(g, h))) < 1e-9);
      CHECK(max_abs_diff(quantize(moyal_star(f, g)), quantize(f) * quantize(g)) < 1e-9);
    }
  }
}

TEST_CASE("quaternions") {
  const Deformation d4(4);
  const cplx i(0, 1);
  const ParaPoly I = upper_symbol(op2(0, i, i, 0));
  const ParaPoly J = upper_symbol(op2(0, -1, 1, 0));
  const ParaPoly K = upper_symbol(op2(i, 0, 0, -i));
  ParaPoly eI(d4, 1), eJ(d4, 1), eK(d4, 1);
  eI.add_term(Monomial::single(1, 0), i);
  eI.add_term(Monomial::single(0, 1), i);
  eJ.add_term(Monomial::single(1, 0), -1.0);
  eJ.add_term(Monomial::single(0, 1), 1.0);
  eK.add_term(Monomial::single(0, 0), -i);
  eK.add_term(Monomial::single(1, 1), 2.0 * i);
  CHECK(max_abs_diff(I, eI) < 1e-15);
  CHECK(max_abs_diff(J, eJ) < 1e-15);
  CHECK(max_abs_diff(K, eK) < 1e-15);
  const ParaPoly minus_one = ParaPoly::constant(d4, 1, -1.0);
  CHECK(max_abs_diff(moyal_star(I, I), minus_one) == 0.0);
  CHECK(max_abs_diff(moyal_star(J, J), minus_one) == 0.0);
  CHECK(max_abs_diff(moyal_star(K, K), minus_one) == 0.0);
  CHECK(max_abs_diff(moyal_star(I, J), K) == 0.0);
  CHECK(max_abs_diff(moyal_star(J, I), -K) == 0.0);

  const VerificationReport r = quaternion_demo();
  CHECK_MESSAGE(r.all_pass(), r.pretty());
  REQUIRE(r.find("I*I = -1"));
  CHECK(r.find("I*I = -1")->pass);
  CHECK(r.pretty().find("I*I = -1: pass") != std::string::npos);
}
