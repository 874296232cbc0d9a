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

#include "pgq/symbols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pgq {

namespace {

void require_single_mode(const FockOperator& a, const char* what) {
  if (a.modes() != 1) {
    throw std::invalid_argument(std::string(what) +
                                ": only single-mode operators are supported");
  }
}

}  // namespace

ParaPoly lower_symbol(const FockOperator& a) {
  require_single_mode(a, "lower_symbol");
  const Deformation& def = a.deformation();
  const int kp = def.kprime();
  ParaPoly r(def, 1);
  for (int n = 0; n < kp; ++n) {
    for (int nb = 0; nb < kp; ++nb) {
      const double norm = std::sqrt(qfactorial(nb, def) * qfactorial(n, def));
      r.add_term(Monomial::single(n, nb),
                 std::conj(def.qk_pow(static_cast<long>(n) * nb)) * a(nb, n) / norm);
    }
  }
  return r;
}

ParaPoly coherent_pairing(const FockOperator& a, cplx bra_scale,
                          cplx ket_scale) {
  require_single_mode(a, "coherent_pairing");
  const Deformation& def = a.deformation();
  const int kp = def.kprime();
  ParaPoly r(def, 1);
  for (int row = 0; row < kp; ++row) {
    const double nr = std::sqrt(qfactorial(row, def));
    const ParaPoly bra = ParaPoly::monomial(
        def, Monomial::single(0, row), std::pow(std::conj(bra_scale), row) / nr);
    for (int col = 0; col < kp; ++col) {
      if (a(row, col) == cplx{}) continue;
      const double nc = std::sqrt(qfactorial(col, def));
      const ParaPoly ket = ParaPoly::monomial(
          def, Monomial::single(col, 0), std::pow(ket_scale, col) / nc);
      r = r + multiply(bra * a(row, col), ket);
    }
  }
  return r;
}

ParaPoly upper_symbol(const FockOperator& a) {
  require_single_mode(a, "upper_symbol");
  const Deformation& def = a.deformation();
  const int kp = def.kprime();
  ParaPoly f(def, 1);
  for (int p = -(kp - 1); p <= kp - 1; ++p) {
    const int width = kp - std::abs(p);
    // Unknown u is the coefficient of theta^s bartheta^t with t - s = p.
    auto monomial_of = [&](int u) {
      return p >= 0 ? Monomial::single(u, u + p) : Monomial::single(u - p, u);
    };
    // Row h = max(n, n') of the entry (n, n') on this diagonal.
    auto entry = [&](const FockOperator& op, int h) {
      return p >= 0 ? op(h, h - p) : op(h + p, h);
    };
    std::vector<FockOperator> quantized;
    quantized.reserve(width);
    for (int u = 0; u < width; ++u) {
      quantized.push_back(quantize(ParaPoly::monomial(def, monomial_of(u))));
    }
    std::vector<cplx> coeff(width);
    for (int h = kp - 1; h >= std::abs(p); --h) {
      const int u = kp - 1 - h;
      cplx rhs = entry(a, h);
      for (int v = 0; v < u; ++v) rhs -= entry(quantized[v], h) * coeff[v];
      const cplx pivot = entry(quantized[u], h);
      if (std::abs(pivot) == 0.0) {
        throw std::logic_error("upper_symbol: singular triangular system");
      }
      coeff[u] = rhs / pivot;
      f.add_term(monomial_of(u), coeff[u]);
    }
  }
  return f;
}

ParaPoly moyal_star(const ParaPoly& f, const ParaPoly& g) {
  if (!f.compatible(g)) {
    throw std::invalid_argument("moyal_star: deformation or modes mismatch");
  }
  if (f.modes() != 1) {
    throw std::invalid_argument("moyal_star: single mode only");
  }
  return upper_symbol(quantize(f) * quantize(g));
}

VerificationReport verify_lower_symbols(const Deformation& def, double tol,
                                        std::uint64_t seed, int samples) {
  VerificationReport report(tol);
  const int kp = def.kprime();
  const ParaPoly th = ParaPoly::generator(def, 1, {0, false});
  const ParaPoly bth = ParaPoly::generator(def, 1, {0, true});
  const FockOperator one = FockOperator::identity(def, 1);
  const FockOperator a = quantize(th);
  const FockOperator ad = quantize(bth);
  const cplx qk = def.qk();

  const ParaPoly overlap = lower_symbol(one);
  report.add("(th|A_th|th) = (th|th) th", max_abs_diff(lower_symbol(a), overlap * th));
  report.add("(th|A_bth|th) = bth (th|th)", max_abs_diff(lower_symbol(ad), bth * overlap));

  ParaPoly bar_first(def, 1);
  ParaPoly theta_first(def, 1);
  for (int n = 0; n < kp; ++n) {
    const double fn = qfactorial(n, def);
    FactorWord w;
    w.push({0, true}, n).push({0, false}, n);
    w.scalar = 1.0 / fn;
    bar_first = bar_first + canonicalize_q(w, def, 1);
    theta_first.add_term(Monomial::single(n, n),
                         std::conj(def.qk_pow(static_cast<long>(n) * n)) / fn);
  }
  report.add("(th|th) = sum bth^n th^n / [n]!", max_abs_diff(overlap, bar_first));
  report.add("(th|th) = sum conj(q_k)^{n^2} th^n bth^n / [n]!",
             max_abs_diff(overlap, theta_first));
  report.add("(th|th) = (q_k th|q_k th)",
             max_abs_diff(overlap, coherent_pairing(one, qk, qk)));
  const ParaPoly ov_qk_ket = coherent_pairing(one, 1.0, qk);
  const ParaPoly ov_qk_bra = coherent_pairing(one, qk, 1.0);
  report.add("th (th|th) = (th|q_k th) th", max_abs_diff(th * overlap, ov_qk_ket * th));
  report.add("(th|th) th = th (q_k th|th)", max_abs_diff(overlap * th, th * ov_qk_bra));
  report.add("bth (th|th) = (q_k th|th) bth",
             max_abs_diff(bth * overlap, ov_qk_bra * bth));
  report.add("(th|th) bth = bth (th|q_k th)",
             max_abs_diff(overlap * bth, bth * ov_qk_ket));
  // Pre-division form of <A_th><A_bth> = q_k <A_bth><A_th>.
  report.add("(th|A_th|th) bth = q_k (th|th) bth th",
             max_abs_diff(lower_symbol(a) * bth, overlap * (bth * th) * qk));

  std::mt19937_64 rng(seed);
  double pairing = 0.0;
  for (int i = 0; i < samples; ++i) {
    const FockOperator m(def, 1, random_matrix(kp, rng));
    pairing = std::max(pairing, max_abs_diff(lower_symbol(m), coherent_pairing(m)));
  }
  report.add("lower symbol closed form = direct pairing (" +
                 std::to_string(samples) + " random matrices)",
             pairing);
  return report;
}

VerificationReport verify_symbols(const Deformation& def, double tol,
                                  std::uint64_t seed, int samples) {
  VerificationReport report(tol);
  std::mt19937_64 rng(seed);
  double dequantize = 0.0, requantize = 0.0, hermitian = 0.0, assoc = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ParaPoly f = random_parapoly(def, 1, rng);
    const FockOperator af = quantize(f);
    dequantize = std::max(dequantize, max_abs_diff(upper_symbol(af), f));
    hermitian = std::max(hermitian, max_abs_diff(quantize(conjugate(f)), af.adjoint()));
    const FockOperator a(def, 1, random_matrix(def.kprime(), rng));
    requantize = std::max(requantize, max_abs_diff(quantize(upper_symbol(a)), a));
  }
  for (int i = 0; i < std::min(samples, 20); ++i) {
    const ParaPoly f = random_parapoly(def, 1, rng);
    const ParaPoly g = random_parapoly(def, 1, rng);
    const ParaPoly h = random_parapoly(def, 1, rng);
    assoc = std::max(assoc, max_abs_diff(moyal_star(moyal_star(f, g), h),
                                         moyal_star(f, moyal_star(g, h))));
  }
  const std::string n = " (" + std::to_string(samples) + " random)";
  report.add("upper_symbol(quantize(f)) = f" + n, dequantize);
  report.add("quantize(upper_symbol(A)) = A" + n, requantize);
  report.add("quantize(conj f) = quantize(f)^dagger" + n, hermitian);
  report.add("(f*g)*h = f*(g*h)", assoc);
  return report;
}

namespace {

// z0 + z1 I + z2 J + z3 K read off a k = 4 symbol.
std::array<cplx, 4> quaternion_components(const ParaPoly& s) {
  const cplx i(0.0, 1.0);
  const cplx c0 = s.coeff(Monomial::single(0, 0));
  const cplx c_th = s.coeff(Monomial::single(1, 0));
  const cplx c_bth = s.coeff(Monomial::single(0, 1));
  const cplx c_thbth = s.coeff(Monomial::single(1, 1));
  const cplx z3 = c_thbth / (2.0 * i);
  const cplx z1 = (c_th + c_bth) / (2.0 * i);
  const cplx z2 = (c_bth - c_th) / 2.0;
  return {c0 + i * z3, z1, z2, z3};
}

}  // namespace

VerificationReport quaternion_demo(double tol, std::uint64_t seed, int samples) {
  const Deformation def(4);
  const cplx i(0.0, 1.0);
  VerificationReport report(tol);
  auto op = [&](cplx a00, cplx a01, cplx a10, cplx a11) {
    Eigen::MatrixXcd m(2, 2);
    m << a00, a01, a10, a11;
    return FockOperator(def, 1, m);
  };
  // i sigma^1, -i sigma^2, i sigma^3
  const ParaPoly I = upper_symbol(op(0, i, i, 0));
  const ParaPoly J = upper_symbol(op(0, -1, 1, 0));
  const ParaPoly K = upper_symbol(op(i, 0, 0, -i));
  const ParaPoly one = ParaPoly::constant(def, 1, 1.0);
  const ParaPoly th = ParaPoly::generator(def, 1, {0, false});
  const ParaPoly bth = ParaPoly::generator(def, 1, {0, true});

  report.add("I*I = -1", max_abs_diff(moyal_star(I, I), -one));
  report.add("J*J = -1", max_abs_diff(moyal_star(J, J), -one));
  report.add("K*K = -1", max_abs_diff(moyal_star(K, K), -one));
  report.add("I*J = K", max_abs_diff(moyal_star(I, J), K));
  report.add("J*I = -K", max_abs_diff(moyal_star(J, I), -K));
  report.add("J*K = I", max_abs_diff(moyal_star(J, K), I));
  report.add("K*I = J", max_abs_diff(moyal_star(K, I), J));
  report.add("th*th = 0", max_abs_diff(moyal_star(th, th), ParaPoly(def, 1)));
  report.add("bth*bth = 0", max_abs_diff(moyal_star(bth, bth), ParaPoly(def, 1)));

  std::mt19937_64 rng(seed);
  double symbol_form = 0.0;
  double product_law = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::array<cplx, 4> z, w;
    for (auto& c : z) c = random_coefficient(rng);
    for (auto& c : w) c = random_coefficient(rng);
    const ParaPoly zs = z[0] * one + z[1] * I + z[2] * J + z[3] * K;
    const ParaPoly ws = w[0] * one + w[1] * I + w[2] * J + w[3] * K;

    ParaPoly displayed(def, 1);
    displayed.add_term(Monomial::single(0, 0), z[0] - i * z[3]);
    displayed.add_term(Monomial::single(1, 0), i * z[1] - z[2]);
    displayed.add_term(Monomial::single(0, 1), i * z[1] + z[2]);
    displayed.add_term(Monomial::single(1, 1), 2.0 * i * z[3]);
    symbol_form = std::max(symbol_form, max_abs_diff(zs, displayed));

    const auto x = quaternion_components(moyal_star(zs, ws));
    const cplx dot = z[1] * w[1] + z[2] * w[2] + z[3] * w[3];
    const std::array<cplx, 4> expected = {
        z[0] * w[0] - dot,
        z[0] * w[1] + w[0] * z[1] + (z[2] * w[3] - z[3] * w[2]),
        z[0] * w[2] + w[0] * z[2] + (z[3] * w[1] - z[1] * w[3]),
        z[0] * w[3] + w[0] * z[3] + (z[1] * w[2] - z[2] * w[1])};
    for (int c = 0; c < 4; ++c) {
      product_law = std::max(product_law, std::abs(x[c] - expected[c]));
    }
  }
  report.add("z(th,bth) = z0 - i z3 + (i z1 - z2) th + (i z1 + z2) bth + 2i z3 th bth",
             symbol_form);
  report.add("x0 = z0 w0 - z.w, x = z0 w + w0 z + z x w (" +
                 std::to_string(samples) + " random pairs)",
             product_law);
  return report;
}

}  // namespace pgq
