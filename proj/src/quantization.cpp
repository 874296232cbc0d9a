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

#include "pgq/quantization.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pgq {

const char* to_string(Ordering ord) {
  switch (ord) {
    case Ordering::Antinormal:
      return "antinormal";
    case Ordering::Left:
      return "left";
    case Ordering::Right:
      return "right";
  }
  return "?";
}

Ordering parse_ordering(const std::string& name) {
  if (name == "antinormal") return Ordering::Antinormal;
  if (name == "left") return Ordering::Left;
  if (name == "right") return Ordering::Right;
  throw std::invalid_argument("unknown ordering '" + name + "'");
}

namespace {

Eigen::Index fock_dim(const Deformation& def, int modes) {
  Eigen::Index dim = 1;
  for (int i = 0; i < modes; ++i) dim *= def.kprime();
  return dim;
}

void require_mode(int modes, int mode) {
  if (mode < 0 || mode >= modes) {
    throw std::out_of_range("mode index " + std::to_string(mode + 1) +
                            " outside 1.." + std::to_string(modes));
  }
}

std::vector<double> factorial_table(const Deformation& def) {
  std::vector<double> t(def.kprime());
  for (int n = 0; n < def.kprime(); ++n) t[n] = qfactorial(n, def);
  return t;
}

}  // namespace

FockOperator::FockOperator(const Deformation& def, int modes)
    : def_(def),
      modes_(modes),
      matrix_(Eigen::MatrixXcd::Zero(fock_dim(def, modes),
                                     fock_dim(def, modes))) {
  if (modes < 1) throw std::invalid_argument("FockOperator: modes < 1");
}

FockOperator::FockOperator(const Deformation& def, int modes,
                           Eigen::MatrixXcd matrix)
    : def_(def), modes_(modes), matrix_(std::move(matrix)) {
  if (modes < 1) throw std::invalid_argument("FockOperator: modes < 1");
  const Eigen::Index dim = fock_dim(def, modes);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("FockOperator: matrix must be " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("FockOperator: non-finite entry");
  }
}

FockOperator FockOperator::identity(const Deformation& def, int modes) {
  const Eigen::Index dim = fock_dim(def, modes);
  return FockOperator(def, modes, Eigen::MatrixXcd::Identity(dim, dim));
}

void FockOperator::require_compatible(const FockOperator& o) const {
  if (!(def_ == o.def_) || modes_ != o.modes_) {
    throw std::invalid_argument("FockOperator: deformation or modes mismatch");
  }
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  require_compatible(o);
  return FockOperator(def_, modes_, matrix_ * o.matrix_);
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
  require_compatible(o);
  return FockOperator(def_, modes_, matrix_ + o.matrix_);
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  require_compatible(o);
  return FockOperator(def_, modes_, matrix_ - o.matrix_);
}

FockOperator FockOperator::operator*(cplx c) const {
  return FockOperator(def_, modes_, matrix_ * c);
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(def_, modes_, matrix_.adjoint());
}

FockOperator FockOperator::pow(int n) const {
  if (n < 0) throw std::invalid_argument("FockOperator::pow: n < 0");
  FockOperator r = identity(def_, modes_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

double max_abs_diff(const FockOperator& a, const FockOperator& b) {
  return max_abs(a - b);
}

double max_abs(const FockOperator& a) {
  return a.dim() == 0 ? 0.0 : a.matrix().cwiseAbs().maxCoeff();
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

FactorWord ket_word(const Deformation& def, std::span<const int> multi) {
  FactorWord w;
  double norm = 1.0;
  for (std::size_t i = 0; i < multi.size(); ++i) {
    if (multi[i] > 0) w.push({static_cast<int>(i), false}, multi[i]);
    norm *= qfactorial(multi[i], def);
  }
  w.scalar = 1.0 / std::sqrt(norm);
  return w;
}

FactorWord bra_word(const Deformation& def, std::span<const int> multi) {
  FactorWord w;
  double norm = 1.0;
  for (std::size_t i = multi.size(); i-- > 0;) {
    if (multi[i] > 0) w.push({static_cast<int>(i), true}, multi[i]);
    norm *= qfactorial(multi[i], def);
  }
  w.scalar = 1.0 / std::sqrt(norm);
  return w;
}

CoherentKet coherent_ket(const Deformation& def, int modes) {
  if (modes < 1) throw std::invalid_argument("coherent_ket: modes < 1");
  CoherentKet ket{def, modes, {}};
  for_each_multi_index(def.kprime(), modes,
                       [&](std::size_t, const std::vector<int>& n) {
                         ket.components.push_back(
                             canonicalize_q(ket_word(def, n), def, modes));
                       });
  return ket;
}

CoherentKet coherent_bra(const Deformation& def, int modes) {
  CoherentKet bra = coherent_ket(def, modes);
  for (auto& c : bra.components) c = conjugate(c);
  return bra;
}

FockOperator resolution_of_unity(const Deformation& def, int modes) {
  const int kp = def.kprime();
  const ParaPoly w = weight(def, modes);
  const Monomial top = top_monomial(modes, kp);
  FockOperator result(def, modes);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(result.dim(), result.dim());
  for_each_multi_index(kp, modes, [&](std::size_t row, const std::vector<int>& n) {
    const FactorWord ket = ket_word(def, n);
    for_each_multi_index(kp, modes, [&](std::size_t col, const std::vector<int>& m) {
      const FactorWord bra = bra_word(def, m);
      for (const auto& [mw, cw] : w.terms()) {
        FactorWord word = ket;
        word.append(mw.to_word()).append(bra);
        word.scalar *= cw;
        auto ordered = canonicalize_prescription(word, modes, kp);
        if (ordered && ordered->first == top) a(row, col) += ordered->second;
      }
    });
  });
  return FockOperator(def, modes, std::move(a));
}

FockOperator quantize(const ParaPoly& f, Ordering ord) {
  const Deformation& def = f.deformation();
  const int modes = f.modes();
  const int kp = def.kprime();
  const std::vector<double> fact = factorial_table(def);
  FockOperator shape(def, modes);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(shape.dim(), shape.dim());

  enum Segment { kKet, kF, kWeight, kBra };
  for (const auto& [mono, c] : f.terms()) {
    const FactorWord f_word = mono.to_word();
    for_each_multi_index(kp, modes, [&](std::size_t row, const std::vector<int>& n) {
      // Only the weight term theta^{k'-1-c} bartheta^{k'-1-c} with
      // c = n + s can saturate the theta powers; the bar powers then fix
      // the column m = c - t.
      std::vector<int> m(modes), w_pow(modes);
      double magnitude = 1.0;
      for (int i = 0; i < modes; ++i) {
        const int ci = n[i] + mono.theta(i);
        if (ci > kp - 1) return;
        m[i] = ci - mono.bar(i);
        if (m[i] < 0) return;
        w_pow[i] = kp - 1 - ci;
        magnitude *= fact[ci] / std::sqrt(fact[n[i]] * fact[m[i]]);
      }
      cplx phase = 1.0;
      if (ord != Ordering::Antinormal) {
        std::vector<Factor> word;
        std::vector<Segment> seg;
        auto put = [&](const FactorWord& part, Segment s) {
          for (const auto& fac : part.factors) {
            word.push_back(fac);
            seg.push_back(s);
          }
        };
        const FactorWord w_word = Monomial(w_pow, w_pow).to_word();
        put(ket_word(def, n), kKet);
        if (ord == Ordering::Left) {
          put(f_word, kF);
          put(w_word, kWeight);
        } else {
          put(w_word, kWeight);
          put(f_word, kF);
        }
        put(bra_word(def, m), kBra);
        const long e = reorder_exponent(word, [&](std::size_t i, std::size_t j) {
          return (seg[i] == kF) != (seg[j] == kF);
        });
        phase = def.qk_pow(e);
      }
      a(row, flatten_index(m, kp)) += c * magnitude * phase;
    });
  }
  return FockOperator(def, modes, std::move(a));
}

FockOperator quantize_word(const FactorWord& w, const Deformation& def,
                           int modes, Ordering ord) {
  if (ord == Ordering::Antinormal) {
    ParaPoly f(def, modes);
    if (auto t = canonicalize_prescription(w, modes, def.kprime())) {
      f.add_term(t->first, t->second);
    }
    return quantize(f, ord);
  }
  return quantize(canonicalize_q(w, def, modes), ord);
}

FockOperator ladder(const Deformation& def, int modes, int mode) {
  require_mode(modes, mode);
  const int kp = def.kprime();
  FockOperator shape(def, modes);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(shape.dim(), shape.dim());
  for_each_multi_index(kp, modes, [&](std::size_t row, const std::vector<int>& n) {
    if (n[mode] + 1 >= kp) return;
    std::vector<int> up = n;
    ++up[mode];
    a(row, flatten_index(up, kp)) = std::sqrt(qnumber(n[mode] + 1, def));
  });
  return FockOperator(def, modes, std::move(a));
}

FockOperator ladder_dag(const Deformation& def, int modes, int mode) {
  return ladder(def, modes, mode).adjoint();
}

FockOperator q_power_N(const Deformation& def, int modes, int sign, int mode) {
  require_mode(modes, mode);
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("q_power_N: sign must be +1 or -1");
  }
  FockOperator shape(def, modes);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(shape.dim(), shape.dim());
  for_each_multi_index(def.kprime(), modes,
                       [&](std::size_t i, const std::vector<int>& n) {
                         a(i, i) = def.q_pow(static_cast<long>(sign) * n[mode]);
                       });
  return FockOperator(def, modes, std::move(a));
}

FockOperator number_operator(const Deformation& def, int modes, int mode) {
  require_mode(modes, mode);
  FockOperator shape(def, modes);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(shape.dim(), shape.dim());
  for_each_multi_index(def.kprime(), modes,
                       [&](std::size_t i, const std::vector<int>& n) {
                         a(i, i) = static_cast<double>(n[mode]);
                       });
  return FockOperator(def, modes, std::move(a));
}

std::pair<FockOperator, FockOperator> rescale_B(const Deformation& def) {
  const int kp = def.kprime();
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(kp, kp);
  for (int n = 0; n < kp; ++n) half(n, n) = def.q_half_pow(n);
  const FockOperator q_half(def, 1, std::move(half));
  return {q_half * ladder(def, 1, 0), ladder_dag(def, 1, 0) * q_half};
}

FockOperator quantize_mixed_monomial(int n, int m, const Deformation& def) {
  const int kp = def.kprime();
  if (n < 0 || m < 0 || n >= kp || m >= kp) {
    throw std::out_of_range("quantize_mixed_monomial: powers must lie in 0..k'-1");
  }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(kp, kp);
  auto fact = [&](int j) { return qfactorial(j, def); };
  for (int l = 0; l < kp; ++l) {
    if (n >= m) {
      // |l><l+n-m|
      if (l + n > kp - 1) continue;
      a(l, l + n - m) =
          std::sqrt(fact(l + n) / fact(l) * fact(l + n) / fact(l + n - m));
    } else {
      // |l+m-n><l|
      if (l + m > kp - 1) continue;
      a(l + m - n, l) =
          std::sqrt(fact(l + m) / fact(l + m - n) * fact(l + m) / fact(l));
    }
  }
  return FockOperator(def, 1, std::move(a));
}

FockOperator reversed_mixed_product(int n, int m, const Deformation& def) {
  const int kp = def.kprime();
  if (n < 0 || m < 0 || n >= kp || m >= kp) {
    throw std::out_of_range("reversed_mixed_product: powers must lie in 0..k'-1");
  }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(kp, kp);
  auto fact = [&](int j) { return qfactorial(j, def); };
  for (int l = 0; l + std::max(n, m) < kp; ++l) {
    a(l + m, l + n) = std::sqrt(fact(l + n) / fact(l) * fact(l + m) / fact(l));
  }
  return FockOperator(def, 1, std::move(a));
}

VerificationReport verify_resolution(const Deformation& def, int modes,
                                     double tol) {
  VerificationReport report(tol);
  report.add("resolution of unity k=" + std::to_string(def.k()) +
                 " d=" + std::to_string(modes),
             max_abs_diff(resolution_of_unity(def, modes),
                          FockOperator::identity(def, modes)));
  return report;
}

namespace {

FockOperator quantized_generator(const Deformation& def, int modes, int mode,
                                 bool barred, int power = 1) {
  return quantize(ParaPoly::generator(def, modes, {mode, barred}, power));
}

}  // namespace

VerificationReport verify_relations(const Deformation& def, int modes,
                                    double tol) {
  VerificationReport report(tol);
  const int kp = def.kprime();
  const FockOperator zero(def, modes);
  for (int i = 0; i < modes; ++i) {
    const std::string tag =
        modes == 1 ? "" : " [mode " + std::to_string(i + 1) + "]";
    const FockOperator a = quantized_generator(def, modes, i, false);
    const FockOperator ad = quantized_generator(def, modes, i, true);
    report.add("closed-form ladder = A_th" + tag,
               std::max(max_abs_diff(a, ladder(def, modes, i)),
                        max_abs_diff(ad, ladder_dag(def, modes, i))));
    report.add("(a) A_th A_bth - q A_bth A_th = q^-N" + tag,
               max_abs_diff(a * ad - def.q() * (ad * a),
                            q_power_N(def, modes, -1, i)));
    report.add("(b) A_th A_bth - conj(q) A_bth A_th = q^N" + tag,
               max_abs_diff(a * ad - std::conj(def.q()) * (ad * a),
                            q_power_N(def, modes, +1, i)));
    double hom = 0.0;
    double hom_bar = 0.0;
    for (int n = 0; n <= kp; ++n) {
      hom = std::max(hom, max_abs_diff(a.pow(n),
                                       quantized_generator(def, modes, i, false, n)));
      hom_bar = std::max(hom_bar, max_abs_diff(ad.pow(n),
                                               quantized_generator(def, modes, i, true, n)));
    }
    report.add("(c) A_th^n = A_{th^n}, n <= k'" + tag, hom);
    report.add("(c) A_bth^n = A_{bth^n}, n <= k'" + tag, hom_bar);
    report.add("(d) A_th^k' = 0" + tag,
               std::max(max_abs(a.pow(kp)), max_abs(ad.pow(kp))));
    report.add("(e) A_bth = A_th^dagger" + tag, max_abs_diff(ad, a.adjoint()));
  }
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      if (i == j) continue;
      const std::string tag =
          " [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      const FockOperator ai = quantized_generator(def, modes, i, false);
      const FockOperator aj = quantized_generator(def, modes, j, false);
      const FockOperator adi = quantized_generator(def, modes, i, true);
      const FockOperator adj = quantized_generator(def, modes, j, true);
      report.add("(f) [A_th_i, A_bth_j] = 0" + tag, max_abs(commutator(ai, adj)));
      if (i < j) {
        report.add("(f) [A_th_i, A_th_j] = 0" + tag, max_abs(commutator(ai, aj)));
        report.add("(f) [A_bth_i, A_bth_j] = 0" + tag,
                   max_abs(commutator(adi, adj)));
        FactorWord ij;
        ij.push({i, false}).push({j, false});
        FactorWord ji;
        ji.push({j, false}).push({i, false});
        const FockOperator a_ij = quantize_word(ij, def, modes);
        const FockOperator a_ji = quantize_word(ji, def, modes);
        report.add("(f) A_{th_i th_j} = A_th_i A_th_j = A_{th_j th_i}" + tag,
                   std::max({max_abs_diff(a_ij, ai * aj),
                             max_abs_diff(a_ij, a_ji),
                             max_abs_diff(a_ji, aj * ai)}));
      }
    }
  }
  return report;
}

VerificationReport check_kfermionic(const Deformation& def, double tol,
                                    std::optional<cplx> q_f) {
  const cplx qf = q_f.value_or(def.qk());
  const int kp = def.kprime();
  VerificationReport report(tol);
  const auto [b, bd] = rescale_B(def);
  const FockOperator& f_minus = b;
  const FockOperator& f_plus = bd;
  const FockOperator f_plus_dag = f_plus.adjoint();
  const FockOperator f_minus_dag = f_minus.adjoint();
  const FockOperator n_op = number_operator(def, 1, 0);
  const FockOperator one = FockOperator::identity(def, 1);

  report.add("F(i) f- f+ - qF f+ f- = 1",
             max_abs_diff(f_minus * f_plus - qf * (f_plus * f_minus), one));
  report.add("F(i) [N, f-] = -f-",
             max_abs_diff(commutator(n_op, f_minus), f_minus * cplx(-1.0)));
  report.add("F(i) [N, f+] = +f+", max_abs_diff(commutator(n_op, f_plus), f_plus));
  report.add("F(i) (f-)^k' = (f+)^k' = 0",
             std::max(max_abs(f_minus.pow(kp)), max_abs(f_plus.pow(kp))));

  report.add("F(ii) f+^+ f-^+ - conj(qF) f-^+ f+^+ = 1",
             max_abs_diff(f_plus_dag * f_minus_dag -
                              std::conj(qf) * (f_minus_dag * f_plus_dag),
                          one));
  report.add("F(ii) [N, f+^+] = -f+^+",
             max_abs_diff(commutator(n_op, f_plus_dag), f_plus_dag * cplx(-1.0)));
  report.add("F(ii) [N, f-^+] = +f-^+",
             max_abs_diff(commutator(n_op, f_minus_dag), f_minus_dag));
  report.add("F(ii) (f+^+)^k' = (f-^+)^k' = 0",
             std::max(max_abs(f_plus_dag.pow(kp)), max_abs(f_minus_dag.pow(kp))));

  // Both square roots of qF; the relation passes if either branch does.
  const cplx principal = std::sqrt(qf);
  const std::pair<const char*, cplx> branches[] = {{"principal", principal},
                                                  {"negated", -principal}};
  double best1 = 0.0, best2 = 0.0;
  const char* best_name = nullptr;
  for (const auto& [name, root] : branches) {
    const double r1 = max_abs(f_minus * f_plus_dag - (1.0 / root) * (f_plus_dag * f_minus));
    const double r2 = max_abs(f_plus * f_minus_dag - root * (f_minus_dag * f_plus));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "F(iii) %s branch qF^{1/2} = (%.6f, %.6f): residuals %.3e, %.3e",
                  name, root.real(), root.imag(), r1, r2);
    report.note(buf);
    if (!best_name || std::max(r1, r2) < std::max(best1, best2)) {
      best1 = r1;
      best2 = r2;
      best_name = name;
    }
  }
  report.add(std::string("F(iii) f- f+^+ - qF^{-1/2} f+^+ f- = 0 (") + best_name +
                 " branch)",
             best1);
  report.add(std::string("F(iii) f+ f-^+ - qF^{1/2} f-^+ f+ = 0 (") + best_name +
                 " branch)",
             best2);
  return report;
}

VerificationReport verify_ordering_identities(const Deformation& def, double tol) {
  VerificationReport report(tol);
  const int kp = def.kprime();
  auto diag = [&](auto entry) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(kp, kp);
    for (int n = 0; n < kp; ++n) a(n, n) = entry(n);
    return FockOperator(def, 1, std::move(a));
  };
  auto qn = [&](int n) { return qnumber(n, def); };
  const ParaPoly th = ParaPoly::generator(def, 1, {0, false});
  const ParaPoly bth = ParaPoly::generator(def, 1, {0, true});
  const FockOperator l_th = quantize(th, Ordering::Left);
  const FockOperator r_th = quantize(th, Ordering::Right);
  const FockOperator l_bth = quantize(bth, Ordering::Left);
  const FockOperator r_bth = quantize(bth, Ordering::Right);

  // Displayed first-order operators.
  Eigen::MatrixXcd r_th_closed = Eigen::MatrixXcd::Zero(kp, kp);
  Eigen::MatrixXcd l_bth_closed = Eigen::MatrixXcd::Zero(kp, kp);
  for (int n = 0; n + 1 < kp; ++n) {
    r_th_closed(n, n + 1) = std::sqrt(qn(n + 1)) * def.qk_pow(n + 2);
    l_bth_closed(n + 1, n) = std::sqrt(qn(n + 1)) * def.qk_pow(n + 2);
  }
  report.add("A^L_th = A_th", max_abs_diff(l_th, ladder(def, 1, 0)));
  report.add("A^R_bth = A_bth", max_abs_diff(r_bth, ladder_dag(def, 1, 0)));
  report.add("A^R_th = sum sqrt([n+1]) q_k^{n+2} |n><n+1|",
             max_abs_diff(r_th, FockOperator(def, 1, r_th_closed)));
  report.add("A^L_bth = sum sqrt([n+1]) q_k^{n+2} |n+1><n|",
             max_abs_diff(l_bth, FockOperator(def, 1, l_bth_closed)));

  // Products of first-order elements.
  report.add("A^L_th A^R_bth = diag [n+1]",
             max_abs_diff(l_th * r_bth, diag([&](int n) { return cplx(qn(n + 1)); })));
  const FockOperator phase1 = diag([&](int n) { return qn(n + 1) * def.qk_pow(n + 2); });
  report.add("A^L_th A^L_bth = diag [n+1] q_k^{n+2}", max_abs_diff(l_th * l_bth, phase1));
  report.add("A^R_th A^R_bth = diag [n+1] q_k^{n+2}", max_abs_diff(r_th * r_bth, phase1));
  report.add("A^R_th A^L_bth = diag [n+1] q_k^{2n+4}",
             max_abs_diff(r_th * l_bth,
                          diag([&](int n) { return qn(n + 1) * def.qk_pow(2 * n + 4); })));
  report.add("A^R_bth A^L_th = diag [n]",
             max_abs_diff(r_bth * l_th, diag([&](int n) { return cplx(qn(n)); })));
  const FockOperator phase2 = diag([&](int n) { return qn(n) * def.qk_pow(n + 1); });
  report.add("A^R_bth A^R_th = diag [n] q_k^{n+1}", max_abs_diff(r_bth * r_th, phase2));
  report.add("A^L_bth A^L_th = diag [n] q_k^{n+1}", max_abs_diff(l_bth * l_th, phase2));
  report.add("A^L_bth A^R_th = diag [n] q_k^{2n+2}",
             max_abs_diff(l_bth * r_th,
                          diag([&](int n) { return qn(n) * def.qk_pow(2 * n + 2); })));
  report.add("A_{th bth} = diag [n+1] = A_th A_bth",
             std::max(max_abs_diff(quantize(th * bth),
                                   diag([&](int n) { return cplx(qn(n + 1)); })),
                      max_abs_diff(quantize(th * bth), l_th * r_bth)));

  // Mixed terms and the commutator expansion.
  const FockOperator a = ladder(def, 1, 0);
  const FockOperator ad = ladder_dag(def, 1, 0);
  const FockOperator ab = commutator(a, ad);
  double closed = 0.0, product = 0.0, reordered = 0.0, reversed = 0.0,
         expansion = 0.0;
  for (int n = 0; n < kp; ++n) {
    for (int m = 0; m < kp; ++m) {
      const FockOperator direct =
          quantize(ParaPoly::monomial(def, Monomial::single(n, m)));
      const FockOperator a_n = a.pow(n);
      const FockOperator ad_m = ad.pow(m);
      closed = std::max(closed, max_abs_diff(direct, quantize_mixed_monomial(n, m, def)));
      product = std::max(product, max_abs_diff(direct, a_n * ad_m));
      FactorWord bar_first;
      bar_first.push({0, true}, m).push({0, false}, n);
      reordered = std::max(reordered,
                           max_abs_diff(quantize_word(bar_first, def, 1), direct));
      reversed = std::max(reversed,
                          max_abs_diff(ad_m * a_n, reversed_mixed_product(n, m, def)));
      FockOperator sum(def, 1);
      for (int s = 0; s < n; ++s) {
        for (int r = 0; r < m; ++r) {
          sum = sum + a.pow(s) * ad.pow(r) * ab * ad.pow(m - 1 - r) * a.pow(n - 1 - s);
        }
      }
      expansion = std::max(expansion, max_abs_diff(commutator(a_n, ad_m), sum));
    }
  }
  report.add("A_{th^n bth^m} closed form", closed);
  report.add("A_{th^n bth^m} = A_{th^n} A_{bth^m}", product);
  report.add("A_{bth^m th^n} = A_{th^n bth^m} (antinormal word)", reordered);
  report.add("A_{bth^m} A_{th^n} closed form", reversed);
  report.add("[A_{th^n}, A_{bth^m}] symmetrized commutator expansion", expansion);
  if (kp > 2) {
    report.note("A_bth A_th differs from A_{th bth} by " +
                std::to_string(max_abs_diff(ad * a, quantize(th * bth))));
  }
  return report;
}

Eigen::MatrixXcd random_matrix(Eigen::Index dim, std::mt19937_64& rng) {
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = random_coefficient(rng);
  }
  return a;
}

}  // namespace pgq
