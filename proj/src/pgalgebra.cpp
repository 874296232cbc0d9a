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

#include "pgq/pgalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pgq {

int exchange_exponent(Generator x, Generator y) {
  if (x.mode == y.mode) {
    if (x.barred == y.barred) return 0;
    return x.barred ? -1 : 1;
  }
  const int a = x.barred ? -1 : 1;
  const int b = y.barred ? -1 : 1;
  return x.mode < y.mode ? a * b : -a * b;
}

FactorWord& FactorWord::append(const FactorWord& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  scalar *= other.scalar;
  return *this;
}

Monomial::Monomial(std::vector<int> theta, std::vector<int> bar)
    : theta_(std::move(theta)), bar_(std::move(bar)) {
  if (theta_.size() != bar_.size()) {
    throw std::invalid_argument("Monomial: theta/bar mode counts differ");
  }
}

bool Monomial::within(int kprime) const {
  auto ok = [kprime](int p) { return p >= 0 && p < kprime; };
  return std::all_of(theta_.begin(), theta_.end(), ok) &&
         std::all_of(bar_.begin(), bar_.end(), ok);
}

bool Monomial::has_bar() const {
  return std::any_of(bar_.begin(), bar_.end(), [](int p) { return p > 0; });
}

bool Monomial::has_theta() const {
  return std::any_of(theta_.begin(), theta_.end(),
                     [](int p) { return p > 0; });
}

FactorWord Monomial::to_word() const {
  FactorWord w;
  for (int i = 0; i < modes(); ++i) {
    if (theta_[i] > 0) w.push({i, false}, theta_[i]);
  }
  for (int i = 0; i < modes(); ++i) {
    if (bar_[i] > 0) w.push({i, true}, bar_[i]);
  }
  return w;
}

ParaPoly::ParaPoly(const Deformation& def, int modes)
    : def_(def), modes_(modes) {
  if (modes < 1) throw std::invalid_argument("ParaPoly: modes must be >= 1");
}

ParaPoly ParaPoly::constant(const Deformation& def, int modes, cplx c) {
  ParaPoly p(def, modes);
  p.add_term(Monomial::unit(modes), c);
  return p;
}

ParaPoly ParaPoly::generator(const Deformation& def, int modes, Generator g,
                             int power) {
  if (g.mode < 0 || g.mode >= modes) {
    throw std::out_of_range("generator mode out of range");
  }
  Monomial m(modes);
  (g.barred ? m.bar(g.mode) : m.theta(g.mode)) = power;
  ParaPoly p(def, modes);
  p.add_term(m, 1.0);
  return p;
}

ParaPoly ParaPoly::monomial(const Deformation& def, const Monomial& m,
                            cplx c) {
  ParaPoly p(def, m.modes());
  p.add_term(m, c);
  return p;
}

cplx ParaPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cplx{} : it->second;
}

void ParaPoly::add_term(const Monomial& m, cplx c) {
  if (m.modes() != modes_) {
    throw std::invalid_argument("ParaPoly: monomial mode count mismatch");
  }
  if (!m.within(def_.kprime())) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

namespace {

void require_compatible(const ParaPoly& a, const ParaPoly& b) {
  if (!a.compatible(b)) {
    throw std::invalid_argument(
        "ParaPoly: deformation or mode count mismatch (k " +
        std::to_string(a.deformation().k()) + "/" +
        std::to_string(b.deformation().k()) + ", d " +
        std::to_string(a.modes()) + "/" + std::to_string(b.modes()) + ")");
  }
}

}  // namespace

ParaPoly ParaPoly::operator+(const ParaPoly& o) const {
  require_compatible(*this, o);
  ParaPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ParaPoly ParaPoly::operator-(const ParaPoly& o) const { return *this + (-o); }

ParaPoly ParaPoly::operator-() const { return *this * cplx(-1.0); }

ParaPoly ParaPoly::operator*(cplx c) const {
  ParaPoly r(def_, modes_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

ParaPoly ParaPoly::operator*(const ParaPoly& o) const {
  return multiply(*this, o);
}

double max_abs_diff(const ParaPoly& a, const ParaPoly& b) {
  double worst = 0.0;
  for (const auto& [m, c] : a.terms()) {
    worst = std::max(worst, std::abs(c - b.coeff(m)));
  }
  for (const auto& [m, c] : b.terms()) {
    if (a.terms().count(m) == 0) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

long reorder_exponent(
    std::span<const Factor> word,
    const std::function<bool(std::size_t, std::size_t)>& counted) {
  long e = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[j].gen.order_key() >= word[i].gen.order_key()) continue;
      if (counted && !counted(i, j)) continue;
      e += static_cast<long>(word[i].power) * word[j].power *
           exchange_exponent(word[i].gen, word[j].gen);
    }
  }
  return e;
}

namespace {

// Accumulated powers of the word; false on overflow past k' - 1.
bool accumulate_powers(const FactorWord& w, int modes, int kprime,
                       Monomial& out) {
  out = Monomial(modes);
  for (const auto& f : w.factors) {
    if (f.gen.mode < 0 || f.gen.mode >= modes) {
      throw std::out_of_range("factor word: mode " +
                              std::to_string(f.gen.mode + 1) +
                              " outside 1.." + std::to_string(modes));
    }
    if (f.power < 0) throw std::invalid_argument("negative power in word");
    int& slot = f.gen.barred ? out.bar(f.gen.mode) : out.theta(f.gen.mode);
    slot += f.power;
  }
  return out.within(kprime);
}

}  // namespace

namespace {

std::optional<std::pair<Monomial, cplx>> canonical_term(
    const FactorWord& w, const Deformation& def, int modes) {
  Monomial m;
  if (!accumulate_powers(w, modes, def.kprime(), m)) return std::nullopt;
  return std::make_pair(std::move(m),
                        w.scalar * def.qk_pow(reorder_exponent(w.factors)));
}

}  // namespace

ParaPoly canonicalize_q(const FactorWord& w, const Deformation& def,
                        int modes) {
  ParaPoly r(def, modes);
  if (auto t = canonical_term(w, def, modes)) r.add_term(t->first, t->second);
  return r;
}

std::optional<std::pair<Monomial, cplx>> canonicalize_prescription(
    const FactorWord& w, int modes, int kprime) {
  Monomial m;
  if (!accumulate_powers(w, modes, kprime, m)) return std::nullopt;
  return std::make_pair(std::move(m), w.scalar);
}

ParaPoly multiply(const ParaPoly& a, const ParaPoly& b) {
  require_compatible(a, b);
  ParaPoly r(a.deformation(), a.modes());
  for (const auto& [ma, ca] : a.terms()) {
    FactorWord wa = ma.to_word();
    wa.scalar = ca;
    for (const auto& [mb, cb] : b.terms()) {
      FactorWord w = wa;
      FactorWord wb = mb.to_word();
      wb.scalar = cb;
      w.append(wb);
      if (auto t = canonical_term(w, a.deformation(), a.modes())) {
        r.add_term(t->first, t->second);
      }
    }
  }
  return r;
}

ParaPoly conjugate(const ParaPoly& p) {
  ParaPoly r(p.deformation(), p.modes());
  for (const auto& [m, c] : p.terms()) {
    FactorWord w = m.to_word();
    std::reverse(w.factors.begin(), w.factors.end());
    for (auto& f : w.factors) f.gen.barred = !f.gen.barred;
    w.scalar = std::conj(c);
    if (auto t = canonical_term(w, p.deformation(), p.modes())) {
      r.add_term(t->first, t->second);
    }
  }
  return r;
}

Monomial top_monomial(int modes, int kprime) {
  return Monomial(std::vector<int>(modes, kprime - 1),
                  std::vector<int>(modes, kprime - 1));
}

cplx berezin_full_integral(const ParaPoly& p) {
  return p.coeff(top_monomial(p.modes(), p.deformation().kprime()));
}

ParaPoly weight(const Deformation& def, int modes) {
  if (modes < 1) throw std::invalid_argument("weight: modes must be >= 1");
  const int kp = def.kprime();
  ParaPoly w(def, modes);
  for_each_multi_index(kp, modes, [&](std::size_t, const std::vector<int>& n) {
    Monomial m(modes);
    double c = 1.0;
    for (int i = 0; i < modes; ++i) {
      c *= qfactorial(n[i], def);
      m.theta(i) = m.bar(i) = kp - 1 - n[i];
    }
    w.add_term(m, c);
  });
  return w;
}

cplx inner_product(const ParaPoly& v, const ParaPoly& v2) {
  require_compatible(v, v2);
  if (v.modes() != 1) {
    throw std::invalid_argument(
        "inner product is only defined for a single mode");
  }
  const Deformation& def = v.deformation();
  const ParaPoly cv = conjugate(v);
  const ParaPoly w = weight(def, 1);
  const Monomial top = top_monomial(1, def.kprime());
  cplx sum{};
  for (const auto& [m1, c1] : cv.terms()) {
    for (const auto& [m2, c2] : v2.terms()) {
      for (const auto& [mw, cw] : w.terms()) {
        FactorWord word = m1.to_word();
        word.append(m2.to_word()).append(mw.to_word());
        word.scalar = c1 * c2 * cw;
        auto ordered = canonicalize_prescription(word, 1, def.kprime());
        if (ordered && ordered->first == top) sum += ordered->second;
      }
    }
  }
  return sum;
}

cplx pseudo_norm_sq(const ParaPoly& v) { return inner_product(v, v); }

ParaPoly phi_basis(const Deformation& def, int n) {
  return ParaPoly::monomial(def, Monomial::single(0, n),
                            1.0 / std::sqrt(qfactorial(n, def)));
}

VerificationReport verify_inner_product(const Deformation& def, double tol,
                                        std::uint64_t seed, int samples) {
  VerificationReport report(tol);
  const int kp = def.kprime();
  double ortho = 0.0;
  for (int n = 0; n < kp; ++n) {
    for (int m = 0; m < kp; ++m) {
      const cplx ip = inner_product(phi_basis(def, n), phi_basis(def, m));
      ortho = std::max(ortho, std::abs(ip - cplx(n == m ? 1.0 : 0.0)));
    }
  }
  report.add("(phi_n, phi_m) = delta_nm", ortho);
  std::mt19937_64 rng(seed);
  double imag = 0.0, negative = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx norm = pseudo_norm_sq(random_separated_poly(def, rng));
    imag = std::max(imag, std::abs(norm.imag()));
    negative = std::max(negative, -norm.real());
  }
  const std::string n = " (" + std::to_string(samples) + " random)";
  report.add("pseudo-norm real on separated span" + n, imag);
  report.add("pseudo-norm >= 0 on separated span" + n, std::max(0.0, negative));
  return report;
}

void for_each_multi_index(
    int kprime, int modes,
    const std::function<void(std::size_t, const std::vector<int>&)>& fn) {
  std::vector<int> n(modes, 0);
  std::size_t index = 0;
  while (true) {
    fn(index++, n);
    int i = modes - 1;
    while (i >= 0 && ++n[i] == kprime) n[i--] = 0;
    if (i < 0) break;
  }
}

std::size_t flatten_index(std::span<const int> multi, int kprime) {
  std::size_t index = 0;
  for (int v : multi) index = index * kprime + v;
  return index;
}

std::vector<int> unflatten_index(std::size_t index, int kprime, int modes) {
  std::vector<int> n(modes);
  for (int i = modes - 1; i >= 0; --i) {
    n[i] = static_cast<int>(index % kprime);
    index /= kprime;
  }
  return n;
}

cplx random_coefficient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

ParaPoly random_parapoly(const Deformation& def, int modes,
                         std::mt19937_64& rng) {
  const int kp = def.kprime();
  ParaPoly p(def, modes);
  for_each_multi_index(kp, 2 * modes,
                       [&](std::size_t, const std::vector<int>& e) {
                         Monomial m(std::vector<int>(e.begin(),
                                                     e.begin() + modes),
                                    std::vector<int>(e.begin() + modes,
                                                     e.end()));
                         p.add_term(m, random_coefficient(rng));
                       });
  return p;
}

ParaPoly random_separated_poly(const Deformation& def, std::mt19937_64& rng) {
  ParaPoly p = ParaPoly::constant(def, 1, random_coefficient(rng));
  for (int n = 1; n < def.kprime(); ++n) {
    p.add_term(Monomial::single(n, 0), random_coefficient(rng));
    p.add_term(Monomial::single(0, n), random_coefficient(rng));
  }
  return p;
}

}  // namespace pgq
