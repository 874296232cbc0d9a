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

#ifndef PGQ_PGALGEBRA_HPP
#define PGQ_PGALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgq/qnum.hpp"
#include "pgq/report.hpp"

namespace pgq {

// Coefficients below this magnitude are dropped after every operation.
constexpr double kPruneThreshold = 1e-14;

// theta_i (barred == false) or its conjugate bar-theta_i. Modes are
// zero-based internally; the expression syntax and JSON use 1-based
// generator names only in `th1`, `bth2` tokens.
struct Generator {
  int mode = 0;
  bool barred = false;

  // Canonical position: all unbarred generators first, each group by
  // increasing mode.
  int order_key() const { return (barred ? 1 << 16 : 0) + mode; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Exponent e in x y = q_k^e y x for the generators x, y.
int exchange_exponent(Generator x, Generator y);

struct Factor {
  Generator gen;
  int power = 1;
};

// An ordered product scalar * g_1^{p_1} g_2^{p_2} ... that has not been
// put into canonical order yet.
struct FactorWord {
  std::vector<Factor> factors;
  cplx scalar{1.0, 0.0};

  FactorWord& push(Generator g, int power = 1) {
    factors.push_back({g, power});
    return *this;
  }
  FactorWord& append(const FactorWord& other);
};

// theta_1^{a_1} ... theta_d^{a_d} bar-theta_1^{b_1} ... bar-theta_d^{b_d}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int modes) : theta_(modes, 0), bar_(modes, 0) {}
  Monomial(std::vector<int> theta, std::vector<int> bar);

  static Monomial unit(int modes) { return Monomial(modes); }
  // Single-mode theta^s bar-theta^t.
  static Monomial single(int s, int t) { return Monomial({s}, {t}); }

  int modes() const { return static_cast<int>(theta_.size()); }
  const std::vector<int>& theta() const { return theta_; }
  const std::vector<int>& bar() const { return bar_; }
  int theta(int mode) const { return theta_[mode]; }
  int bar(int mode) const { return bar_[mode]; }
  int& theta(int mode) { return theta_[mode]; }
  int& bar(int mode) { return bar_[mode]; }

  bool within(int kprime) const;
  bool has_bar() const;
  bool has_theta() const;

  // Canonically ordered word with unit scalar.
  FactorWord to_word() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> theta_;
  std::vector<int> bar_;
};

class ParaPoly {
 public:
  using TermMap = std::map<Monomial, cplx>;

  ParaPoly(const Deformation& def, int modes);

  static ParaPoly constant(const Deformation& def, int modes, cplx c);
  static ParaPoly generator(const Deformation& def, int modes, Generator g,
                            int power = 1);
  static ParaPoly monomial(const Deformation& def, const Monomial& m,
                           cplx c = 1.0);

  const Deformation& deformation() const { return def_; }
  int modes() const { return modes_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  cplx coeff(const Monomial& m) const;
  // Accumulates c into the coefficient of m; monomials with a power >= k'
  // vanish and are ignored.
  void add_term(const Monomial& m, cplx c);

  ParaPoly operator+(const ParaPoly& o) const;
  ParaPoly operator-(const ParaPoly& o) const;
  ParaPoly operator-() const;
  ParaPoly operator*(cplx c) const;
  friend ParaPoly operator*(cplx c, const ParaPoly& p) { return p * c; }
  // Algebra product.
  ParaPoly operator*(const ParaPoly& o) const;

  bool compatible(const ParaPoly& o) const {
    return def_ == o.def_ && modes_ == o.modes_;
  }

 private:
  Deformation def_;
  int modes_;
  TermMap terms_;
};

// Largest coefficientwise |a - b|.
double max_abs_diff(const ParaPoly& a, const ParaPoly& b);

// Sum of q_k exponents collected when bubbling the word into canonical
// order, restricted to the position pairs (i, j), i < j, accepted by
// `counted`. Phases only depend on which pairs get inverted, so this is
// path independent.
long reorder_exponent(std::span<const Factor> word,
                      const std::function<bool(std::size_t, std::size_t)>&
                          counted = nullptr);

// Sorts the word into canonical order with algebra phases; zero when a
// power reaches k'.
ParaPoly canonicalize_q(const FactorWord& w, const Deformation& def,
                        int modes);

// Sorts the word into canonical order without phases (the antinormal
// prescription). nullopt when a power reaches k'.
std::optional<std::pair<Monomial, cplx>> canonicalize_prescription(
    const FactorWord& w, int modes, int kprime);

ParaPoly multiply(const ParaPoly& a, const ParaPoly& b);

// Antilinear conjugation: conjugates coefficients, swaps theta_i and
// bar-theta_i, reverses each word and reorders it with canonicalize_q.
ParaPoly conjugate(const ParaPoly& p);

// Coefficient of theta_1^{k'-1}..theta_d^{k'-1} bar-theta_1^{k'-1}..
Monomial top_monomial(int modes, int kprime);
cplx berezin_full_integral(const ParaPoly& p);

ParaPoly weight(const Deformation& def, int modes);

// Single-mode inner product with the antinormal prescription applied to
// conj(v) v2 w.
cplx inner_product(const ParaPoly& v, const ParaPoly& v2);
cplx pseudo_norm_sq(const ParaPoly& v);

// phi_n = bar-theta^n / sqrt([n]_q!).
ParaPoly phi_basis(const Deformation& def, int n);

// (phi_n, phi_m) = delta_nm and pseudo-norm reality/positivity on
// `samples` random elements a_0 + sum a_n theta^n + sum b_n bar-theta^n.
VerificationReport verify_inner_product(const Deformation& def,
                                        double tol = kDefaultTolerance,
                                        std::uint64_t seed = 0,
                                        int samples = 100);

// Calls fn(index, multi_index) over {0..kprime-1}^modes in row-major order
// with mode 0 most significant.
void for_each_multi_index(
    int kprime, int modes,
    const std::function<void(std::size_t, const std::vector<int>&)>& fn);
std::size_t flatten_index(std::span<const int> multi, int kprime);
std::vector<int> unflatten_index(std::size_t index, int kprime, int modes);

// Complex coefficients with real and imaginary parts uniform in [-1, 1].
cplx random_coefficient(std::mt19937_64& rng);
ParaPoly random_parapoly(const Deformation& def, int modes,
                         std::mt19937_64& rng);
// Random element a_0 + sum a_n theta^n + sum b_n bar-theta^n.
ParaPoly random_separated_poly(const Deformation& def, std::mt19937_64& rng);

}  // namespace pgq

#endif
