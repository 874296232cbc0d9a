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

#ifndef PGQ_QUANTIZATION_HPP
#define PGQ_QUANTIZATION_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "pgq/pgalgebra.hpp"
#include "pgq/report.hpp"

namespace pgq {

enum class Ordering { Antinormal, Left, Right };

const char* to_string(Ordering ord);
Ordering parse_ordering(const std::string& name);

// Dense operator on (C^{k'})^{(x) d}. Basis |n_1 ... n_d> is flattened
// row-major with n_1 most significant.
class FockOperator {
 public:
  FockOperator(const Deformation& def, int modes);
  FockOperator(const Deformation& def, int modes, Eigen::MatrixXcd matrix);

  static FockOperator identity(const Deformation& def, int modes);

  const Deformation& deformation() const { return def_; }
  int modes() const { return modes_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  cplx operator()(Eigen::Index row, Eigen::Index col) const {
    return matrix_(row, col);
  }

  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator*(cplx c) const;
  friend FockOperator operator*(cplx c, const FockOperator& a) { return a * c; }
  FockOperator adjoint() const;
  FockOperator pow(int n) const;

 private:
  void require_compatible(const FockOperator& o) const;

  Deformation def_;
  int modes_;
  Eigen::MatrixXcd matrix_;
};

// Largest entrywise |a - b|.
double max_abs_diff(const FockOperator& a, const FockOperator& b);
double max_abs(const FockOperator& a);
// [a, b] = ab - ba
FockOperator commutator(const FockOperator& a, const FockOperator& b);

// |theta) as a list of paragrassmann components, one per basis vector.
struct CoherentKet {
  Deformation deformation;
  int modes;
  std::vector<ParaPoly> components;
};

CoherentKet coherent_ket(const Deformation& def, int modes);
// Componentwise conjugate of the ket.
CoherentKet coherent_bra(const Deformation& def, int modes);

// Ordered words of the ket and bra components for basis index `multi`,
// as they enter integral kernels (the bra word is the reversed conjugate).
FactorWord ket_word(const Deformation& def, std::span<const int> multi);
FactorWord bra_word(const Deformation& def, std::span<const int> multi);

FockOperator resolution_of_unity(const Deformation& def, int modes);

// Coherent-state quantization A_f. Antinormal orders the whole kernel
// |theta) f w (theta| by the prescription; Left and Right keep the
// prescription inside the kernel and pick up q_k phases when moving f (to
// the left resp. right of w) into place.
FockOperator quantize(const ParaPoly& f, Ordering ord = Ordering::Antinormal);
// Quantizes an unordered word. Under Antinormal the word itself is put in
// prescription order first, so theta_j theta_i and theta_i theta_j give
// the same operator; Left and Right use the algebra product.
FockOperator quantize_word(const FactorWord& w, const Deformation& def,
                           int modes, Ordering ord = Ordering::Antinormal);

// Closed-form annihilation/creation operators on zero-based `mode`.
FockOperator ladder(const Deformation& def, int modes, int mode);
FockOperator ladder_dag(const Deformation& def, int modes, int mode);
// diag(q^{sign * n_mode})
FockOperator q_power_N(const Deformation& def, int modes, int sign, int mode);
FockOperator number_operator(const Deformation& def, int modes, int mode);

// Single mode B_theta = q^{N/2} A_theta, B_bartheta = A_bartheta q^{N/2}.
std::pair<FockOperator, FockOperator> rescale_B(const Deformation& def);

// Closed forms of A_{theta^n bartheta^m} and of A_{bartheta^m} A_{theta^n}.
FockOperator quantize_mixed_monomial(int n, int m, const Deformation& def);
FockOperator reversed_mixed_product(int n, int m, const Deformation& def);

VerificationReport verify_resolution(const Deformation& def, int modes,
                                     double tol = kDefaultTolerance);
VerificationReport verify_relations(const Deformation& def, int modes,
                                    double tol = kDefaultTolerance);
// F_{k'} relations for f- = B_theta, f+ = B_bartheta. The square root in
// the mixed relations is tried on both branches.
VerificationReport check_kfermionic(const Deformation& def,
                                    double tol = kDefaultTolerance,
                                    std::optional<cplx> q_f = std::nullopt);
// Ordering table, mixed-term closed forms, commutator expansion.
VerificationReport verify_ordering_identities(const Deformation& def,
                                   double tol = kDefaultTolerance);

Eigen::MatrixXcd random_matrix(Eigen::Index dim, std::mt19937_64& rng);

}  // namespace pgq

#endif
