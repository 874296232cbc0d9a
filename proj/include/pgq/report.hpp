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

#ifndef PGQ_REPORT_HPP
#define PGQ_REPORT_HPP

#include <string>
#include <vector>

#include "pgq/qnum.hpp"

namespace pgq {

struct RelationResult {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

// Residuals of algebraic identity checks. An entry passes exactly when its
// residual is at most the tolerance.
class VerificationReport {
 public:
  explicit VerificationReport(double tolerance = kDefaultTolerance)
      : tolerance_(tolerance) {}

  void add(std::string name, double residual);
  // Informational lines that do not take part in pass/fail.
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const VerificationReport& other, const std::string& prefix = "");

  double tolerance() const { return tolerance_; }
  const std::vector<RelationResult>& relations() const { return relations_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool all_pass() const;
  const RelationResult* find(const std::string& name) const;

  std::string pretty() const;

 private:
  double tolerance_;
  std::vector<RelationResult> relations_;
  std::vector<std::string> notes_;
};

}  // namespace pgq

#endif
