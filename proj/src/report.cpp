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

#include "pgq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pgq {

void VerificationReport::add(std::string name, double residual) {
  // NaN never passes
  const bool pass = residual <= tolerance_;
  relations_.push_back({std::move(name), residual, pass});
}

void VerificationReport::merge(const VerificationReport& other,
                               const std::string& prefix) {
  for (const auto& r : other.relations_) add(prefix + r.name, r.residual);
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

bool VerificationReport::all_pass() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const RelationResult& r) { return r.pass; });
}

const RelationResult* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(relations_.begin(), relations_.end(),
                         [&](const RelationResult& r) { return r.name == name; });
  return it == relations_.end() ? nullptr : &*it;
}

std::string VerificationReport::pretty() const {
  std::ostringstream os;
  for (const auto& r : relations_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r.residual);
    os << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (residual " << buf
       << ")\n";
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  const auto passed = std::count_if(relations_.begin(), relations_.end(),
                                    [](const RelationResult& r) { return r.pass; });
  os << passed << "/" << relations_.size() << " relations pass at tolerance "
     << tolerance_ << "\n";
  return os.str();
}

}  // namespace pgq
