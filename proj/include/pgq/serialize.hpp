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

#ifndef PGQ_SERIALIZE_HPP
#define PGQ_SERIALIZE_HPP

#include <json.hpp>

#include "pgq/quantization.hpp"
#include "pgq/report.hpp"

namespace pgq {

using Json = nlohmann::ordered_json;

// {"k", "d", "terms": [{"theta", "bar", "re", "im"}]} in canonical order.
Json to_json(const ParaPoly& p);
ParaPoly parapoly_from_json(const Json& j);

// {"k", "d", "dim", "rows": [[{"re", "im"}, ...], ...]}
Json to_json(const FockOperator& a);
FockOperator fock_operator_from_json(const Json& j);

// {"relations": [{"name", "residual", "pass"}], "tolerance"}; a "notes"
// array is appended when the report carries informational lines.
Json to_json(const VerificationReport& r);

}  // namespace pgq

#endif
