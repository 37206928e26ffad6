// Copyright 2026 The QIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <Eigen/Core>

#include "json.hpp"
#include "qic/basis.hpp"
#include "qic/hamiltonian.hpp"
#include "qic/jones.hpp"
#include "qic/noise.hpp"
#include "qic/tl_ops.hpp"
#include "qic/verification.hpp"

namespace qic {

using json = nlohmann::json;

// Schemas
//   basis:     {"N", "dimension", "codewords": ["010", ...]}
//   isometry:  {"N", "rows", "cols", "triplets": [[row, col, value], ...]}
//   operator:  {"N", "kind", "rows", "cols", "triplets": [[row, col, re, im], ...]}
//   gate:      {"dim", "sign", "re": [[...]], "im": [[...]]}
//   report:    {"N", "tolerance", "passed", "checks": [{name, max_abs_error, instances, pass}]}
//   jones:     {"value": [re, im], "trace": [re, im], "writhe", "N", "method", "shots_per_state", "std_error"}
//   counts:    {"N", "shots", "counts": {"101": 1024, ...}}
// All row/column indices are 0-based.

json to_json(const QicBasis& basis);
json to_json(const Isometry& v);
json to_json(const AbstractOperator& op);
json to_json(const EmbeddedOperator& op);
json to_json(const VerificationReport& report);
json to_json(const JonesResult& result);
json to_json(const CountsTable& counts);
json to_json(const PauliZMap& terms);

json dense_matrix_json(const Eigen::MatrixXcd& m);

/// Inverse of the operator triplet schema.
SparseMatrixXcd sparse_from_json(const json& j);

/// "bitstring,count,probability" rows with a header line.
std::string to_csv(const CountsTable& counts);

}  // namespace qic
