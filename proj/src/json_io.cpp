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

#include "qic/json_io.hpp"

#include <sstream>
#include <vector>

#include "qic/errors.hpp"

namespace qic {

namespace {

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json sparse_triplets(const SparseMatrixXcd& m) {
  json triplets = json::array();
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrixXcd::InnerIterator it(m, k); it; ++it) {
      if (it.value() == std::complex<double>(0.0)) continue;
      triplets.push_back(json::array({it.row(), it.col(), it.value().real(), it.value().imag()}));
    }
  }
  return triplets;
}

}  // namespace

json to_json(const QicBasis& basis) {
  json words = json::array();
  for (const auto& w : basis.codewords()) words.push_back(w.str());
  return {{"N", basis.num_qubits()}, {"dimension", basis.size()}, {"codewords", std::move(words)}};
}

json to_json(const Isometry& v) {
  json triplets = json::array();
  for (Eigen::Index k = 0; k < v.matrix.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(v.matrix, k); it; ++it) {
      triplets.push_back(json::array({it.row(), it.col(), it.value()}));
    }
  }
  return {{"N", v.num_qubits}, {"rows", v.matrix.rows()}, {"cols", v.matrix.cols()}, {"triplets", triplets}};
}

json to_json(const AbstractOperator& op) {
  const SparseMatrixXcd sparse = op.matrix.sparseView();
  return {{"N", op.num_qubits},
          {"kind", to_string(op.kind)},
          {"rows", op.matrix.rows()},
          {"cols", op.matrix.cols()},
          {"triplets", sparse_triplets(sparse)}};
}

json to_json(const EmbeddedOperator& op) {
  return {{"N", op.num_qubits},
          {"kind", "embedded"},
          {"rows", op.matrix.rows()},
          {"cols", op.matrix.cols()},
          {"triplets", sparse_triplets(op.matrix)}};
}

json dense_matrix_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row_re = json::array(), row_im = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name},
                      {"max_abs_error", c.max_abs_error},
                      {"instances", c.instances},
                      {"pass", c.pass}});
  }
  return {{"N", report.num_qubits()},
          {"tolerance", report.tolerance()},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

json to_json(const JonesResult& r) {
  json j = {{"value", complex_pair(r.value)},
            {"trace", complex_pair(r.trace)},
            {"writhe", r.writhe},
            {"N", r.num_qubits},
            {"method", to_string(r.method)}};
  j["shots_per_state"] = r.shots_per_state ? json(*r.shots_per_state) : json(nullptr);
  j["std_error"] = r.std_error ? json(*r.std_error) : json(nullptr);
  return j;
}

json to_json(const CountsTable& counts) {
  json c = json::object();
  for (const auto& [bits, n] : counts.counts) c[bits] = n;
  return {{"N", counts.num_qubits}, {"shots", counts.shots}, {"counts", std::move(c)}};
}

json to_json(const PauliZMap& terms) {
  json j = json::object();
  for (const auto& [key, coeff] : terms) j[key] = coeff;
  return j;
}

SparseMatrixXcd sparse_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    std::vector<Eigen::Triplet<std::complex<double>>> triplets;
    for (const auto& t : j.at("triplets")) {
      triplets.emplace_back(t.at(0).get<Eigen::Index>(), t.at(1).get<Eigen::Index>(),
                            std::complex<double>(t.at(2).get<double>(), t.at(3).get<double>()));
    }
    SparseMatrixXcd m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("operator json: ") + e.what());
  }
}

std::string to_csv(const CountsTable& counts) {
  std::ostringstream out;
  out.precision(17);
  out << "bitstring,count,probability\n";
  for (const auto& [bits, n] : counts.counts) out << bits << ',' << n << ',' << counts.frequency(bits) << '\n';
  return out.str();
}

}  // namespace qic
