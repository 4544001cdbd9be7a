// Copyright 2026 The qperc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperc/gates.hpp"

#include <cmath>

#include "qperc/dirac.hpp"

namespace qperc {

namespace {

TrainingSet make_not() {
  return TrainingSet({
      {basis_ket("0"), basis_ket("1")},
      {basis_ket("1"), basis_ket("0")},
  });
}

TrainingSet make_hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return TrainingSet({
      {basis_ket("0"), StateVector({{h, 0.0}, {h, 0.0}})},
      {basis_ket("1"), StateVector({{h, 0.0}, {-h, 0.0}})},
  });
}

TrainingSet make_cnot() {
  return TrainingSet({
      {basis_ket("00"), basis_ket("00")},
      {basis_ket("01"), basis_ket("01")},
      {basis_ket("10"), basis_ket("11")},
      {basis_ket("11"), basis_ket("10")},
  });
}

TrainingSet make_cswap() {
  return TrainingSet({
      {basis_ket("000"), basis_ket("00")},
      {basis_ket("001"), basis_ket("01")},
      {basis_ket("010"), basis_ket("10")},
      {basis_ket("011"), basis_ket("11")},
      {basis_ket("100"), basis_ket("00")},
      {basis_ket("101"), basis_ket("10")},
      {basis_ket("110"), basis_ket("01")},
      {basis_ket("111"), basis_ket("11")},
  });
}

TrainingSet make_xor() {
  return TrainingSet({
      {basis_ket("00"), basis_ket("0")},
      {basis_ket("01"), basis_ket("1")},
      {basis_ket("10"), basis_ket("1")},
      {basis_ket("11"), basis_ket("0")},
  });
}

}  // namespace

const std::vector<std::string>& builtin_gate_names() {
  static const std::vector<std::string> names = {"not", "hadamard", "cnot", "cswap",
                                                 "xor"};
  return names;
}

GateSpec builtin_dataset(std::string_view name) {
  if (name == "not") return {"not", make_not(), ModelMode::kUnitary};
  if (name == "hadamard") return {"hadamard", make_hadamard(), ModelMode::kUnitary};
  if (name == "cnot") return {"cnot", make_cnot(), ModelMode::kUnitary};
  if (name == "cswap") return {"cswap", make_cswap(), ModelMode::kDecomposed};
  if (name == "xor") return {"xor", make_xor(), ModelMode::kDecomposed};

  std::string valid;
  for (const std::string& n : builtin_gate_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw NotFoundError("unknown gate '" + std::string(name) + "'; valid names: " +
                      valid);
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

VerificationReport verify_truth_table(const PerceptronModel& model,
                                      const TrainingSet& ts) {
  VerificationReport report;
  report.total = ts.size();
  report.raw_residual = unitarity_residual(model.raw_w);
  report.f_hat_residual = unitarity_residual(model.f_hat);
  report.w_new_residual = unitarity_residual(model.w_new);

  for (const TrainingPair& pair : ts.pairs()) {
    PairRecord rec;
    rec.input = format_state(pair.input);
    rec.expected = format_state(pair.target);

    const StateVector predicted = predict(model, pair.input);
    rec.predicted = format_state(predicted);
    if (norm(predicted) == 0.0) {
      rec.fidelity = 0.0;  // measurement wiped everything out
      rec.passed = false;
    } else {
      rec.fidelity = fidelity(normalized(predicted), pair.target);
      rec.passed = rec.fidelity >= 1.0 - 1e-9;
    }
    if (rec.passed) ++report.pass_count;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace qperc
