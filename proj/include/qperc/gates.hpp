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

#pragma once

// Built-in training sets for the five reference gates and a truth-table
// verification harness.

#include <string>
#include <string_view>
#include <vector>

#include "qperc/perceptron.hpp"

namespace qperc {

/// A named built-in training set and the model mode its weights end up in.
struct GateSpec {
  std::string name;
  TrainingSet training_set;
  ModelMode expected_mode;
};

/// Names accepted by builtin_dataset: not, hadamard, cnot, cswap, xor.
const std::vector<std::string>& builtin_gate_names();

/// Training set for a built-in gate. cswap is the dissipative controlled
/// swap (3 qubits in, 2 out: if the first qubit is high the other two swap,
/// then the control is dropped); xor maps 2 qubits to 1. Unknown name ->
/// NotFoundError listing the valid names.
GateSpec builtin_dataset(std::string_view name);

/// |<a|b>|^2 for normalized states of equal dimension.
double fidelity(const StateVector& a, const StateVector& b);

struct PairRecord {
  std::string input;
  std::string expected;
  std::string predicted;
  double fidelity = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<PairRecord> records;
  std::size_t pass_count = 0;
  std::size_t total = 0;
  double raw_residual = 0.0;
  double f_hat_residual = 0.0;
  double w_new_residual = 0.0;

  bool all_passed() const { return pass_count == total; }
};

/// Runs predict on every input. A pair passes when the fidelity between the
/// renormalized prediction and the target reaches 1 - 1e-9; an all-zero
/// prediction (everything below the measurement threshold) fails.
VerificationReport verify_truth_table(const PerceptronModel& model,
                                      const TrainingSet& ts);

}  // namespace qperc
