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

// Single-layer quantum perceptron: analytic weight synthesis from training
// kets, an iterative delta-rule variant, SVD-based unitarization of
// non-unitary weights, thresholded measurement, and a classical-rule
// baseline for contrast.

#include <cstddef>
#include <utility>
#include <vector>

#include "qperc/decomp.hpp"
#include "qperc/linalg.hpp"

namespace qperc {

/// One training example. Input and target are kets and may live in spaces
/// of different size (a dissipative map drops qubits).
struct TrainingPair {
  StateVector input;
  StateVector target;
};

/// Ordered, non-empty list of training pairs with consistent dimensions on
/// each side. Construction validates that every ket is normalized within
/// 1e-10; violations raise PreconditionError, mismatched dims raise
/// DimensionError.
class TrainingSet {
 public:
  explicit TrainingSet(std::vector<TrainingPair> pairs);

  const std::vector<TrainingPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t input_dim() const { return pairs_.front().input.dim(); }
  std::size_t target_dim() const { return pairs_.front().target.dim(); }

 private:
  std::vector<TrainingPair> pairs_;
};

/// Settings for the iterative rule. eta must lie in (0, 1].
struct IterativeConfig {
  double eta = 0.1;
  std::size_t iterations = 25;
  Matrix initial_weights;
};

enum class ModelMode { kUnitary, kDecomposed };

/// Trained perceptron. In kUnitary mode the raw weights already evolve
/// states legally and f_hat / sigma_new are identities. In kDecomposed mode
/// the raw weights were split by SVD into unitary f_hat and w_new with the
/// singular values swapped out for a partial isometry, and outputs pass
/// through thresholded measurement.
struct PerceptronModel {
  ModelMode mode = ModelMode::kUnitary;
  Matrix f_hat;
  Matrix sigma_new;
  Matrix w_new;
  Matrix raw_w;
  double measurement_threshold = 0.5;
};

/// Weight matrix as the sum over pairs of |target><input-pseudoinverse|,
/// shaped target_dim x input_dim. With scale set, the sum is multiplied by
/// 1/sqrt(N); decomposed-mode predictions are invariant to that positive
/// factor since the singular values get discarded anyway.
Matrix synthesize_weights(const TrainingSet& ts, bool scale = false);

/// Index pairs (i, j) whose inputs coincide but whose targets differ, which
/// makes exact interpolation impossible. Callers surface these as warnings;
/// the synthesis itself just sums.
std::vector<std::pair<std::size_t, std::size_t>> conflicting_duplicate_inputs(
    const TrainingSet& ts);

/// One delta-rule update: w + eta * |d - w x><x|.
Matrix iterative_step(const Matrix& w, const StateVector& x, const StateVector& d,
                      double eta);

struct IterativeResult {
  Matrix weights;            // after the last step
  std::vector<Matrix> trace; // weights after every step, so trace.size() == iterations
};

/// Repeats iterative_step on a single (input, target) pair.
IterativeResult iterative_train(const IterativeConfig& cfg, const StateVector& x,
                                const StateVector& d);

/// Packages weights for prediction. Weights whose unitarity residual is
/// within tol are kept as-is; anything else is decomposed, with f_hat = u,
/// w_new = v_dagger and sigma_new the same-shaped partial isometry.
PerceptronModel build_model(const Matrix& w, double tol = kDefaultUnitaryTol);

/// f_hat * sigma_new * w_new applied to x, no measurement.
StateVector forward_raw(const PerceptronModel& model, const StateVector& x);

/// Componentwise threshold: 1 where the real part exceeds threshold
/// (strictly), else 0. Real part, not magnitude, so negative amplitudes
/// always map to 0.
StateVector measure(const StateVector& v, double threshold);

/// Forward pass with measurement applied in decomposed mode (or always,
/// with force_measure). Unitary-mode outputs are returned as raw
/// amplitudes: thresholding them would wreck legitimate superposition
/// outputs.
StateVector predict(const PerceptronModel& model, const StateVector& x,
                    bool force_measure = false);

// -- classical reference ----------------------------------------------------

/// Classical integrate-and-fire neuron over +/-1 signals.
struct ClassicalPerceptron {
  std::vector<double> weights;
  double threshold = 0.0;
  double eta = 0.1;
};

struct ClassicalSample {
  std::vector<int> inputs;  // each +1 or -1
  int target = 1;           // +1 or -1
};

/// +1 if sum w_k x_k >= threshold, else -1.
int classical_forward(const ClassicalPerceptron& p, const std::vector<int>& inputs);

struct ClassicalTrainResult {
  ClassicalPerceptron model;
  bool converged = false;     // some epoch ran with zero updates
  std::size_t epochs_run = 0;
};

/// Per-example rule w_k += eta * (d - y) * x_k until an epoch passes with
/// no updates or the budget runs out. The threshold never moves.
ClassicalTrainResult classical_train(ClassicalPerceptron p,
                                     const std::vector<ClassicalSample>& dataset,
                                     std::size_t max_epochs);

}  // namespace qperc
