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

#include "qperc/perceptron.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qperc {

namespace {

double distance(const StateVector& a, const StateVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TrainingSet::TrainingSet(std::vector<TrainingPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw PreconditionError("TrainingSet: need at least one pair");
  }
  const std::size_t in_dim = pairs_.front().input.dim();
  const std::size_t out_dim = pairs_.front().target.dim();
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const TrainingPair& p = pairs_[i];
    if (p.input.dim() != in_dim) {
      throw DimensionError("TrainingSet: pair " + std::to_string(i + 1) +
                           " has input dim " + std::to_string(p.input.dim()) +
                           ", expected " + std::to_string(in_dim));
    }
    if (p.target.dim() != out_dim) {
      throw DimensionError("TrainingSet: pair " + std::to_string(i + 1) +
                           " has target dim " + std::to_string(p.target.dim()) +
                           ", expected " + std::to_string(out_dim));
    }
    if (!p.input.is_normalized()) {
      throw PreconditionError("TrainingSet: input of pair " + std::to_string(i + 1) +
                              " is not normalized");
    }
    if (!p.target.is_normalized()) {
      throw PreconditionError("TrainingSet: target of pair " + std::to_string(i + 1) +
                              " is not normalized");
    }
  }
}

Matrix synthesize_weights(const TrainingSet& ts, bool scale) {
  Matrix w(ts.target_dim(), ts.input_dim());
  for (const TrainingPair& p : ts.pairs()) {
    w = w + outer_product(p.target, pinv_vector(p.input));
  }
  if (scale) {
    w = (1.0 / std::sqrt(static_cast<double>(ts.size()))) * w;
  }
  return w;
}

std::vector<std::pair<std::size_t, std::size_t>> conflicting_duplicate_inputs(
    const TrainingSet& ts) {
  constexpr double tol = 1e-10;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& pairs = ts.pairs();
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (distance(pairs[i].input, pairs[j].input) <= tol &&
          distance(pairs[i].target, pairs[j].target) > tol) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

Matrix iterative_step(const Matrix& w, const StateVector& x, const StateVector& d,
                      double eta) {
  if (w.cols() != x.dim()) {
    throw DimensionError("iterative_step: weights " + w.shape() +
                         " cannot act on input of dim " + std::to_string(x.dim()));
  }
  if (w.rows() != d.dim()) {
    throw DimensionError("iterative_step: weights " + w.shape() +
                         " do not produce target dim " + std::to_string(d.dim()));
  }
  const StateVector error = d - apply(w, x);
  return w + eta * outer_product(error, dual(x));
}

IterativeResult iterative_train(const IterativeConfig& cfg, const StateVector& x,
                                const StateVector& d) {
  if (!(cfg.eta > 0.0) || cfg.eta > 1.0) {
    throw PreconditionError("iterative_train: eta must lie in (0, 1], got " +
                            std::to_string(cfg.eta));
  }
  if (cfg.initial_weights.empty()) {
    throw PreconditionError("iterative_train: initial weights are required");
  }
  IterativeResult result;
  result.weights = cfg.initial_weights;
  result.trace.reserve(cfg.iterations);
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    result.weights = iterative_step(result.weights, x, d, cfg.eta);
    result.trace.push_back(result.weights);
  }
  return result;
}

PerceptronModel build_model(const Matrix& w, double tol) {
  if (w.empty()) throw PreconditionError("build_model: weight matrix is empty");
  PerceptronModel model;
  model.raw_w = w;
  if (unitarity_residual(w) <= tol) {
    model.mode = ModelMode::kUnitary;
    model.f_hat = Matrix::identity(w.rows());
    model.sigma_new = Matrix::identity(w.rows());
    model.w_new = w;
  } else {
    const SvdResult svd = svd_full(w);
    model.mode = ModelMode::kDecomposed;
    model.f_hat = svd.u;
    model.sigma_new = rect_identity(w.rows(), w.cols());
    model.w_new = svd.v_dagger;
  }
  return model;
}

StateVector forward_raw(const PerceptronModel& model, const StateVector& x) {
  return apply(model.f_hat, apply(model.sigma_new, apply(model.w_new, x)));
}

StateVector measure(const StateVector& v, double threshold) {
  StateVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[i] = v[i].real() > threshold ? 1.0 : 0.0;
  }
  return out;
}

StateVector predict(const PerceptronModel& model, const StateVector& x,
                    bool force_measure) {
  const StateVector raw = forward_raw(model, x);
  if (model.mode == ModelMode::kDecomposed || force_measure) {
    return measure(raw, model.measurement_threshold);
  }
  return raw;
}

int classical_forward(const ClassicalPerceptron& p, const std::vector<int>& inputs) {
  if (inputs.size() != p.weights.size()) {
    throw DimensionError("classical_forward: " + std::to_string(inputs.size()) +
                         " inputs for " + std::to_string(p.weights.size()) +
                         " weights");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    s += p.weights[k] * static_cast<double>(inputs[k]);
  }
  return s >= p.threshold ? 1 : -1;
}

ClassicalTrainResult classical_train(ClassicalPerceptron p,
                                     const std::vector<ClassicalSample>& dataset,
                                     std::size_t max_epochs) {
  ClassicalTrainResult result;
  for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
    bool updated = false;
    for (const ClassicalSample& sample : dataset) {
      const int y = classical_forward(p, sample.inputs);
      if (y == sample.target) continue;
      updated = true;
      const double delta = p.eta * static_cast<double>(sample.target - y);
      for (std::size_t k = 0; k < p.weights.size(); ++k) {
        p.weights[k] += delta * static_cast<double>(sample.inputs[k]);
      }
    }
    result.epochs_run = epoch + 1;
    if (!updated) {
      result.converged = true;
      break;
    }
  }
  result.model = std::move(p);
  return result;
}

}  // namespace qperc
