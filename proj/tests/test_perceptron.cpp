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

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qperc/dirac.hpp"
#include "qperc/gates.hpp"
#include "qperc/perceptron.hpp"
#include "test_helpers.hpp"

using namespace qperc;
using namespace qperc::testing;

namespace {

Matrix initial_demo_weights() { return real_matrix(2, 2, {1, 0, 0, -1}); }

// Closed form for single-pair training: only the column selected by the
// basis input moves, and it decays toward the target geometrically,
//   col(t) = d + (col(0) - d) * (1 - eta)^t.
// Unrolling one step of the rule on basis input |k>:
//   col(t+1) = col(t) + eta (d - col(t)) = d + (col(t) - d)(1 - eta).
Matrix closed_form_weights(const Matrix& w0, std::size_t col, const StateVector& d,
                           double eta, std::size_t t) {
  Matrix w = w0;
  const double decay = std::pow(1.0 - eta, static_cast<double>(t));
  for (std::size_t i = 0; i < w.rows(); ++i) {
    w(i, col) = d[i] + (w0(i, col) - d[i]) * decay;
  }
  return w;
}

}  // namespace

TEST_CASE("synthesize_weights reproduces the reference gates") {
  const Matrix w_not = synthesize_weights(builtin_dataset("not").training_set);
  CHECK(max_abs_diff(w_not, real_matrix(2, 2, {0, 1, 1, 0})) == 0.0);

  const double h = 1.0 / std::sqrt(2.0);
  const Matrix w_h = synthesize_weights(builtin_dataset("hadamard").training_set);
  CHECK(max_abs_diff(w_h, real_matrix(2, 2, {h, h, h, -h})) < 1e-15);

  const Matrix w_cnot = synthesize_weights(builtin_dataset("cnot").training_set);
  CHECK(max_abs_diff(w_cnot, real_matrix(4, 4,
                                         {1, 0, 0, 0,
                                          0, 1, 0, 0,
                                          0, 0, 0, 1,
                                          0, 0, 1, 0})) == 0.0);
}

TEST_CASE("synthesize_weights on the dissipative gates") {
  // Summing |target><input| over the 8 controlled-swap pairs puts a single 1
  // in each input column, two per output row.
  const Matrix w = synthesize_weights(builtin_dataset("cswap").training_set);
  REQUIRE(w.rows() == 4);
  REQUIRE(w.cols() == 8);
  Matrix expected(4, 8);
  const std::size_t ones[8][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3},
                                  {0, 4}, {2, 5}, {1, 6}, {3, 7}};
  for (const auto& rc : ones) expected(rc[0], rc[1]) = 1.0;
  CHECK(max_abs_diff(w, expected) == 0.0);

  const Matrix w_xor = synthesize_weights(builtin_dataset("xor").training_set);
  CHECK(max_abs_diff(w_xor, real_matrix(2, 4, {1, 0, 0, 1, 0, 1, 1, 0})) == 0.0);

  const Matrix w_xor_scaled =
      synthesize_weights(builtin_dataset("xor").training_set, /*scale=*/true);
  CHECK(max_abs_diff(w_xor_scaled, real_matrix(2, 4, {0.5, 0, 0, 0.5, 0, 0.5, 0.5, 0})) ==
        0.0);
}

TEST_CASE("training set validation") {
  CHECK_THROWS_AS(TrainingSet({}), PreconditionError);
  CHECK_THROWS_AS(TrainingSet({{real_vector({0.5, 0.5}), basis_ket("0")}}),
                  PreconditionError);
  CHECK_THROWS_AS(TrainingSet({{basis_ket("0"), basis_ket("0")},
                               {basis_ket("01"), basis_ket("0")}}),
                  DimensionError);
  CHECK_THROWS_AS(TrainingSet({{basis_ket("0"), basis_ket("0")},
                               {basis_ket("1"), basis_ket("01")}}),
                  DimensionError);
}

TEST_CASE("conflicting duplicate inputs are reported, not rejected") {
  const TrainingSet conflicted({{basis_ket("0"), basis_ket("0")},
                                {basis_ket("0"), basis_ket("1")},
                                {basis_ket("1"), basis_ket("1")}});
  const auto conflicts = conflicting_duplicate_inputs(conflicted);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0] == std::pair<std::size_t, std::size_t>{0, 1});
  // The synthesis still sums.
  CHECK(max_abs_diff(synthesize_weights(conflicted),
                     real_matrix(2, 2, {1, 0, 1, 1})) == 0.0);

  CHECK(conflicting_duplicate_inputs(builtin_dataset("cswap").training_set).empty());
  // Duplicate inputs with matching targets are fine.
  const TrainingSet repeated({{basis_ket("0"), basis_ket("1")},
                              {basis_ket("0"), basis_ket("1")}});
  CHECK(conflicting_duplicate_inputs(repeated).empty());
}

TEST_CASE("iterative_step single update") {
  const Matrix w1 = iterative_step(initial_demo_weights(), basis_ket("1"),
                                   basis_ket("0"), 0.1);
  CHECK(max_abs_diff(w1, real_matrix(2, 2, {1, 0.1, 0, -0.9})) < 1e-12);

  // eta = 0 leaves the weights untouched.
  CHECK(max_abs_diff(iterative_step(initial_demo_weights(), basis_ket("1"),
                                    basis_ket("0"), 0.0),
                     initial_demo_weights()) == 0.0);

  // Weights that already map x to d gain a zero correction.
  const Matrix x = real_matrix(2, 2, {0, 1, 1, 0});
  CHECK(max_abs_diff(iterative_step(x, basis_ket("0"), basis_ket("1"), 0.1), x) == 0.0);

  CHECK_THROWS_AS(iterative_step(initial_demo_weights(), basis_ket("01"),
                                 basis_ket("0"), 0.1),
                  DimensionError);
  CHECK_THROWS_AS(iterative_step(initial_demo_weights(), basis_ket("1"),
                                 basis_ket("01"), 0.1),
                  DimensionError);
}

TEST_CASE("iterative_train matches the 25-step runs and the closed form") {
  IterativeConfig cfg;
  cfg.initial_weights = initial_demo_weights();

  SUBCASE("target |0> on input |1>") {
    const StateVector x = basis_ket("1");
    const StateVector d = basis_ket("0");
    const IterativeResult r = iterative_train(cfg, x, d);
    REQUIRE(r.trace.size() == 25);
    CHECK(max_abs_diff(r.weights, real_matrix(2, 2, {1, 0.9282102, 0, -0.0717898})) <
          1e-6);
    for (std::size_t t = 0; t < 25; ++t) {
      CHECK(max_abs_diff(r.trace[t], closed_form_weights(cfg.initial_weights, 1, d,
                                                         0.1, t + 1)) < 1e-9);
    }
  }

  SUBCASE("equal-superposition target on input |0>") {
    const double h = 1.0 / std::sqrt(2.0);
    const StateVector x = basis_ket("0");
    const StateVector d = real_vector({h, h});
    const IterativeResult r = iterative_train(cfg, x, d);
    CHECK(max_abs_diff(r.weights,
                       real_matrix(2, 2, {0.72813353, 0, 0.65634373, -1})) < 1e-6);
    for (std::size_t t = 0; t < 25; ++t) {
      CHECK(max_abs_diff(r.trace[t], closed_form_weights(cfg.initial_weights, 0, d,
                                                         0.1, t + 1)) < 1e-9);
    }
  }

  SUBCASE("error norm decays as (1 - eta)^t") {
    auto rng = make_rng(40);
    const StateVector x = basis_ket("1");
    const StateVector d = random_state(rng, 2);
    const IterativeResult r = iterative_train(cfg, x, d);
    const double initial = norm(d - apply(cfg.initial_weights, x));
    for (std::size_t t = 0; t < 25; ++t) {
      const double err = norm(d - apply(r.trace[t], x));
      CHECK(std::abs(err - initial * std::pow(0.9, static_cast<double>(t + 1))) < 1e-9);
    }
  }

  SUBCASE("bad configs are rejected") {
    cfg.eta = 0.0;
    CHECK_THROWS_AS(iterative_train(cfg, basis_ket("1"), basis_ket("0")),
                    PreconditionError);
    cfg.eta = 1.5;
    CHECK_THROWS_AS(iterative_train(cfg, basis_ket("1"), basis_ket("0")),
                    PreconditionError);
    cfg.eta = 0.1;
    cfg.initial_weights = Matrix();
    CHECK_THROWS_AS(iterative_train(cfg, basis_ket("1"), basis_ket("0")),
                    PreconditionError);
  }
}

TEST_CASE("build_model keeps unitary weights whole") {
  const Matrix x = real_matrix(2, 2, {0, 1, 1, 0});
  const PerceptronModel model = build_model(x);
  CHECK(model.mode == ModelMode::kUnitary);
  CHECK(max_abs_diff(model.f_hat, Matrix::identity(2)) == 0.0);
  CHECK(max_abs_diff(model.sigma_new, Matrix::identity(2)) == 0.0);
  CHECK(max_abs_diff(model.w_new, x) == 0.0);
  CHECK(max_abs_diff(model.raw_w, x) == 0.0);
  CHECK(model.measurement_threshold == 0.5);
}

TEST_CASE("build_model decomposes the scaled xor weight") {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix w = real_matrix(2, 4, {0.5, 0, 0, 0.5, 0, 0.5, 0.5, 0});
  const PerceptronModel model = build_model(w);
  REQUIRE(model.mode == ModelMode::kDecomposed);
  CHECK(max_abs_diff(model.sigma_new, real_matrix(2, 4, {1, 0, 0, 0, 0, 1, 0, 0})) ==
        0.0);
  CHECK(unitarity_residual(model.w_new) <= 1e-10);
  CHECK(unitarity_residual(model.f_hat) <= 1e-10);
  // First two rows of w_new are the raw rows renormalized to unit length.
  CHECK(max_abs_diff(Matrix(2, 4,
                            {model.w_new(0, 0), model.w_new(0, 1), model.w_new(0, 2),
                             model.w_new(0, 3), model.w_new(1, 0), model.w_new(1, 1),
                             model.w_new(1, 2), model.w_new(1, 3)}),
                     real_matrix(2, 4, {h, 0, 0, h, 0, h, h, 0})) < 1e-12);
  // Soundness: f_hat * diag(sigma) * w_new rebuilds the raw weights. The
  // sigma_new substitution is the step that intentionally changes values.
  const SvdResult svd = svd_full(w);
  const Matrix rebuilt =
      mat_mul(mat_mul(model.f_hat, diag_rect(svd.sigma, 2, 4)), model.w_new);
  CHECK(frobenius_distance(rebuilt, w) <= 1e-10);
}

TEST_CASE("build_model decomposes the controlled-swap weight") {
  const Matrix w = synthesize_weights(builtin_dataset("cswap").training_set);
  const PerceptronModel model = build_model(w);
  REQUIRE(model.mode == ModelMode::kDecomposed);
  CHECK(model.w_new.rows() == 8);
  CHECK(model.f_hat.rows() == 4);
  CHECK(unitarity_residual(model.w_new) <= 1e-10);
  CHECK(unitarity_residual(model.f_hat) <= 1e-10);
  const SvdResult svd = svd_full(w);
  const Matrix rebuilt =
      mat_mul(mat_mul(model.f_hat, diag_rect(svd.sigma, 4, 8)), model.w_new);
  CHECK(frobenius_distance(rebuilt, w) <= 1e-10);
}

TEST_CASE("forward_raw") {
  const double h = 1.0 / std::sqrt(2.0);
  const PerceptronModel hadamard =
      build_model(synthesize_weights(builtin_dataset("hadamard").training_set));
  CHECK(max_abs_diff(forward_raw(hadamard, basis_ket("0")), real_vector({h, h})) <
        1e-12);

  const PerceptronModel xor_model = build_model(
      synthesize_weights(builtin_dataset("xor").training_set, /*scale=*/true));
  // Column 2 of w_new, truncated by sigma_new: amplitude 1/sqrt(2) on |1>.
  const StateVector out = forward_raw(xor_model, basis_ket("01"));
  CHECK(std::abs(out[0]) < 1e-12);
  CHECK(std::abs(out[1] - Complex{h, 0}) < 1e-12);

  const PerceptronModel id_model = build_model(Matrix::identity(4));
  auto rng = make_rng(41);
  const StateVector v = random_state(rng, 4);
  CHECK(max_abs_diff(forward_raw(id_model, v), v) == 0.0);

  CHECK_THROWS_AS(forward_raw(xor_model, basis_ket("0")), DimensionError);
}

TEST_CASE("measure thresholds the real part, strictly") {
  CHECK(max_abs_diff(measure(real_vector({0.70710678, 0}), 0.5), real_vector({1, 0})) ==
        0.0);
  // Exactly at the threshold maps to 0.
  CHECK(max_abs_diff(measure(real_vector({0.5, 0.5}), 0.5), real_vector({0, 0})) ==
        0.0);
  // Negative real parts map to 0 no matter the magnitude; imaginary parts
  // are ignored.
  CHECK(max_abs_diff(measure(real_vector({-0.70710678, 0.9}), 0.5),
                     real_vector({0, 1})) == 0.0);
  CHECK(max_abs_diff(measure(StateVector({Complex{0.1, 0.99}, Complex{0.6, 0}}), 0.5),
                     real_vector({0, 1})) == 0.0);
}

TEST_CASE("measure is idempotent for thresholds in (0,1)") {
  auto rng = make_rng(42);
  std::uniform_real_distribution<double> thr(0.01, 0.99);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector v = random_state(rng, 1 + trial % 8);
    const double t = thr(rng);
    const StateVector once = measure(v, t);
    const StateVector twice = measure(once, t);
    CHECK(max_abs_diff(once, twice) == 0.0);
  }
}

TEST_CASE("predict") {
  const PerceptronModel xor_model =
      build_model(synthesize_weights(builtin_dataset("xor").training_set));
  CHECK(max_abs_diff(predict(xor_model, basis_ket("01")), basis_ket("1")) == 0.0);
  CHECK(max_abs_diff(predict(xor_model, basis_ket("11")), basis_ket("0")) == 0.0);

  const PerceptronModel cswap_model =
      build_model(synthesize_weights(builtin_dataset("cswap").training_set));
  CHECK(max_abs_diff(predict(cswap_model, basis_ket("101")), basis_ket("10")) == 0.0);

  // Unitary mode returns raw amplitudes: thresholding a legitimate
  // superposition output would denormalize it.
  const double h = 1.0 / std::sqrt(2.0);
  const PerceptronModel hadamard =
      build_model(synthesize_weights(builtin_dataset("hadamard").training_set));
  CHECK(max_abs_diff(predict(hadamard, basis_ket("0")), real_vector({h, h})) < 1e-12);
  // ... unless measurement is forced.
  CHECK(max_abs_diff(predict(hadamard, basis_ket("0"), /*force_measure=*/true),
                     real_vector({1, 1})) == 0.0);
}

TEST_CASE("interpolation: orthonormal inputs reproduce their targets") {
  auto rng = make_rng(43);

  SUBCASE("exact for basis-ket inputs") {
    std::uniform_int_distribution<std::size_t> qubits(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t in_dim = std::size_t{1} << qubits(rng);
      const std::size_t out_dim = std::size_t{1} << qubits(rng);
      std::vector<std::size_t> perm(in_dim);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<TrainingPair> pairs;
      for (std::size_t k = 0; k < in_dim; ++k) {
        StateVector input(in_dim);
        input[perm[k]] = 1.0;
        pairs.push_back({input, random_state(rng, out_dim)});
      }
      const TrainingSet ts(pairs);
      const Matrix w = synthesize_weights(ts);
      for (const TrainingPair& p : ts.pairs()) {
        CHECK(max_abs_diff(apply(w, p.input), p.target) == 0.0);
      }
    }
  }

  SUBCASE("within 1e-9 for rotated orthonormal inputs") {
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t in_dim = dim(rng);
      const std::size_t out_dim = dim(rng);
      const Matrix frame = random_unitary(rng, in_dim);
      std::vector<TrainingPair> pairs;
      for (std::size_t k = 0; k < in_dim; ++k) {
        StateVector input(in_dim);
        for (std::size_t r = 0; r < in_dim; ++r) input[r] = frame(r, k);
        pairs.push_back({input, random_state(rng, out_dim)});
      }
      const TrainingSet ts(pairs);
      const Matrix w = synthesize_weights(ts);
      for (const TrainingPair& p : ts.pairs()) {
        CHECK(max_abs_diff(apply(w, p.input), p.target) < 1e-9);
      }
    }
  }
}

TEST_CASE("basis-permutation training sets synthesize permutation matrices") {
  auto rng = make_rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::size_t{1} << (1 + trial % 3);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<TrainingPair> pairs;
    for (std::size_t k = 0; k < n; ++k) {
      StateVector input(n), target(n);
      input[k] = 1.0;
      target[perm[k]] = 1.0;
      pairs.push_back({input, target});
    }
    const Matrix w = synthesize_weights(TrainingSet(pairs));
    CHECK(unitarity_residual(w) <= 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(w(i, j) == (perm[j] == i ? Complex{1, 0} : Complex{0, 0}));
      }
    }
  }
}

TEST_CASE("decomposed-mode predictions ignore positive weight scaling") {
  auto rng = make_rng(45);
  std::uniform_real_distribution<double> scale(0.05, 10.0);
  for (const char* gate : {"xor", "cswap"}) {
    const TrainingSet& ts = builtin_dataset(gate).training_set;
    const Matrix w = synthesize_weights(ts);
    for (int trial = 0; trial < 10; ++trial) {
      const double c = scale(rng);
      const PerceptronModel base = build_model(w);
      const PerceptronModel scaled = build_model(c * w);
      REQUIRE(base.mode == ModelMode::kDecomposed);
      REQUIRE(scaled.mode == ModelMode::kDecomposed);
      for (const TrainingPair& p : ts.pairs()) {
        CHECK(max_abs_diff(predict(base, p.input), predict(scaled, p.input)) == 0.0);
      }
    }
  }
}

TEST_CASE("classical_forward") {
  const ClassicalPerceptron p{{1.0, 1.0}, 1.5, 0.1};
  CHECK(classical_forward(p, {1, 1}) == 1);
  CHECK(classical_forward(p, {1, -1}) == -1);

  const ClassicalPerceptron zero{{0.0, 0.0}, 0.0, 0.1};
  CHECK(classical_forward(zero, {1, -1}) == 1);  // 0 >= 0

  CHECK_THROWS_AS(classical_forward(p, {1, 1, 1}), DimensionError);
}

TEST_CASE("classical_train separable vs not") {
  const std::vector<ClassicalSample> and_data = {
      {{-1, -1}, -1}, {{-1, 1}, -1}, {{1, -1}, -1}, {{1, 1}, 1}};
  const std::vector<ClassicalSample> xor_data = {
      {{-1, -1}, -1}, {{-1, 1}, 1}, {{1, -1}, 1}, {{1, 1}, -1}};

  ClassicalPerceptron p{{0.0, 0.0}, 1.5, 0.1};
  const ClassicalTrainResult and_result = classical_train(p, and_data, 100);
  CHECK(and_result.converged);
  for (const ClassicalSample& s : and_data) {
    CHECK(classical_forward(and_result.model, s.inputs) == s.target);
  }

  const ClassicalTrainResult xor_result = classical_train(p, xor_data, 1000);
  CHECK_FALSE(xor_result.converged);
  CHECK(xor_result.epochs_run == 1000);

  const ClassicalTrainResult untouched = classical_train(p, and_data, 0);
  CHECK_FALSE(untouched.converged);
  CHECK(untouched.model.weights == p.weights);
}
