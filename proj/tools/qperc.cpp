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

// qperc command line: train, eval, verify, info, decompose, demo.
// Exit codes: 0 success (and all-pass for verify), 1 verification failure,
// 2 input error, 3 numerical error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qperc/decomp.hpp"
#include "qperc/dirac.hpp"
#include "qperc/gates.hpp"
#include "qperc/io.hpp"
#include "qperc/perceptron.hpp"

namespace {

using namespace qperc;

std::string sigma_text(const std::vector<double>& sigma) {
  std::string out;
  for (double s : sigma) {
    if (!out.empty()) out += ", ";
    out += format_real(s);
  }
  return out;
}

void warn_on_conflicts(const TrainingSet& ts) {
  for (const auto& [i, j] : conflicting_duplicate_inputs(ts)) {
    std::cerr << "warning: pairs " << i + 1 << " and " << j + 1
              << " share an input but disagree on targets; exact interpolation is"
                 " impossible\n";
  }
}

Matrix default_initial_weights(std::size_t rows, std::size_t cols) {
  if (rows == 2 && cols == 2) {
    return Matrix(2, 2, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                         Complex{-1.0, 0.0}});
  }
  return rect_identity(rows, cols);
}

void print_weight_summary(const Matrix& w, const PerceptronModel& model,
                          double tol) {
  const double residual = unitarity_residual(w);
  std::cout << "unitarity residual: " << format_real(residual, 3) << "  ["
            << (residual <= tol ? "UNITARY" : "NOT UNITARY") << "]\n";
  std::cout << "mode: " << mode_name(model.mode) << "\n";
  std::cout << "singular values: " << sigma_text(svd_full(w).sigma) << "\n";
}

void print_verification(const VerificationReport& report) {
  for (const PairRecord& rec : report.records) {
    std::cout << rec.input << " -> " << rec.expected << "  |  predicted "
              << (rec.predicted.empty() ? "(zero state)" : rec.predicted)
              << "  |  fidelity " << format_real(rec.fidelity, 10) << "  |  "
              << (rec.passed ? "PASS" : "FAIL") << "\n";
  }
  std::cout << report.pass_count << "/" << report.total << " "
            << (report.all_passed() ? "PASS" : "FAIL") << "\n";
}

int run_train(const std::string& dataset_path, const std::string& mode, double eta,
              std::size_t iters, int pair_index, bool scale, double tol,
              std::string out_path) {
  const TrainingSet ts = load_dataset(dataset_path);
  warn_on_conflicts(ts);

  Matrix w(1, 1);
  if (mode == "analytic") {
    w = synthesize_weights(ts, scale);
    std::cout << "analytic weights (" << ts.size() << " pairs):\n"
              << format_matrix(w);
  } else {
    std::size_t idx = ts.size() - 1;
    if (pair_index > 0) {
      if (static_cast<std::size_t>(pair_index) > ts.size()) {
        throw PreconditionError("--pair " + std::to_string(pair_index) +
                                " out of range; dataset has " +
                                std::to_string(ts.size()) + " pairs");
      }
      idx = static_cast<std::size_t>(pair_index) - 1;
    }
    const TrainingPair& p = ts.pairs()[idx];
    IterativeConfig cfg;
    cfg.eta = eta;
    cfg.iterations = iters;
    cfg.initial_weights = default_initial_weights(ts.target_dim(), ts.input_dim());
    const IterativeResult result = iterative_train(cfg, p.input, p.target);
    w = result.weights;
    std::cout << "iterative weights after " << iters << " iterations on pair "
              << idx + 1 << " (eta " << format_real(eta) << "):\n"
              << format_matrix(w);
  }

  const PerceptronModel model = build_model(w, tol);
  print_weight_summary(w, model, tol);

  if (out_path.empty()) {
    out_path = std::filesystem::path(dataset_path).replace_extension(".qpm").string();
  }
  save_model(model, out_path);
  std::cout << "model written to " << out_path << "\n";
  return 0;
}

int run_eval(const std::string& model_path, const std::string& state_text, bool raw,
             bool force_measure) {
  const PerceptronModel model = load_model(model_path);
  const StateVector x = parse_state(state_text);
  if (x.dim() != model.w_new.cols()) {
    throw DimensionError("state has dim " + std::to_string(x.dim()) +
                         ", model expects " + std::to_string(model.w_new.cols()));
  }
  const StateVector out =
      raw ? forward_raw(model, x) : predict(model, x, force_measure);
  std::cout << format_state(out) << "\n";
  return 0;
}

int run_verify(const std::string& model_path, const std::string& dataset_path) {
  const PerceptronModel model = load_model(model_path);
  const TrainingSet ts = load_dataset(dataset_path);
  const VerificationReport report = verify_truth_table(model, ts);
  print_verification(report);
  return report.all_passed() ? 0 : 1;
}

int run_info(const std::string& model_path) {
  const PerceptronModel model = load_model(model_path);
  std::cout << "mode: " << mode_name(model.mode) << "\n";
  std::cout << "threshold: " << format_real(model.measurement_threshold) << "\n";
  std::cout << "w: " << model.raw_w.shape() << "  residual "
            << format_real(unitarity_residual(model.raw_w), 3) << "\n";
  std::cout << "f_hat: " << model.f_hat.shape() << "  residual "
            << format_real(unitarity_residual(model.f_hat), 3) << "\n";
  std::cout << "sigma_new: " << model.sigma_new.shape() << "\n";
  std::cout << "w_new: " << model.w_new.shape() << "  residual "
            << format_real(unitarity_residual(model.w_new), 3) << "\n";
  std::cout << "singular values: " << sigma_text(svd_full(model.raw_w).sigma) << "\n";
  return 0;
}

int run_decompose(const std::string& model_path) {
  const PerceptronModel model = load_model(model_path);
  const SvdResult svd = svd_full(model.raw_w);
  std::cout << "F:\n" << format_matrix(svd.u);
  std::cout << "Sigma_new:\n"
            << format_matrix(rect_identity(model.raw_w.rows(), model.raw_w.cols()));
  std::cout << "w_new:\n" << format_matrix(svd.v_dagger);
  std::cout << "singular values replaced: " << sigma_text(svd.sigma) << "\n";
  return 0;
}

// Gate-specific pair for the iterative pass of `demo`, matching the runs the
// analytic synthesis is compared against: not trains on its second pair,
// hadamard on its first, everything else on its last.
std::size_t demo_pair_index(const std::string& name, std::size_t size) {
  if (name == "not") return 1;
  if (name == "hadamard") return 0;
  return size - 1;
}

int run_demo(const std::string& gate, double eta, std::size_t iters, bool scale,
             double tol) {
  const GateSpec spec = builtin_dataset(gate);
  const TrainingSet& ts = spec.training_set;
  std::cout << "== gate: " << spec.name << " (" << ts.size() << " pairs, "
            << qubit_count(ts.pairs().front().input) << " qubits in, "
            << qubit_count(ts.pairs().front().target) << " out) ==\n";

  const std::size_t idx = demo_pair_index(spec.name, ts.size());
  const TrainingPair& p = ts.pairs()[idx];
  IterativeConfig cfg;
  cfg.eta = eta;
  cfg.iterations = iters;
  cfg.initial_weights = default_initial_weights(ts.target_dim(), ts.input_dim());

  std::cout << "\n-- iterative rule: " << iters << " iterations on pair " << idx + 1
            << " (" << format_state(p.input) << " -> " << format_state(p.target)
            << "), eta " << format_real(eta) << " --\n";
  const IterativeResult iterative = iterative_train(cfg, p.input, p.target);
  std::cout << format_matrix(iterative.weights);
  const double it_residual = unitarity_residual(iterative.weights);
  std::cout << "unitarity residual: " << format_real(it_residual, 3) << "  ["
            << (it_residual <= tol ? "UNITARY" : "NOT UNITARY") << "]\n";

  std::cout << "\n-- analytic synthesis --\n";
  const Matrix w = synthesize_weights(ts, scale);
  std::cout << format_matrix(w);
  const PerceptronModel model = build_model(w, tol);
  print_weight_summary(w, model, tol);
  if (model.mode == ModelMode::kDecomposed) {
    std::cout << "\nF:\n" << format_matrix(model.f_hat);
    std::cout << "Sigma_new:\n" << format_matrix(model.sigma_new);
    std::cout << "w_new:\n" << format_matrix(model.w_new);
  }

  std::cout << "\n-- truth table --\n";
  const VerificationReport report = verify_truth_table(model, ts);
  print_verification(report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum perceptron trainer: analytic pseudoinverse synthesis with"
               " SVD unitarization, plus the iterative rule for comparison"};
  app.require_subcommand(1);

  std::string dataset_path, model_path, state_text, out_path, gate;
  std::string mode = "analytic";
  double eta = 0.1;
  std::size_t iters = 25;
  int pair_index = 0;
  bool scale = false, raw = false, force_measure = false;
  double tol = kDefaultUnitaryTol;

  CLI::App* train = app.add_subcommand("train", "build a model from a .qds dataset");
  train->add_option("dataset", dataset_path, "dataset file")->required();
  train->add_option("--mode", mode, "analytic | iterative")
      ->check(CLI::IsMember({"analytic", "iterative"}));
  train->add_option("--eta", eta, "learning rate for iterative mode, in (0,1]");
  train->add_option("--iters", iters, "iteration count for iterative mode");
  train->add_option("--pair", pair_index,
                    "1-based pair to train on in iterative mode (default: last)");
  train->add_flag("--scale", scale, "scale analytic weights by 1/sqrt(N)");
  train->add_option("--tol", tol, "unitarity tolerance");
  train->add_option("--out", out_path, "model output path (default: dataset with .qpm)");

  CLI::App* eval = app.add_subcommand("eval", "run a state through a model");
  eval->add_option("model", model_path, "model file")->required();
  eval->add_option("state", state_text, "state text, e.g. \"|01>\"")->required();
  eval->add_flag("--raw", raw, "print raw amplitudes, skipping measurement");
  eval->add_flag("--force-measure", force_measure,
                 "threshold the output even for a unitary-mode model");

  CLI::App* verify = app.add_subcommand("verify", "check a model against a dataset");
  verify->add_option("model", model_path, "model file")->required();
  verify->add_option("dataset", dataset_path, "dataset file")->required();

  CLI::App* info = app.add_subcommand("info", "print model shapes and residuals");
  info->add_option("model", model_path, "model file")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "force the SVD path and print the factors");
  decompose->add_option("model", model_path, "model file")->required();

  CLI::App* demo =
      app.add_subcommand("demo", "run a built-in gate through both training modes");
  demo->add_option("gate", gate, "not | hadamard | cnot | cswap | xor")->required();
  demo->add_option("--eta", eta, "learning rate for the iterative pass");
  demo->add_option("--iters", iters, "iteration count for the iterative pass");
  demo->add_flag("--scale", scale, "scale analytic weights by 1/sqrt(N)");
  demo->add_option("--tol", tol, "unitarity tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*train) {
      return run_train(dataset_path, mode, eta, iters, pair_index, scale, tol,
                       out_path);
    }
    if (*eval) return run_eval(model_path, state_text, raw, force_measure);
    if (*verify) return run_verify(model_path, dataset_path);
    if (*info) return run_info(model_path);
    if (*decompose) return run_decompose(model_path);
    if (*demo) return run_demo(gate, eta, iters, scale, tol);
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
