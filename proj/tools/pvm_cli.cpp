// Copyright 2026 The PVM Authors
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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvm/pvm.hpp"

namespace {

int max_label(const std::vector<int>& labels) {
  return *std::max_element(labels.begin(), labels.end());
}

pvm::Dataset make_dataset(const std::vector<int>& labels,
                          std::optional<std::vector<std::vector<double>>> points) {
  pvm::Dataset ds;
  ds.labels = labels;
  ds.num_classes = max_label(labels);
  ds.points = std::move(points);
  ds.validate();
  return ds;
}

struct SelectInputs {
  pvm::Dataset data;
  pvm::Matrix dissim;
  bool z_is_x = false;
  std::size_t num_candidates = 0;
};

SelectInputs load_select_inputs(const std::string& data_path,
                                const std::string& dissim_path,
                                const std::string& labels_path,
                                const std::string& candidates_path) {
  if (data_path.empty() == dissim_path.empty())
    throw pvm::input_error("provide exactly one of --data or --dissimilarity");
  SelectInputs in;
  const std::vector<int> labels = pvm::read_labels(labels_path);
  if (!data_path.empty()) {
    auto x = pvm::read_csv_rows(data_path);
    in.data = make_dataset(labels, x);
    std::vector<std::vector<double>> z;
    if (!candidates_path.empty()) {
      z = pvm::read_csv_rows(candidates_path);
      in.z_is_x = false;
    } else {
      z = x;
      in.z_is_x = true;
    }
    in.num_candidates = z.size();
    in.dissim = pvm::euclidean_matrix(x, z);
  } else {
    if (!candidates_path.empty())
      throw pvm::input_error("--candidates requires --data (points)");
    in.data = make_dataset(labels, std::nullopt);
    in.dissim = pvm::read_matrix_csv(dissim_path);
    in.z_is_x = in.dissim.rows() == in.dissim.cols();
    in.num_candidates = in.dissim.cols();
  }
  pvm::CandidateSet cs;
  cs.count = in.num_candidates;
  cs.same_as_training = in.z_is_x;
  pvm::validate_inputs(in.data, cs, in.dissim);
  return in;
}

void print_report(std::ostream& os, const pvm::PvmConfig& config,
                  const pvm::FitResult& fitted, const SelectInputs& in,
                  double seconds) {
  os << "algorithm: " << pvm::algorithm_name(config.algorithm) << "\n";
  os << "epsilon: " << config.epsilon << "\n";
  os << "lambda: " << config.effective_lambda(in.data.size())
     << (config.lambda < 0 ? " (default 1/n)" : "") << "\n";
  if (config.algorithm == pvm::Algorithm::lp_round)
    os << "rounds: " << config.rounding_iterations << ", seed: " << config.seed << "\n";
  os << "prototypes per class:";
  for (std::size_t l = 0; l < fitted.solution.sets.size(); ++l)
    os << " " << l + 1 << ":" << fitted.solution.sets[l].size();
  os << " (total " << fitted.solution.total_prototypes() << ")\n";
  const auto& o = fitted.solution.objective;
  os << "objective: " << o.total << " (xi " << o.xi_total << ", eta " << o.eta_total
     << ", count " << o.proto_count << ")\n";
  if (fitted.opt_lp)
    os << "opt_lp: " << *fitted.opt_lp << ", rounding bound (n/e + opt_lp): "
       << *fitted.bound << ", best round: " << fitted.best_round + 1 << "\n";
  if (in.z_is_x &&
      fitted.solution.total_prototypes() == static_cast<long long>(in.data.size()))
    os << "note: every training point selected; classifier is exactly 1-NN\n";
  os << "elapsed_seconds: " << seconds << "\n";
}

int cmd_dist(const std::string& points_path, const std::string& kernel_path,
             const std::string& candidates_path, const std::string& metric,
             const std::string& output) {
  pvm::Matrix d;
  if (metric == "kernel") {
    if (kernel_path.empty()) throw pvm::input_error("--metric kernel requires --kernel");
    d = pvm::kernel_to_distance(pvm::read_matrix_csv(kernel_path));
  } else {
    if (points_path.empty()) throw pvm::input_error("--points is required");
    auto x = pvm::read_csv_rows(points_path);
    auto z = candidates_path.empty() ? x : pvm::read_csv_rows(candidates_path);
    d = pvm::euclidean_matrix(x, z);
    if (metric == "rank") d = pvm::rank_transform(d);
    else if (metric != "euclidean") throw pvm::input_error("unknown metric: " + metric);
  }
  if (output.empty()) pvm::write_matrix_csv(std::cout, d);
  else pvm::write_matrix_csv(output, d);
  return 0;
}

int cmd_select(const SelectInputs& in, pvm::PvmConfig config, bool use_quantile,
               double quantile, const std::string& output,
               const std::string& export_lp_prefix) {
  if (use_quantile) {
    const auto grid = pvm::epsilon_grid(in.dissim, 1, quantile, 1.0);
    config.epsilon = grid.front();
  }
  config.validate();
  const double lambda = config.effective_lambda(in.data.size());
  const auto t0 = std::chrono::steady_clock::now();
  const pvm::CoverageIncidence inc = pvm::build_incidence(
      in.dissim, in.data.labels, in.data.num_classes, config.epsilon);
  if (!export_lp_prefix.empty()) {
    for (int l = 0; l < in.data.num_classes; ++l) {
      const auto lp = pvm::build_class_lp(inc, in.data.labels, lambda, l);
      std::ofstream f(export_lp_prefix + ".class" + std::to_string(l + 1) + ".lp");
      if (!f) throw pvm::input_error("cannot write LP export file");
      pvm::write_lp_text(f, lp);
    }
  }
  const pvm::FitResult fitted = pvm::fit(inc, in.data.labels, config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw pvm::input_error("cannot open file for writing: " + output);
    f << pvm::solution_to_json(config, fitted).dump(2) << "\n";
  }
  print_report(std::cout, config, fitted, in, seconds);
  return 0;
}

int cmd_classify(const std::string& solution_path, const std::string& dissim_path,
                 const std::string& data_path, const std::string& candidates_path,
                 const std::string& truth_path, const std::string& output) {
  const pvm::LoadedSolution loaded = pvm::read_solution(solution_path);
  pvm::Matrix dq;
  if (!dissim_path.empty()) {
    dq = pvm::read_matrix_csv(dissim_path);
  } else {
    if (data_path.empty() || candidates_path.empty())
      throw pvm::input_error("classify needs --dissimilarity, or --data plus --candidates");
    dq = pvm::euclidean_matrix(pvm::read_csv_rows(data_path),
                               pvm::read_csv_rows(candidates_path));
  }
  const pvm::ClassificationResult res = pvm::classify(dq, loaded.solution);
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw pvm::input_error("cannot open file for writing: " + output);
  }
  std::ostream& os = output.empty() ? std::cout : file;
  os << std::setprecision(17);
  os << "label,prototype,distance\n";
  for (const auto& p : res.predictions)
    os << p.label << "," << p.prototype << "," << p.distance << "\n";
  if (!truth_path.empty()) {
    const auto truth = pvm::read_labels(truth_path);
    std::cout << "test_error: " << pvm::test_error(res.labels(), truth) << "\n";
  }
  return 0;
}

int cmd_cv(const SelectInputs& in, pvm::PvmConfig config, std::size_t grid_count,
           double q_lo, double q_hi, int folds, std::uint64_t seed) {
  if (in.dissim.rows() != in.dissim.cols())
    throw pvm::input_error("cv requires Z = X (square dissimilarity)");
  const auto grid = pvm::epsilon_grid(in.dissim, grid_count, q_lo, q_hi);
  const pvm::CvResult cv = pvm::kfold_cv(in.dissim, in.data.labels,
                                         in.data.num_classes, grid, config, folds, seed);
  std::cout << std::setprecision(17);
  std::cout << "epsilon,mean_error,std_error,mean_prototypes\n";
  for (const auto& p : cv.points)
    std::cout << p.epsilon << "," << p.mean_error << "," << p.std_error << ","
              << p.mean_prototypes << "\n";
  std::cout << "chosen_epsilon," << cv.chosen_epsilon << "\n";
  return 0;
}

int cmd_gen_mixture(std::uint64_t seed, int n, const std::string& out_points,
                    const std::string& out_labels) {
  const pvm::Dataset ds = pvm::gen_mixture(seed, n);
  pvm::write_matrix_csv(out_points, pvm::Matrix::from_rows(*ds.points));
  pvm::write_labels(out_labels, ds.labels);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prototype selection by prize-collecting set cover"};
  app.require_subcommand(1);

  // dist
  auto* dist = app.add_subcommand("dist", "Build a dissimilarity matrix");
  std::string d_points, d_kernel, d_candidates, d_metric = "euclidean", d_output;
  dist->add_option("--points", d_points, "points CSV (rows = points)");
  dist->add_option("--kernel", d_kernel, "square kernel matrix CSV");
  dist->add_option("--candidates", d_candidates, "candidate points CSV (default: points)");
  dist->add_option("--metric", d_metric, "euclidean | kernel | rank");
  dist->add_option("--output,-o", d_output, "output CSV (default: stdout)");

  // select
  auto* select = app.add_subcommand("select", "Select prototypes");
  std::string s_data, s_dissim, s_labels, s_candidates, s_output, s_export_lp;
  std::string s_algorithm = "greedy";
  double s_epsilon = 0.0, s_quantile = -1.0, s_lambda = -1.0;
  int s_rounds = 200;
  std::uint64_t s_seed = 0;
  select->add_option("--data", s_data, "points CSV");
  select->add_option("--dissimilarity", s_dissim, "precomputed n x m dissimilarity CSV");
  select->add_option("--labels", s_labels, "labels file (one 1-based integer per line)")->required();
  select->add_option("--candidates", s_candidates, "candidate points CSV (default: Z = X)");
  auto* eps_opt = select->add_option("--epsilon", s_epsilon, "ball radius");
  auto* q_opt = select->add_option("--epsilon-quantile", s_quantile,
                                   "radius as a quantile of positive distances");
  eps_opt->excludes(q_opt);
  select->add_option("--lambda", s_lambda, "prototype cost (default 1/n)");
  select->add_option("--algorithm", s_algorithm, "greedy | lp_round");
  select->add_option("--rounds", s_rounds, "rounding draws for lp_round");
  select->add_option("--seed", s_seed, "random seed");
  select->add_option("--output,-o", s_output, "solution JSON path");
  select->add_option("--export-lp", s_export_lp, "prefix for per-class LP text files");

  // classify
  auto* cls = app.add_subcommand("classify", "Nearest-prototype classification");
  std::string c_solution, c_dissim, c_data, c_candidates, c_truth, c_output;
  cls->add_option("--solution", c_solution, "solution JSON from select")->required();
  cls->add_option("--dissimilarity", c_dissim, "query x candidate dissimilarity CSV");
  cls->add_option("--data", c_data, "query points CSV");
  cls->add_option("--candidates", c_candidates, "candidate points CSV");
  cls->add_option("--truth", c_truth, "true labels for error reporting");
  cls->add_option("--output,-o", c_output, "predictions CSV (default: stdout)");

  // cv
  auto* cv = app.add_subcommand("cv", "K-fold cross-validation over an epsilon grid");
  std::string v_data, v_dissim, v_labels, v_algorithm = "greedy";
  std::size_t v_grid_count = 10;
  double v_q_lo = 0.0, v_q_hi = 0.5, v_lambda = -1.0;
  int v_folds = 10, v_rounds = 200;
  std::uint64_t v_seed = 0;
  cv->add_option("--data", v_data, "points CSV");
  cv->add_option("--dissimilarity", v_dissim, "square dissimilarity CSV");
  cv->add_option("--labels", v_labels, "labels file")->required();
  cv->add_option("--grid-count", v_grid_count, "number of epsilon grid points");
  cv->add_option("--q-lo", v_q_lo, "lower quantile of positive distances");
  cv->add_option("--q-hi", v_q_hi, "upper quantile of positive distances");
  cv->add_option("--folds", v_folds, "number of folds");
  cv->add_option("--lambda", v_lambda, "prototype cost (default 1/n per fold)");
  cv->add_option("--algorithm", v_algorithm, "greedy | lp_round");
  cv->add_option("--rounds", v_rounds, "rounding draws for lp_round");
  cv->add_option("--seed", v_seed, "random seed");

  // gen-mixture
  auto* gen = app.add_subcommand("gen-mixture", "Generate the Gaussian mixture benchmark");
  std::uint64_t g_seed = 0;
  int g_n = 300;
  std::string g_points = "mixture_points.csv", g_labels = "mixture_labels.csv";
  gen->add_option("--seed", g_seed, "random seed");
  gen->add_option("--n", g_n, "total points (multiple of 3)");
  gen->add_option("--out-points", g_points, "output points CSV");
  gen->add_option("--out-labels", g_labels, "output labels file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dist->parsed())
      return cmd_dist(d_points, d_kernel, d_candidates, d_metric, d_output);
    if (select->parsed()) {
      if ((eps_opt->count() > 0) == (q_opt->count() > 0))
        throw pvm::input_error("provide exactly one of --epsilon or --epsilon-quantile");
      pvm::PvmConfig config;
      config.epsilon = s_epsilon;
      config.lambda = s_lambda;
      config.algorithm = pvm::parse_algorithm(s_algorithm);
      config.rounding_iterations = s_rounds;
      config.seed = s_seed;
      const auto in = load_select_inputs(s_data, s_dissim, s_labels, s_candidates);
      return cmd_select(in, config, q_opt->count() > 0, s_quantile, s_output, s_export_lp);
    }
    if (cls->parsed())
      return cmd_classify(c_solution, c_dissim, c_data, c_candidates, c_truth, c_output);
    if (cv->parsed()) {
      pvm::PvmConfig config;
      config.lambda = v_lambda;
      config.algorithm = pvm::parse_algorithm(v_algorithm);
      config.rounding_iterations = v_rounds;
      config.epsilon = 1.0;  // placeholder; kfold_cv sets it per grid point
      const auto in = load_select_inputs(v_data, v_dissim, v_labels, "");
      return cmd_cv(in, config, v_grid_count, v_q_lo, v_q_hi, v_folds, v_seed);
    }
    if (gen->parsed()) return cmd_gen_mixture(g_seed, g_n, g_points, g_labels);
  } catch (const pvm::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pvm::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
