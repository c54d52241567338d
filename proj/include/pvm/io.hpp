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

#ifndef PVM_IO_HPP_
#define PVM_IO_HPP_

#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvm/core.hpp"
#include "pvm/data.hpp"
#include "pvm/solver.hpp"

namespace pvm {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

inline bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

/// Numeric CSV, optional single header row (skipped when the first row is
/// not fully numeric).
inline std::vector<std::vector<double>> read_csv_rows(std::istream& is,
                                                      const std::string& what) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    std::vector<double> row;
    row.reserve(fields.size());
    bool ok = true;
    for (const auto& f : fields) {
      double v;
      if (!parse_double(f, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw input_error(what + ": non-numeric value at line " + std::to_string(lineno));
    }
    first = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw input_error(what + ": no data rows");
  return rows;
}

inline std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open file: " + path);
  return read_csv_rows(f, path);
}

inline Matrix read_matrix_csv(const std::string& path) {
  return Matrix::from_rows(read_csv_rows(path));
}

inline void write_matrix_csv(std::ostream& os, const Matrix& m) {
  os << std::setprecision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j);
    }
    os << "\n";
  }
}

inline void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot open file for writing: " + path);
  write_matrix_csv(f, m);
}

/// Labels file: one 1-based integer per line.
inline std::vector<int> read_labels(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open file: " + path);
  std::vector<int> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double v;
    if (!parse_double(split_csv_line(line).front(), v) || v != static_cast<int>(v))
      throw input_error(path + ": labels must be integers (line " +
                        std::to_string(lineno) + ")");
    labels.push_back(static_cast<int>(v));
  }
  if (labels.empty()) throw input_error(path + ": no labels");
  return labels;
}

inline void write_labels(const std::string& path, const std::vector<int>& labels) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot open file for writing: " + path);
  for (int l : labels) f << l << "\n";
}

inline const char* algorithm_name(Algorithm a) {
  return a == Algorithm::greedy ? "greedy" : "lp_round";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "greedy") return Algorithm::greedy;
  if (s == "lp_round") return Algorithm::lp_round;
  throw input_error("unknown algorithm: " + s);
}

constexpr const char* kSolutionSchema = "pvm-solution-v1";

/// Serializes a fitted solution. Candidate indices are 0-based rows of
/// the candidate set; labels/classes are 1-based.
inline nlohmann::json solution_to_json(const PvmConfig& config, const FitResult& fitted) {
  nlohmann::json j;
  j["schema"] = kSolutionSchema;
  j["config"] = {{"epsilon", config.epsilon},
                 {"lambda", config.lambda},
                 {"algorithm", algorithm_name(config.algorithm)},
                 {"rounds", config.rounding_iterations},
                 {"seed", config.seed}};
  j["prototype_sets"] = fitted.solution.sets;
  const auto& o = fitted.solution.objective;
  j["objective"] = {{"xi", o.xi_total},
                    {"eta", o.eta_total},
                    {"count", o.proto_count},
                    {"total", o.total}};
  if (!fitted.trace.empty()) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : fitted.trace)
      trace.push_back({{"candidate", s.candidate},
                       {"class", s.cls + 1},
                       {"delta_xi", s.delta_xi},
                       {"delta_eta", s.delta_eta},
                       {"delta_obj", s.delta_obj}});
    j["trace"] = std::move(trace);
  }
  if (fitted.opt_lp) {
    j["lp"] = {{"opt_lp", *fitted.opt_lp},
               {"bound", *fitted.bound},
               {"best_round", fitted.best_round},
               {"obj_per_round", fitted.rounding_objectives}};
  }
  return j;
}

struct LoadedSolution {
  PvmConfig config;
  PrototypeSolution solution;
};

inline LoadedSolution solution_from_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j["schema"] != kSolutionSchema)
    throw input_error("unrecognized solution schema");
  LoadedSolution out;
  const auto& c = j.at("config");
  out.config.epsilon = c.at("epsilon").get<double>();
  out.config.lambda = c.at("lambda").get<double>();
  out.config.algorithm = parse_algorithm(c.at("algorithm").get<std::string>());
  out.config.rounding_iterations = c.at("rounds").get<int>();
  out.config.seed = c.at("seed").get<std::uint64_t>();
  out.solution.sets = j.at("prototype_sets").get<std::vector<std::vector<int>>>();
  const auto& o = j.at("objective");
  out.solution.objective = ObjectiveBreakdown::make(
      o.at("xi").get<long long>(), o.at("eta").get<long long>(),
      o.at("count").get<long long>(),
      out.config.lambda);
  // Stored total wins over the recomputed one only if lambda was defaulted.
  out.solution.objective.total = o.at("total").get<double>();
  return out;
}

inline LoadedSolution read_solution(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(path + ": invalid JSON: " + e.what());
  }
  try {
    return solution_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(path + ": malformed solution: " + e.what());
  }
}

}  // namespace pvm

#endif  // PVM_IO_HPP_
