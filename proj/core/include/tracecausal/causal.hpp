/* Copyright 2026 The TraceCausal Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TRACECAUSAL_CAUSAL_HPP_
#define TRACECAUSAL_CAUSAL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tracecausal/metrics.hpp"
#include "tracecausal/trace_model.hpp"

namespace tracecausal {

// Dense feature matrix with an attached target vector. Columns are sorted
// lexicographically; rows are stored row-major.
struct FeatureMatrix {
  std::vector<std::string> columns;
  size_t n = 0;
  std::vector<double> rows;  // n * columns.size(), row-major
  std::vector<double> target;
  std::string target_name;

  size_t p() const { return columns.size(); }
  double at(size_t row, size_t col) const { return rows[row * columns.size() + col]; }
  double& at(size_t row, size_t col) { return rows[row * columns.size() + col]; }
};

struct BuildReport {
  std::vector<std::string> dropped_low_presence;
  std::vector<std::string> dropped_zero_variance;
  size_t rows_dropped = 0;
};

// Assembles a matrix from records sharing one target. Keeps features present
// in >= 99% of records (intersected with the allowlist when given), drops
// rows missing any kept feature, then removes zero-variance columns with a
// warning. Throws InsufficientSamplesError when n < p + 4 after cleaning.
FeatureMatrix build_feature_matrix(std::span<const VariabilityRecord> records,
                                   const std::optional<std::set<std::string>>& allowlist = {},
                                   BuildReport* report = nullptr);

// Centers every column and the target to mean 0 and scales to sample std 1.
// Throws ConstantColumnError on a zero-variance column.
FeatureMatrix standardize(const FeatureMatrix& m);

// Gaussian conditional-independence test. Returns true (independent) iff
// sqrt(n - cond_size - 3) * |atanh(r)| <= Phi^-1(1 - alpha/2); |r| >= 1 is
// always dependent.
bool fisher_z_test(double r, std::int64_t n, std::int64_t cond_size, double alpha);

// Undirected dependency structure over features + target.
struct Skeleton {
  std::vector<std::string> names;                 // lexicographic node order
  std::vector<std::pair<int, int>> edges;         // (i, j) with i < j, sorted
  std::vector<std::vector<int>> separating_sets;  // parallel to edges removed? see impl

  bool has_edge(int a, int b) const;
};

// PC-style skeleton search with Fisher-z tests: starts complete, removes
// edge (a,b) at level l when some size-l subset of a neighbor set makes the
// partial correlation pass the independence test. Nodes, edges and subsets
// enumerate in lexicographic order, so the result is deterministic. Partial
// correlations invert the correlation submatrix of {a,b} union S; singular
// submatrices are ridge-regularized (1e-8) with a warning.
Skeleton pc_skeleton(const FeatureMatrix& m, double alpha, int max_cond,
                     std::vector<std::string>* warnings = nullptr);

// Directed graph over features and a target with signed, percentage-weighted
// edges into the target.
struct CausalEdge {
  std::string from;
  std::string to;
  int sign = +1;                // +1 or -1
  double weight_percent = 0.0;  // in [0, 100]; > 0 only on target edges
  bool directed = true;

  bool operator==(const CausalEdge&) const = default;
};

struct CausalGraph {
  std::vector<std::pair<std::string, int>> nodes;  // (name, tier), sorted by name
  std::vector<CausalEdge> edges;                   // sorted by (from, to)
  std::string target_name;

  std::vector<std::string> parents_of_target() const;
};

// Tier numbers used for edge orientation.
inline constexpr int kTierLaunchConfig = 1;
inline constexpr int kTierTemporal = 2;
inline constexpr int kTierMemorySystem = 3;
inline constexpr int kTierTarget = 4;

int tier_of_group(FeatureGroup g);

// Tier map for a feature set: taxonomy group of each canonical name plus the
// maximal tier for the target.
std::map<std::string, int> feature_tiers(std::span<const std::string> columns,
                                         const std::string& target,
                                         const ColumnMap& column_map);

// Directs cross-tier skeleton edges low -> high; same-tier edges stay
// undirected. Every node must have a tier and the target the unique maximum.
CausalGraph orient_edges(const Skeleton& skeleton, const std::map<std::string, int>& tiers);

// Fits OLS of the standardized target on its direct parents; edge weights
// are 100*|beta_j| / sum|beta_i| with the coefficient's sign. Feature-to-
// feature edges carry the sign of the pairwise correlation and weight 0.
// Collinear systems are ridge-regularized (1e-8) with a warning; an empty
// parent set leaves the graph unweighted with a warning.
CausalGraph estimate_weights(const CausalGraph& g, const FeatureMatrix& standardized,
                             std::vector<std::string>* warnings = nullptr);

enum class AnalysisScope { per_kernel, whole_dataset };

AnalysisScope scope_from_string(std::string_view s);
std::string_view scope_name(AnalysisScope s);

struct AnalyzeParams {
  double alpha = 0.05;
  int max_cond = 3;
  std::optional<std::set<std::string>> allowlist;
  const ColumnMap* column_map = nullptr;  // tier lookup; default map when null
};

struct AnalyzeReport {
  std::vector<std::pair<std::string, std::string>> skipped;  // (key, reason)
  std::vector<std::string> warnings;
  std::vector<std::string> dropped_columns;
};

// Full analysis: build -> standardize -> skeleton -> orient -> weights, one
// graph per kernel group or one over all records. Groups with too few
// samples are skipped and reported.
std::vector<std::pair<std::string, CausalGraph>> analyze(
    std::span<const VariabilityRecord> records, AnalysisScope scope,
    const AnalyzeParams& params = {}, AnalyzeReport* report = nullptr);

}  // namespace tracecausal

#endif  // TRACECAUSAL_CAUSAL_HPP_
