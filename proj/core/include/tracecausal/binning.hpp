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

#ifndef TRACECAUSAL_BINNING_HPP_
#define TRACECAUSAL_BINNING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tracecausal/trace_model.hpp"

namespace tracecausal {

// Fixed-width segmentation of the global execution timeline. Bins are
// half-open [t_min + i*w, t_min + (i+1)*w); an event starting exactly at
// t_max falls into the last bin.
struct BinSpec {
  std::int64_t t_min_ns = 0;
  std::int64_t t_max_ns = 0;
  std::int64_t width_ns = 1;
  std::int64_t bin_count = 1;

  static BinSpec make(std::int64_t t_min_ns, std::int64_t t_max_ns,
                      std::int64_t width_ns);
};

// Minimum start and maximum end over all events. Throws EmptyTraceError when
// both spans are empty.
std::pair<std::int64_t, std::int64_t> global_time_range(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys);

// Bin index of an event start. Throws RangeError outside [t_min, t_max].
std::int64_t assign_bin(std::int64_t event_start_ns, const BinSpec& spec);

// Per-bin aggregate statistics. variance is the sample variance (ddof=1,
// zero when count < 2); quartiles interpolate linearly at positions
// (n-1)*q over the sorted values. Mean and variance accumulate in input
// order with compensated summation; all stat fields are NaN when count == 0.
struct BinSummary {
  std::int64_t bin_id = 0;
  std::int64_t count = 0;
  double min = 0, max = 0, mean = 0, variance = 0, std = 0;
  double q1 = 0, q2 = 0, q3 = 0;
};

BinSummary summarize_bin(std::span<const double> values, std::int64_t bin_id);

// Ids of the k highest-variance non-empty bins, descending variance, ties
// broken by lower bin_id. Fewer than k non-empty bins returns all of them.
std::vector<std::int64_t> rank_bins(std::span<const BinSummary> summaries, std::int64_t k);

// CSV export: header bin_id,count,min,max,mean,variance,std,q1,q2,q3, one
// row per summary sorted by bin_id, empty stats as empty fields.
std::string bins_to_csv(std::span<const BinSummary> summaries);

}  // namespace tracecausal

#endif  // TRACECAUSAL_BINNING_HPP_
