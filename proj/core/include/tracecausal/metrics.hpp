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

#ifndef TRACECAUSAL_METRICS_HPP_
#define TRACECAUSAL_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracecausal/trace_model.hpp"

namespace tracecausal {

enum class TargetKind { perf_variation, memory_stall };

std::string_view target_name(TargetKind t);
TargetKind target_from_string(std::string_view s);

enum class GroupKeyMode { name_only, name_plus_launch };

// Repeated invocations of one kernel configuration. `event_indices` point
// into the event span the group was built from; mean_duration_ns accumulates
// in index order with compensated summation.
struct KernelGroup {
  std::string name;
  std::array<std::int64_t, 3> grid{0, 0, 0};
  std::array<std::int64_t, 3> block{0, 0, 0};
  bool launch_keyed = false;
  std::vector<std::uint32_t> event_indices;
  double mean_duration_ns = 0.0;

  size_t n() const { return event_indices.size(); }
};

// Partitions events into groups (by demangled name, optionally also by
// grid/block), ordered by first occurrence. Indices within a group keep
// input order.
std::vector<KernelGroup> group_kernels(std::span<const KernelEvent> events,
                                       GroupKeyMode mode);

// One target observation joined with its feature vector.
struct VariabilityRecord {
  std::uint32_t event_ref = 0;  // index of the source KernelEvent
  std::string kernel_name;
  TargetKind target = TargetKind::perf_variation;
  double target_value = 0.0;  // >= 0, nanoseconds
  std::vector<std::pair<std::string, double>> features;  // sorted by name
  std::optional<std::int64_t> bin_id;

  bool operator==(const VariabilityRecord&) const = default;
};

// Run-to-run variation: one record per run with target |duration - mean|.
// Features are the run's launch configuration plus extra counters.
std::vector<VariabilityRecord> kernel_variability(const KernelGroup& group,
                                                  std::span<const KernelEvent> events);

struct MatchPolicy {
  std::int64_t window_ns = 1'000'000;  // nearest-start fallback window (1 ms)
};

struct MatchReport {
  std::uint64_t by_correlation = 0;
  std::uint64_t by_overlap = 0;
  std::uint64_t by_nearest = 0;
  std::uint64_t unmatched = 0;

  MatchReport& operator+=(const MatchReport& o) {
    by_correlation += o.by_correlation;
    by_overlap += o.by_overlap;
    by_nearest += o.by_nearest;
    unmatched += o.unmatched;
    return *this;
  }
};

// Links each kernel to at most one memory transfer. Precedence: equal
// correlation_id, then same-rank maximal interval overlap, then same-rank
// nearest start within the policy window. Ties break toward the lower memcpy
// start_ns, then the lower memcpy input index; unmatched kernels are omitted
// (and counted). Deterministic for identical inputs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> match_transfers(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys,
    const MatchPolicy& policy = {}, MatchReport* report = nullptr);

// |kernel duration - transfer duration| in nanoseconds.
double memory_stall(const KernelEvent& kernel, const MemcpyEvent& memcpy);

// One record per matched pair, target memory_stall. Features are the
// kernel's features plus copy_kind and transfer_size from the transfer.
std::vector<VariabilityRecord> memory_stall_records(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

}  // namespace tracecausal

#endif  // TRACECAUSAL_METRICS_HPP_
