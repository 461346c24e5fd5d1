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

#ifndef TRACECAUSAL_TRACE_MODEL_HPP_
#define TRACECAUSAL_TRACE_MODEL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tracecausal {

// Feature taxonomy used to tier the causal graph: launch configuration
// drives temporal behavior drives memory-system activity drives the target.
enum class FeatureGroup {
  identification,
  launch_config,
  temporal,
  memory_system,
};

std::string_view feature_group_name(FeatureGroup g);

// Profiler column renaming. `entries` maps original profiler column names to
// canonical names; `group` assigns each canonical name its taxonomy group.
// The mapping must be injective and every canonical name must have exactly
// one group.
struct ColumnMap {
  std::map<std::string, std::string> entries;
  std::map<std::string, FeatureGroup> group;

  // Canonical name for an original column, or the input unchanged when the
  // column is not in the map.
  std::string_view canonical(std::string_view original) const;
  std::optional<FeatureGroup> group_of(std::string_view canonical_name) const;
};

// The full profiler-column simplification table (grid_size, tcc_hit,
// tcp_pending_stall, ...) with per-name groups.
ColumnMap default_column_map();

// One kernel invocation. Timestamps are integer nanoseconds; grid/block
// components are >= 1; end_ns >= start_ns.
struct KernelEvent {
  std::string kernel_name;
  std::uint32_t rank_id = 0;
  std::int64_t start_ns = 0;
  std::int64_t end_ns = 0;
  std::array<std::int64_t, 3> grid{1, 1, 1};
  std::array<std::int64_t, 3> block{1, 1, 1};
  std::int64_t static_shared_mem = 0;
  std::int64_t dynamic_shared_mem = 0;
  std::int64_t registers_per_thread = 0;
  std::optional<std::int64_t> correlation_id;
  // Canonical-named numeric counters not covered by the structured fields,
  // sorted by name (sq_waves, tcc_hit, tcp_pending_stall, ...).
  std::vector<std::pair<std::string, double>> extra_counters;
  // Set when any grid/block component was absent in the input and defaulted
  // to 1.
  bool launch_defaulted = false;

  std::int64_t duration_ns() const { return end_ns - start_ns; }
  bool operator==(const KernelEvent&) const = default;
};

// One memory transfer. copy_kind is the profiler's small integer code
// (8 = device-to-device).
struct MemcpyEvent {
  int copy_kind = 0;
  std::int64_t bytes = 0;
  std::int64_t start_ns = 0;
  std::int64_t end_ns = 0;
  std::uint32_t rank_id = 0;
  std::optional<std::int64_t> correlation_id;
  std::optional<std::int64_t> stream_id;

  std::int64_t duration_ns() const { return end_ns - start_ns; }
  bool operator==(const MemcpyEvent&) const = default;
};

struct TraceData {
  std::vector<KernelEvent> kernels;
  std::vector<MemcpyEvent> memcpys;

  bool empty() const { return kernels.empty() && memcpys.empty(); }
  bool operator==(const TraceData&) const = default;
};

enum class TraceFormat { csv, jsonl };
enum class TimeUnit { ns, ms };

TraceFormat trace_format_from_string(std::string_view s);
std::string_view trace_format_name(TraceFormat f);
TimeUnit time_unit_from_string(std::string_view s);
std::string_view time_unit_name(TimeUnit u);

// Loads a CSV or JSON-lines trace. Rows carry an `event_type` discriminator
// (kernel | memcpy); recognized columns are renamed through `column_map`
// before field resolution; unrecognized numeric columns of kernel rows land
// in extra_counters. Row order of the file is preserved per event type.
// Missing grid/block components default to 1 and set launch_defaulted.
// Throws IngestError on missing required columns, non-numeric timestamps
// (message carries the 1-based data row number) and unknown event types.
TraceData load_trace(const std::string& path, TraceFormat format,
                     const ColumnMap& column_map, TimeUnit unit = TimeUnit::ns);

// Canonical JSON-lines dump of a trace (one event object per line, keys are
// canonical names, kernels first, then memcpys, each in original order).
// load_trace(..., jsonl) reparses it field-for-field.
void dump_events_jsonl(const TraceData& data, std::ostream& out);
std::string dump_events_jsonl(const TraceData& data);

// Canonical-named feature vector of one invocation: the six grid/block
// components, shared-memory sizes, registers per thread, plus every extra
// counter. Sorted by feature name.
std::vector<std::pair<std::string, double>> kernel_features(const KernelEvent& e);

// Names of the structured launch-configuration features, sorted.
const std::vector<std::string>& launch_feature_names();

// Taxonomy group of a canonical feature name: structured launch features map
// to launch_config, copy_kind/transfer_size to memory_system, names known to
// `map` to their table group, anything else to temporal.
FeatureGroup feature_group_for(std::string_view canonical_name, const ColumnMap& map);

}  // namespace tracecausal

#endif  // TRACECAUSAL_TRACE_MODEL_HPP_
