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

#include "tracecausal/trace_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tracecausal/errors.hpp"
#include "tracecausal/util.hpp"

namespace tracecausal {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kNsPerMs = 1'000'000;

int pow10_for(TimeUnit u) { return u == TimeUnit::ms ? 6 : 0; }

// Structured event fields, resolved from canonicalized column names.
enum class Field {
  event_type,
  kernel_name,
  start,
  end,
  rank_id,
  grid_x,
  grid_y,
  grid_z,
  block_x,
  block_y,
  block_z,
  static_shared,
  dynamic_shared,
  registers,
  correlation_id,
  stream_id,
  copy_kind,
  bytes,
  launch_defaulted,
};

// Accepted canonical spellings per structured field. Resolution happens after
// column_map renaming, so Table-1 originals and CUPTI-style names both land
// here.
const std::vector<std::pair<std::string_view, Field>>& field_spellings() {
  static const std::vector<std::pair<std::string_view, Field>> kSpellings = {
      {"event_type", Field::event_type},
      {"kernel_name", Field::kernel_name},
      {"Kernel_Name", Field::kernel_name},
      {"demangledName", Field::kernel_name},
      {"start", Field::start},
      {"start_ns", Field::start},
      {"start_time", Field::start},
      {"end", Field::end},
      {"end_ns", Field::end},
      {"end_time", Field::end},
      {"rank_id", Field::rank_id},
      {"rank", Field::rank_id},
      {"gridX", Field::grid_x},
      {"gridY", Field::grid_y},
      {"gridZ", Field::grid_z},
      {"blockX", Field::block_x},
      {"blockY", Field::block_y},
      {"blockZ", Field::block_z},
      {"staticSharedMemory", Field::static_shared},
      {"static_shared_mem", Field::static_shared},
      {"dynamicSharedMemory", Field::dynamic_shared},
      {"dynamic_shared_mem", Field::dynamic_shared},
      {"registersPerThread", Field::registers},
      {"registers_per_thread", Field::registers},
      {"correlation_id", Field::correlation_id},
      {"stream_id", Field::stream_id},
      {"copy_kind", Field::copy_kind},
      {"copyKind", Field::copy_kind},
      {"bytes", Field::bytes},
      {"transfer_size", Field::bytes},
      {"launch_defaulted", Field::launch_defaulted},
  };
  return kSpellings;
}

std::optional<Field> resolve_field(std::string_view canonical) {
  for (const auto& [name, field] : field_spellings()) {
    if (name == canonical) return field;
  }
  return std::nullopt;
}

bool is_identification(std::string_view canonical, const ColumnMap& map) {
  auto g = map.group_of(canonical);
  return g.has_value() && *g == FeatureGroup::identification;
}

std::optional<double> parse_double(std::string_view text) {
  std::string owned(text);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (end == owned.c_str()) return std::nullopt;
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void fail_row(std::string_view what, size_t row) {
  throw IngestError(std::string(what) + " at data row " + std::to_string(row));
}

// --- CSV ---------------------------------------------------------------

std::vector<std::string> split_csv_line(const std::string& line, size_t row) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) fail_row("unterminated quoted field", row);
  fields.push_back(std::move(cur));
  return fields;
}

struct CsvRow {
  const std::vector<std::string>* cells;
  const std::vector<std::optional<Field>>* fields;       // per column
  const std::vector<std::string>* canonical_names;       // per column
  size_t row_number;

  // First non-empty cell whose column resolved to `f`.
  std::optional<std::string_view> get(Field f) const {
    for (size_t i = 0; i < cells->size() && i < fields->size(); ++i) {
      if ((*fields)[i] == f && !(*cells)[i].empty()) return (*cells)[i];
    }
    return std::nullopt;
  }
};

}  // namespace

// --- ColumnMap ----------------------------------------------------------

std::string_view feature_group_name(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::identification: return "identification";
    case FeatureGroup::launch_config: return "launch_config";
    case FeatureGroup::temporal: return "temporal";
    case FeatureGroup::memory_system: return "memory_system";
  }
  return "unknown";
}

std::string_view ColumnMap::canonical(std::string_view original) const {
  auto it = entries.find(std::string(original));
  if (it == entries.end()) return original;
  return it->second;
}

std::optional<FeatureGroup> ColumnMap::group_of(std::string_view canonical_name) const {
  auto it = group.find(std::string(canonical_name));
  if (it == group.end()) return std::nullopt;
  return it->second;
}

ColumnMap default_column_map() {
  ColumnMap m;
  auto add = [&m](std::string original, std::string canonical, FeatureGroup g) {
    m.entries.emplace(std::move(original), canonical);
    m.group.emplace(std::move(canonical), g);
  };

  // Identification and context: names pass through unchanged.
  for (const char* name : {"Kernel_Name", "Device", "CC", "Process_Name", "Host_Name"}) {
    add(name, name, FeatureGroup::identification);
  }

  // Kernel launch configuration.
  add("Grid_Size", "grid_size", FeatureGroup::launch_config);
  add("Workgroup_Size", "workgroup_size", FeatureGroup::launch_config);
  add("LDS_Per_Workgroup", "lds_per_workgroup", FeatureGroup::launch_config);
  add("Scratch_Per_Workitem", "scratch_per_workitem", FeatureGroup::launch_config);
  add("Arch_VGPR", "arch_vgpr", FeatureGroup::launch_config);
  add("Accum_VGPR", "accum_vgpr", FeatureGroup::launch_config);
  add("SGPR", "sgpr", FeatureGroup::launch_config);
  add("wave_size", "wave_size", FeatureGroup::launch_config);

  // Temporal characteristics.
  add("runtime", "runtime", FeatureGroup::temporal);
  add("SQ_WAVES", "sq_waves", FeatureGroup::temporal);
  add("SQ_BUSY_CYCLES", "sq_busy_cycles", FeatureGroup::temporal);
  add("SQ_CYCLES", "sq_cycles", FeatureGroup::temporal);
  add("SQ_INSTS_VALU", "sq_insts_valu", FeatureGroup::temporal);
  add("SQ_INSTS_SALU", "sq_insts_salu", FeatureGroup::temporal);
  add("SQ_INSTS_VMEM", "sq_insts_vmem", FeatureGroup::temporal);

  // Memory system activity.
  add("TCC_RW_REQ_sum", "tcc_rw_req", FeatureGroup::memory_system);
  add("TCC_BUSY_sum", "tcc_busy", FeatureGroup::memory_system);
  add("TCC_TAG_STALL_sum", "tcc_tag_stall", FeatureGroup::memory_system);
  add("TCC_HIT_sum", "tcc_hit", FeatureGroup::memory_system);
  add("TCC_MISS_sum", "tcc_miss", FeatureGroup::memory_system);
  add("TCC_READ_sum", "tcc_read", FeatureGroup::memory_system);
  add("TCC_WRITE_sum", "tcc_write", FeatureGroup::memory_system);
  add("TCP_PENDING_STALL_CYCLES_sum", "tcp_pending_stall", FeatureGroup::memory_system);
  add("TA_BUFFER_READ_WAVEFRONTS_sum", "ta_buf_read", FeatureGroup::memory_system);
  add("TA_BUFFER_WRITE_WAVEFRONTS_sum", "ta_buf_write", FeatureGroup::memory_system);
  add("TD_LOAD_WAVEFRONT_sum", "td_load", FeatureGroup::memory_system);
  add("TD_STORE_WAVEFRONT_sum", "td_store", FeatureGroup::memory_system);

  return m;
}

const std::vector<std::string>& launch_feature_names() {
  static const std::vector<std::string> kNames = {
      "blockX",
      "blockY",
      "blockZ",
      "dynamicSharedMemory",
      "gridX",
      "gridY",
      "gridZ",
      "registersPerThread",
      "staticSharedMemory",
  };
  return kNames;
}

FeatureGroup feature_group_for(std::string_view canonical_name, const ColumnMap& map) {
  const auto& launch = launch_feature_names();
  if (std::binary_search(launch.begin(), launch.end(), canonical_name)) {
    return FeatureGroup::launch_config;
  }
  if (canonical_name == "copy_kind" || canonical_name == "transfer_size") {
    return FeatureGroup::memory_system;
  }
  if (auto g = map.group_of(canonical_name)) return *g;
  return FeatureGroup::temporal;
}

std::vector<std::pair<std::string, double>> kernel_features(const KernelEvent& e) {
  std::vector<std::pair<std::string, double>> structured = {
      {"blockX", static_cast<double>(e.block[0])},
      {"blockY", static_cast<double>(e.block[1])},
      {"blockZ", static_cast<double>(e.block[2])},
      {"dynamicSharedMemory", static_cast<double>(e.dynamic_shared_mem)},
      {"gridX", static_cast<double>(e.grid[0])},
      {"gridY", static_cast<double>(e.grid[1])},
      {"gridZ", static_cast<double>(e.grid[2])},
      {"registersPerThread", static_cast<double>(e.registers_per_thread)},
      {"staticSharedMemory", static_cast<double>(e.static_shared_mem)},
  };
  std::vector<std::pair<std::string, double>> out;
  out.reserve(structured.size() + e.extra_counters.size());
  std::merge(structured.begin(), structured.end(), e.extra_counters.begin(),
             e.extra_counters.end(), std::back_inserter(out),
             [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// --- enum plumbing --------------------------------------------------------

TraceFormat trace_format_from_string(std::string_view s) {
  if (s == "csv") return TraceFormat::csv;
  if (s == "jsonl") return TraceFormat::jsonl;
  throw ConfigError("unknown trace format '" + std::string(s) + "'");
}

std::string_view trace_format_name(TraceFormat f) {
  return f == TraceFormat::csv ? "csv" : "jsonl";
}

TimeUnit time_unit_from_string(std::string_view s) {
  if (s == "ns") return TimeUnit::ns;
  if (s == "ms") return TimeUnit::ms;
  throw ConfigError("unknown time unit '" + std::string(s) + "'");
}

std::string_view time_unit_name(TimeUnit u) { return u == TimeUnit::ns ? "ns" : "ms"; }

// --- loading ----------------------------------------------------------------

namespace {

struct RowValues {
  std::optional<std::string> kernel_name;
  std::optional<std::int64_t> start, end;
  std::optional<std::int64_t> rank_id;
  std::optional<std::int64_t> grid[3], block[3];
  std::optional<std::int64_t> static_shared, dynamic_shared, registers;
  std::optional<std::int64_t> correlation_id, stream_id;
  std::optional<std::int64_t> copy_kind, bytes;
  bool launch_defaulted_flag = false;
  std::vector<std::pair<std::string, double>> counters;  // unsorted here
};

KernelEvent make_kernel(const RowValues& v, size_t row) {
  if (!v.kernel_name || v.kernel_name->empty()) fail_row("missing kernel_name", row);
  if (!v.start) fail_row("missing start timestamp", row);
  if (!v.end) fail_row("missing end timestamp", row);
  KernelEvent e;
  e.kernel_name = *v.kernel_name;
  e.start_ns = *v.start;
  e.end_ns = *v.end;
  if (e.end_ns < e.start_ns) fail_row("end before start", row);
  if (v.rank_id) {
    if (*v.rank_id < 0) fail_row("negative rank_id", row);
    e.rank_id = static_cast<std::uint32_t>(*v.rank_id);
  }
  bool defaulted = v.launch_defaulted_flag;
  for (int i = 0; i < 3; ++i) {
    if (v.grid[i]) {
      if (*v.grid[i] < 1) fail_row("grid component < 1", row);
      e.grid[i] = *v.grid[i];
    } else {
      defaulted = true;
    }
    if (v.block[i]) {
      if (*v.block[i] < 1) fail_row("block component < 1", row);
      e.block[i] = *v.block[i];
    } else {
      defaulted = true;
    }
  }
  e.launch_defaulted = defaulted;
  if (v.static_shared) e.static_shared_mem = *v.static_shared;
  if (v.dynamic_shared) e.dynamic_shared_mem = *v.dynamic_shared;
  if (v.registers) {
    if (*v.registers < 0) fail_row("negative registers_per_thread", row);
    e.registers_per_thread = *v.registers;
  }
  e.correlation_id = v.correlation_id;
  e.extra_counters = v.counters;
  std::sort(e.extra_counters.begin(), e.extra_counters.end());
  return e;
}

MemcpyEvent make_memcpy(const RowValues& v, size_t row) {
  if (!v.copy_kind) fail_row("missing copy_kind", row);
  if (!v.start) fail_row("missing start timestamp", row);
  if (!v.end) fail_row("missing end timestamp", row);
  MemcpyEvent e;
  e.copy_kind = static_cast<int>(*v.copy_kind);
  if (v.bytes) {
    if (*v.bytes < 0) fail_row("negative bytes", row);
    e.bytes = *v.bytes;
  }
  e.start_ns = *v.start;
  e.end_ns = *v.end;
  if (e.end_ns < e.start_ns) fail_row("end before start", row);
  if (v.rank_id) {
    if (*v.rank_id < 0) fail_row("negative rank_id", row);
    e.rank_id = static_cast<std::uint32_t>(*v.rank_id);
  }
  e.correlation_id = v.correlation_id;
  e.stream_id = v.stream_id;
  return e;
}

std::int64_t parse_int_cell(std::string_view text, std::string_view what, size_t row) {
  auto v = parse_scaled_int(text, 0);
  if (!v) fail_row(std::string("non-numeric ") + std::string(what), row);
  return *v;
}

std::int64_t parse_time_cell(std::string_view text, int pow10, size_t row) {
  auto v = parse_scaled_int(text, pow10);
  if (!v) fail_row("non-numeric timestamp", row);
  return *v;
}

TraceData load_csv(std::istream& in, const ColumnMap& column_map, TimeUnit unit) {
  TraceData data;
  std::string line;
  if (!std::getline(in, line)) return data;  // empty file: no rows to ingest
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> header = split_csv_line(line, 0);
  std::vector<std::string> canonical(header.size());
  std::vector<std::optional<Field>> fields(header.size());
  for (size_t i = 0; i < header.size(); ++i) {
    canonical[i] = std::string(column_map.canonical(header[i]));
    fields[i] = resolve_field(canonical[i]);
  }
  bool has_event_type = false;
  for (const auto& f : fields) has_event_type |= (f == Field::event_type);

  const int pow10 = pow10_for(unit);
  size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    if (!has_event_type) throw IngestError("missing required column: event_type");
    std::vector<std::string> cells = split_csv_line(line, row);
    CsvRow r{&cells, &fields, &canonical, row};

    auto type = r.get(Field::event_type);
    if (!type) fail_row("missing event_type value", row);

    RowValues v;
    auto grab_int = [&](Field f, std::string_view what) -> std::optional<std::int64_t> {
      auto cell = r.get(f);
      if (!cell) return std::nullopt;
      return parse_int_cell(*cell, what, row);
    };
    if (auto cell = r.get(Field::start)) v.start = parse_time_cell(*cell, pow10, row);
    if (auto cell = r.get(Field::end)) v.end = parse_time_cell(*cell, pow10, row);
    v.rank_id = grab_int(Field::rank_id, "rank_id");
    v.correlation_id = grab_int(Field::correlation_id, "correlation_id");

    if (*type == "kernel") {
      if (auto cell = r.get(Field::kernel_name)) v.kernel_name = std::string(*cell);
      v.grid[0] = grab_int(Field::grid_x, "gridX");
      v.grid[1] = grab_int(Field::grid_y, "gridY");
      v.grid[2] = grab_int(Field::grid_z, "gridZ");
      v.block[0] = grab_int(Field::block_x, "blockX");
      v.block[1] = grab_int(Field::block_y, "blockY");
      v.block[2] = grab_int(Field::block_z, "blockZ");
      v.static_shared = grab_int(Field::static_shared, "staticSharedMemory");
      v.dynamic_shared = grab_int(Field::dynamic_shared, "dynamicSharedMemory");
      v.registers = grab_int(Field::registers, "registersPerThread");
      if (auto cell = r.get(Field::launch_defaulted)) {
        v.launch_defaulted_flag = (*cell == "true" || *cell == "1");
      }
      // Everything unresolved and non-identification becomes a counter.
      for (size_t i = 0; i < cells.size() && i < fields.size(); ++i) {
        if (fields[i].has_value() || cells[i].empty()) continue;
        if (is_identification(canonical[i], column_map)) continue;
        if (auto num = parse_double(cells[i])) {
          v.counters.emplace_back(canonical[i], *num);
        }
      }
      data.kernels.push_back(make_kernel(v, row));
    } else if (*type == "memcpy") {
      v.copy_kind = grab_int(Field::copy_kind, "copy_kind");
      v.bytes = grab_int(Field::bytes, "bytes");
      v.stream_id = grab_int(Field::stream_id, "stream_id");
      data.memcpys.push_back(make_memcpy(v, row));
    } else {
      fail_row("unknown event_type '" + std::string(*type) + "'", row);
    }
  }
  return data;
}

std::optional<std::int64_t> json_scaled_int(const json& v, int pow10) {
  if (v.is_number_integer()) {
    std::int64_t base = v.get<std::int64_t>();
    std::int64_t out = base;
    for (int i = 0; i < pow10; ++i) {
      if (out > std::numeric_limits<std::int64_t>::max() / 10 ||
          out < std::numeric_limits<std::int64_t>::min() / 10) {
        return std::nullopt;
      }
      out *= 10;
    }
    return out;
  }
  if (v.is_number_unsigned()) {
    std::uint64_t u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      return std::nullopt;
    return json_scaled_int(json(static_cast<std::int64_t>(u)), pow10);
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    double scaled = d;
    for (int i = 0; i < pow10; ++i) scaled *= 10.0;
    if (!std::isfinite(scaled) || std::fabs(scaled) > 9.2e18) return std::nullopt;
    if (pow10 == 0 && std::nearbyint(d) != d) return std::nullopt;
    return std::llround(scaled);
  }
  if (v.is_string()) return parse_scaled_int(v.get<std::string>(), pow10);
  return std::nullopt;
}

TraceData load_jsonl(std::istream& in, const ColumnMap& column_map, TimeUnit unit) {
  TraceData data;
  const int pow10 = pow10_for(unit);
  std::string line;
  size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_row(std::string("invalid JSON: ") + e.what(), row);
    }
    if (!obj.is_object()) fail_row("JSONL line is not an object", row);

    RowValues v;
    std::optional<std::string> type;
    for (const auto& [key, value] : obj.items()) {
      std::string canon = std::string(column_map.canonical(key));
      auto field = resolve_field(canon);
      if (!field) {
        if (is_identification(canon, column_map)) continue;
        if (value.is_number()) {
          v.counters.emplace_back(canon, value.get<double>());
        }
        continue;
      }
      if (value.is_null()) continue;
      switch (*field) {
        case Field::event_type:
          if (value.is_string()) type = value.get<std::string>();
          break;
        case Field::kernel_name:
          if (value.is_string()) v.kernel_name = value.get<std::string>();
          break;
        case Field::start: {
          auto t = json_scaled_int(value, pow10);
          if (!t) fail_row("non-numeric timestamp", row);
          v.start = *t;
          break;
        }
        case Field::end: {
          auto t = json_scaled_int(value, pow10);
          if (!t) fail_row("non-numeric timestamp", row);
          v.end = *t;
          break;
        }
        case Field::launch_defaulted:
          v.launch_defaulted_flag = value.is_boolean() && value.get<bool>();
          break;
        default: {
          auto n = json_scaled_int(value, 0);
          if (!n) fail_row("non-numeric value for " + canon, row);
          switch (*field) {
            case Field::rank_id: v.rank_id = *n; break;
            case Field::grid_x: v.grid[0] = *n; break;
            case Field::grid_y: v.grid[1] = *n; break;
            case Field::grid_z: v.grid[2] = *n; break;
            case Field::block_x: v.block[0] = *n; break;
            case Field::block_y: v.block[1] = *n; break;
            case Field::block_z: v.block[2] = *n; break;
            case Field::static_shared: v.static_shared = *n; break;
            case Field::dynamic_shared: v.dynamic_shared = *n; break;
            case Field::registers: v.registers = *n; break;
            case Field::correlation_id: v.correlation_id = *n; break;
            case Field::stream_id: v.stream_id = *n; break;
            case Field::copy_kind: v.copy_kind = *n; break;
            case Field::bytes: v.bytes = *n; break;
            default: break;
          }
          break;
        }
      }
    }
    if (!type) fail_row("missing event_type value", row);
    if (*type == "kernel") {
      std::sort(v.counters.begin(), v.counters.end());
      data.kernels.push_back(make_kernel(v, row));
    } else if (*type == "memcpy") {
      data.memcpys.push_back(make_memcpy(v, row));
    } else {
      fail_row("unknown event_type '" + *type + "'", row);
    }
  }
  return data;
}

}  // namespace

TraceData load_trace(const std::string& path, TraceFormat format,
                     const ColumnMap& column_map, TimeUnit unit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path);
  return format == TraceFormat::csv ? load_csv(in, column_map, unit)
                                    : load_jsonl(in, column_map, unit);
}

void dump_events_jsonl(const TraceData& data, std::ostream& out) {
  for (const KernelEvent& e : data.kernels) {
    ordered_json o;
    o["event_type"] = "kernel";
    o["kernel_name"] = e.kernel_name;
    o["rank_id"] = e.rank_id;
    o["start"] = e.start_ns;
    o["end"] = e.end_ns;
    o["gridX"] = e.grid[0];
    o["gridY"] = e.grid[1];
    o["gridZ"] = e.grid[2];
    o["blockX"] = e.block[0];
    o["blockY"] = e.block[1];
    o["blockZ"] = e.block[2];
    o["staticSharedMemory"] = e.static_shared_mem;
    o["dynamicSharedMemory"] = e.dynamic_shared_mem;
    o["registersPerThread"] = e.registers_per_thread;
    if (e.correlation_id) o["correlation_id"] = *e.correlation_id;
    if (e.launch_defaulted) o["launch_defaulted"] = true;
    for (const auto& [name, value] : e.extra_counters) o[name] = value;
    out << o.dump() << '\n';
  }
  for (const MemcpyEvent& e : data.memcpys) {
    ordered_json o;
    o["event_type"] = "memcpy";
    o["copy_kind"] = e.copy_kind;
    o["bytes"] = e.bytes;
    o["rank_id"] = e.rank_id;
    o["start"] = e.start_ns;
    o["end"] = e.end_ns;
    if (e.correlation_id) o["correlation_id"] = *e.correlation_id;
    if (e.stream_id) o["stream_id"] = *e.stream_id;
    out << o.dump() << '\n';
  }
}

std::string dump_events_jsonl(const TraceData& data) {
  std::ostringstream ss;
  dump_events_jsonl(data, ss);
  return ss.str();
}

}  // namespace tracecausal
