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

#include "tracecausal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "tracecausal/errors.hpp"
#include "tracecausal/util.hpp"

namespace tracecausal {

std::string_view target_name(TargetKind t) {
  return t == TargetKind::perf_variation ? "perf_variation" : "memory_stall";
}

TargetKind target_from_string(std::string_view s) {
  if (s == "perf_variation") return TargetKind::perf_variation;
  if (s == "memory_stall") return TargetKind::memory_stall;
  throw ConfigError("unknown target '" + std::string(s) + "'");
}

namespace {

struct GroupKey {
  std::string_view name;
  std::array<std::int64_t, 3> grid{0, 0, 0};
  std::array<std::int64_t, 3> block{0, 0, 0};

  bool operator==(const GroupKey&) const = default;
};

struct GroupKeyHash {
  size_t operator()(const GroupKey& k) const {
    std::uint64_t h = fnv1a64(k.name);
    for (auto v : k.grid) h = fnv1a64(std::string_view(reinterpret_cast<const char*>(&v), 8), h);
    for (auto v : k.block) h = fnv1a64(std::string_view(reinterpret_cast<const char*>(&v), 8), h);
    return static_cast<size_t>(h);
  }
};

}  // namespace

std::vector<KernelGroup> group_kernels(std::span<const KernelEvent> events,
                                       GroupKeyMode mode) {
  std::vector<KernelGroup> groups;
  std::unordered_map<GroupKey, size_t, GroupKeyHash> index;
  index.reserve(events.size() / 4 + 8);

  for (std::uint32_t i = 0; i < events.size(); ++i) {
    const KernelEvent& e = events[i];
    GroupKey key{e.kernel_name};
    if (mode == GroupKeyMode::name_plus_launch) {
      key.grid = e.grid;
      key.block = e.block;
    }
    // Key views the event's name; events outlive this call.
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) {
      KernelGroup g;
      g.name = e.kernel_name;
      if (mode == GroupKeyMode::name_plus_launch) {
        g.grid = e.grid;
        g.block = e.block;
        g.launch_keyed = true;
      }
      groups.push_back(std::move(g));
    }
    groups[it->second].event_indices.push_back(i);
  }

  for (KernelGroup& g : groups) {
    KahanSum sum;
    for (auto idx : g.event_indices) {
      sum.add(static_cast<double>(events[idx].duration_ns()));
    }
    g.mean_duration_ns = sum.value() / static_cast<double>(g.n());
  }
  return groups;
}

std::vector<VariabilityRecord> kernel_variability(const KernelGroup& group,
                                                  std::span<const KernelEvent> events) {
  std::vector<VariabilityRecord> out;
  out.reserve(group.n());
  for (auto idx : group.event_indices) {
    const KernelEvent& e = events[idx];
    VariabilityRecord r;
    r.event_ref = idx;
    r.kernel_name = group.name;
    r.target = TargetKind::perf_variation;
    r.target_value = std::fabs(static_cast<double>(e.duration_ns()) - group.mean_duration_ns);
    r.features = kernel_features(e);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::int64_t overlap_ns(const KernelEvent& k, const MemcpyEvent& m) {
  std::int64_t lo = std::max(k.start_ns, m.start_ns);
  std::int64_t hi = std::min(k.end_ns, m.end_ns);
  return std::max<std::int64_t>(0, hi - lo);
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> match_transfers(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys,
    const MatchPolicy& policy, MatchReport* report) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  MatchReport local;
  if (kernels.empty() || memcpys.empty()) {
    local.unmatched = kernels.size();
    if (report) *report += local;
    return pairs;
  }

  // correlation_id -> memcpy index. On duplicates keep the one that wins the
  // tie-break (lower start_ns, then lower index).
  std::unordered_map<std::int64_t, std::uint32_t> by_corr;
  by_corr.reserve(memcpys.size());
  for (std::uint32_t j = 0; j < memcpys.size(); ++j) {
    if (!memcpys[j].correlation_id) continue;
    auto [it, inserted] = by_corr.try_emplace(*memcpys[j].correlation_id, j);
    if (!inserted && memcpys[j].start_ns < memcpys[it->second].start_ns) {
      it->second = j;  // equal starts keep the lower index seen first
    }
  }

  // Per rank: memcpy indices sorted by (start_ns, index), plus the maximal
  // duration to bound the overlap scan window.
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_rank;
  std::map<std::uint32_t, std::int64_t> max_dur;
  for (std::uint32_t j = 0; j < memcpys.size(); ++j) {
    by_rank[memcpys[j].rank_id].push_back(j);
    auto& d = max_dur[memcpys[j].rank_id];
    d = std::max(d, memcpys[j].duration_ns());
  }
  for (auto& [rank, idxs] : by_rank) {
    std::stable_sort(idxs.begin(), idxs.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (memcpys[a].start_ns != memcpys[b].start_ns)
        return memcpys[a].start_ns < memcpys[b].start_ns;
      return a < b;
    });
  }

  for (std::uint32_t i = 0; i < kernels.size(); ++i) {
    const KernelEvent& k = kernels[i];

    // Rule 1: exact correlation id.
    if (k.correlation_id) {
      auto it = by_corr.find(*k.correlation_id);
      if (it != by_corr.end()) {
        pairs.emplace_back(i, it->second);
        ++local.by_correlation;
        continue;
      }
    }

    auto rank_it = by_rank.find(k.rank_id);
    if (rank_it == by_rank.end()) {
      ++local.unmatched;
      continue;
    }
    const auto& idxs = rank_it->second;

    // Rule 2: maximal interval overlap (> 0). Candidates start before the
    // kernel ends and no earlier than start - max transfer duration.
    std::int64_t window_lo = k.start_ns - max_dur[k.rank_id];
    auto first = std::lower_bound(idxs.begin(), idxs.end(), window_lo,
                                  [&](std::uint32_t j, std::int64_t t) {
                                    return memcpys[j].start_ns < t;
                                  });
    std::int64_t best_overlap = 0;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (auto it = first; it != idxs.end(); ++it) {
      const MemcpyEvent& m = memcpys[*it];
      if (m.start_ns >= k.end_ns) break;  // later starts cannot overlap
      std::int64_t ov = overlap_ns(k, m);
      if (ov > best_overlap ||
          (ov == best_overlap && ov > 0 &&
           (m.start_ns < memcpys[best].start_ns ||
            (m.start_ns == memcpys[best].start_ns && *it < best)))) {
        best_overlap = ov;
        best = *it;
      }
    }
    if (best_overlap > 0) {
      pairs.emplace_back(i, best);
      ++local.by_overlap;
      continue;
    }

    // Rule 3: nearest start within the window.
    std::int64_t best_dist = policy.window_ns + 1;
    best = std::numeric_limits<std::uint32_t>::max();
    auto lo = std::lower_bound(idxs.begin(), idxs.end(), k.start_ns - policy.window_ns,
                               [&](std::uint32_t j, std::int64_t t) {
                                 return memcpys[j].start_ns < t;
                               });
    for (auto it = lo; it != idxs.end(); ++it) {
      const MemcpyEvent& m = memcpys[*it];
      if (m.start_ns > k.start_ns + policy.window_ns) break;
      std::int64_t dist = std::abs(m.start_ns - k.start_ns);
      bool better = dist < best_dist;
      if (dist == best_dist && best != std::numeric_limits<std::uint32_t>::max()) {
        const MemcpyEvent& cur = memcpys[best];
        better = m.start_ns < cur.start_ns || (m.start_ns == cur.start_ns && *it < best);
      }
      if (better) {
        best_dist = dist;
        best = *it;
      }
    }
    if (best != std::numeric_limits<std::uint32_t>::max()) {
      pairs.emplace_back(i, best);
      ++local.by_nearest;
    } else {
      ++local.unmatched;
    }
  }

  if (report) *report += local;
  return pairs;
}

double memory_stall(const KernelEvent& kernel, const MemcpyEvent& memcpy) {
  std::int64_t diff = kernel.duration_ns() - memcpy.duration_ns();
  return static_cast<double>(diff < 0 ? -diff : diff);
}

std::vector<VariabilityRecord> memory_stall_records(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::vector<VariabilityRecord> out;
  out.reserve(pairs.size());
  for (const auto& [ki, mi] : pairs) {
    const KernelEvent& k = kernels[ki];
    const MemcpyEvent& m = memcpys[mi];
    VariabilityRecord r;
    r.event_ref = ki;
    r.kernel_name = k.kernel_name;
    r.target = TargetKind::memory_stall;
    r.target_value = memory_stall(k, m);
    r.features = kernel_features(k);
    std::vector<std::pair<std::string, double>> extra = {
        {"copy_kind", static_cast<double>(m.copy_kind)},
        {"transfer_size", static_cast<double>(m.bytes)},
    };
    std::vector<std::pair<std::string, double>> merged;
    merged.reserve(r.features.size() + extra.size());
    std::merge(r.features.begin(), r.features.end(), extra.begin(), extra.end(),
               std::back_inserter(merged),
               [](const auto& a, const auto& b) { return a.first < b.first; });
    r.features = std::move(merged);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tracecausal
