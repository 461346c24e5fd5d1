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

#include "tracecausal/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tracecausal/errors.hpp"
#include "tracecausal/util.hpp"

namespace tracecausal {

BinSpec BinSpec::make(std::int64_t t_min_ns, std::int64_t t_max_ns,
                      std::int64_t width_ns) {
  if (t_max_ns < t_min_ns) throw RangeError("t_max < t_min");
  if (width_ns < 1) throw RangeError("bin width must be positive");
  BinSpec s;
  s.t_min_ns = t_min_ns;
  s.t_max_ns = t_max_ns;
  s.width_ns = width_ns;
  std::int64_t span = t_max_ns - t_min_ns;
  s.bin_count = std::max<std::int64_t>(1, (span + width_ns - 1) / width_ns);
  return s;
}

std::pair<std::int64_t, std::int64_t> global_time_range(
    std::span<const KernelEvent> kernels, std::span<const MemcpyEvent> memcpys) {
  if (kernels.empty() && memcpys.empty()) {
    throw EmptyTraceError("global_time_range needs at least one event");
  }
  std::int64_t t_min = std::numeric_limits<std::int64_t>::max();
  std::int64_t t_max = std::numeric_limits<std::int64_t>::min();
  for (const auto& e : kernels) {
    t_min = std::min(t_min, e.start_ns);
    t_max = std::max(t_max, e.end_ns);
  }
  for (const auto& e : memcpys) {
    t_min = std::min(t_min, e.start_ns);
    t_max = std::max(t_max, e.end_ns);
  }
  return {t_min, t_max};
}

std::int64_t assign_bin(std::int64_t event_start_ns, const BinSpec& spec) {
  if (event_start_ns < spec.t_min_ns || event_start_ns > spec.t_max_ns) {
    throw RangeError("event start " + std::to_string(event_start_ns) +
                     " outside [" + std::to_string(spec.t_min_ns) + ", " +
                     std::to_string(spec.t_max_ns) + "]");
  }
  std::int64_t idx = (event_start_ns - spec.t_min_ns) / spec.width_ns;
  // start == t_max on a bin boundary clamps into the last bin.
  return std::min(idx, spec.bin_count - 1);
}

namespace {

double quartile(std::span<const double> sorted, double q) {
  size_t n = sorted.size();
  double p = static_cast<double>(n - 1) * q;
  size_t lo = static_cast<size_t>(p);
  double frac = p - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 >= n) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

BinSummary summarize_bin(std::span<const double> values, std::int64_t bin_id) {
  BinSummary s;
  s.bin_id = bin_id;
  s.count = static_cast<std::int64_t>(values.size());
  if (values.empty()) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    s.min = s.max = s.mean = s.variance = s.std = s.q1 = s.q2 = s.q3 = nan;
    return s;
  }

  KahanSum sum;
  double mn = values[0], mx = values[0];
  for (double v : values) {
    sum.add(v);
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  s.min = mn;
  s.max = mx;
  s.mean = sum.value() / static_cast<double>(values.size());

  if (values.size() < 2) {
    s.variance = 0.0;
  } else {
    KahanSum sq;
    for (double v : values) {
      double d = v - s.mean;
      sq.add(d * d);
    }
    s.variance = sq.value() / static_cast<double>(values.size() - 1);
    if (s.variance < 0) s.variance = 0;  // compensation can leave -0-ish dust
  }
  s.std = std::sqrt(s.variance);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.q1 = quartile(sorted, 0.25);
  s.q2 = quartile(sorted, 0.50);
  s.q3 = quartile(sorted, 0.75);
  return s;
}

std::vector<std::int64_t> rank_bins(std::span<const BinSummary> summaries, std::int64_t k) {
  std::vector<const BinSummary*> nonempty;
  nonempty.reserve(summaries.size());
  for (const auto& s : summaries) {
    if (s.count > 0) nonempty.push_back(&s);
  }
  std::sort(nonempty.begin(), nonempty.end(), [](const BinSummary* a, const BinSummary* b) {
    if (a->variance != b->variance) return a->variance > b->variance;
    return a->bin_id < b->bin_id;
  });
  size_t take = std::min<size_t>(nonempty.size(), k < 0 ? 0 : static_cast<size_t>(k));
  std::vector<std::int64_t> out;
  out.reserve(take);
  for (size_t i = 0; i < take; ++i) out.push_back(nonempty[i]->bin_id);
  return out;
}

std::string bins_to_csv(std::span<const BinSummary> summaries) {
  std::vector<const BinSummary*> order;
  order.reserve(summaries.size());
  for (const auto& s : summaries) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const BinSummary* a, const BinSummary* b) { return a->bin_id < b->bin_id; });

  std::ostringstream out;
  out << "bin_id,count,min,max,mean,variance,std,q1,q2,q3\n";
  for (const BinSummary* s : order) {
    out << s->bin_id << ',' << s->count;
    const double stats[] = {s->min, s->max, s->mean, s->variance, s->std, s->q1, s->q2, s->q3};
    for (double v : stats) {
      out << ',';
      if (s->count > 0) out << format_double(v);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tracecausal
