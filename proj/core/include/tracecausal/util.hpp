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

#ifndef TRACECAUSAL_UTIL_HPP_
#define TRACECAUSAL_UTIL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tracecausal {

// Kahan compensated accumulator. Summation order is the caller's iteration
// order; results are bit-reproducible for identical inputs.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

double kahan_total(std::span<const double> values);

// Compensated mean in input order. Precondition: non-empty.
double kahan_mean(std::span<const double> values);

// Shortest decimal representation that round-trips the double. Integral
// values gain no trailing ".0"; NaN renders as "nan", infinities as
// "inf"/"-inf". Used for every numeric field we promise byte-determinism on.
std::string format_double(double v);

// Round to `digits` significant decimal digits (nearest-even at the double
// level). digits must be in [1, 17].
double round_sig(double v, int digits);

// FNV-1a 64-bit over raw bytes; stable content checksum, not cryptographic.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

// Digest of a file's full contents as a fixed-width hex string, or
// std::nullopt if the file cannot be read.
std::optional<std::string> file_digest_hex(const std::string& path);

// Parses a decimal literal and scales it by 10^pow10 into an exact int64
// (e.g. "12.345" with pow10=6 -> 12'345'000). Rejects non-numeric text, lost
// precision (more fractional digits than pow10 allows), and overflow.
std::optional<std::int64_t> parse_scaled_int(std::string_view text, int pow10);

// Inverse standard-normal CDF. Acklam's rational approximation refined by one
// Halley step against std::erfc; |error| well below 1e-12 over (0, 1).
double normal_quantile(double p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace tracecausal

#endif  // TRACECAUSAL_UTIL_HPP_
