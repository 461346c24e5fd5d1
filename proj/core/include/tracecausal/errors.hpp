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

#ifndef TRACECAUSAL_ERRORS_HPP_
#define TRACECAUSAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tracecausal {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or incomplete trace input (missing column, bad timestamp, ...).
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& msg) : Error("ingest: " + msg) {}
};

// Requested a time range over zero events.
class EmptyTraceError : public Error {
 public:
  explicit EmptyTraceError(const std::string& msg) : Error("empty trace: " + msg) {}
};

// Event timestamp outside the bin spec's [t_min, t_max] range.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error("range: " + msg) {}
};

// Too few rows for conditional-independence testing (n < p + 4).
class InsufficientSamplesError : public Error {
 public:
  explicit InsufficientSamplesError(const std::string& msg)
      : Error("insufficient samples: " + msg) {}
};

// A constant column reached standardize(); should be removed upstream.
class ConstantColumnError : public Error {
 public:
  explicit ConstantColumnError(const std::string& msg)
      : Error("constant column: " + msg) {}
};

// Communication failure or rank death inside the distributed pipeline.
class PipelineAbort : public Error {
 public:
  PipelineAbort(int rank, const std::string& msg)
      : Error("pipeline abort (rank " + std::to_string(rank) + "): " + msg),
        rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

// Rendering was asked to draw zero rows.
class EmptyPlotError : public Error {
 public:
  explicit EmptyPlotError(const std::string& msg) : Error("empty plot: " + msg) {}
};

// Invalid run configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

}  // namespace tracecausal

#endif  // TRACECAUSAL_ERRORS_HPP_
