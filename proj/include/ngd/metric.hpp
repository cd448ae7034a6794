// Copyright 2026 The ngd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ngd/count_provider.hpp"
#include "ngd/observation.hpp"
#include "ngd/term.hpp"

namespace ngd {

/// Flags attached to a distance whose input counts were suspect.
enum class Anomaly {
  NegativeNumerator,      // f(x,y) exceeds both marginals
  InconsistentCounts,     // f(x,y) > min(f(x), f(y)) or a marginal > M
  DegenerateDenominator,  // min(f(x), f(y)) == M
};

std::string_view to_string(Anomaly a);

inline constexpr std::string_view kReasonUnknownTerm = "unknown term";
inline constexpr std::string_view kReasonDegenerateDenominator =
    "degenerate denominator";

/// An NGD result: a finite real (negative only under an anomaly), the point
/// at infinity for terms that never co-occur, or Undefined with a reason.
class DistanceValue {
 public:
  enum class Kind { Finite, Infinite, Undefined };

  static DistanceValue finite(double value,
                              std::optional<Anomaly> anomaly = std::nullopt);
  static DistanceValue infinite();
  static DistanceValue undefined(std::string reason,
                                 std::optional<Anomaly> anomaly = std::nullopt);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }

  /// Finite values only; throws std::logic_error otherwise.
  double value() const;
  /// Undefined values only; empty string otherwise.
  const std::string& reason() const { return reason_; }
  std::optional<Anomaly> anomaly() const { return anomaly_; }

  bool operator==(const DistanceValue&) const = default;

 private:
  DistanceValue() = default;

  Kind kind_ = Kind::Undefined;
  double value_ = 0.0;
  std::string reason_;
  std::optional<Anomaly> anomaly_;
};

/// Normalization constant that maps the empirical expected distance between
/// independent words back to 1.
inline constexpr double kDefaultCalibration = 0.7;

/// The normalized Google distance
///   (max{log f(x), log f(y)} - log f(x,y)) / (log M - log min{f(x), f(y)})
/// computed with natural logarithms (the value is independent of base).
///
/// Degenerate inputs map to the non-finite kinds: a zero marginal is
/// Undefined("unknown term"), f(x,y) = 0 is Infinite, min(f(x),f(y)) = M is
/// Undefined with a DegenerateDenominator anomaly. Inconsistent counts are
/// computed raw (possibly negative) and flagged, never clamped.
DistanceValue ngd(const CountObservation& obs);

/// d(x,y) + d(y,z) - d(x,z). Negative means the triangle inequality is
/// violated through mediator y. nullopt when any leg is not finite.
std::optional<double> triangle_difference(const DistanceValue& d_xy,
                                          const DistanceValue& d_yz,
                                          const DistanceValue& d_xz);

/// min over mediators y of d(x,y) + d(y,z), compared against the direct
/// d(x,z). Infinite legs act as +infinity in the sums; mediator legs that
/// come out Undefined are skipped with a warning. An Undefined direct
/// distance propagates unchanged, and an empty mediator list returns the
/// direct distance exactly.
DistanceValue repaired_ngd(const TermQuery& x, const TermQuery& z,
                           std::span<const TermQuery> mediators,
                           CountProvider& provider);

/// Divides a finite distance by the normalization constant; Infinite and
/// Undefined pass through. Throws std::invalid_argument for
/// normalization <= 0.
DistanceValue calibrate(const DistanceValue& d,
                        double normalization = kDefaultCalibration);

}  // namespace ngd
