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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ngd/count_provider.hpp"
#include "ngd/metric.hpp"
#include "ngd/term.hpp"

namespace ngd {

inline constexpr int kSnapshotVersion = 1;

/// A frozen set of term and pair counts from one provider at one time.
/// Pair keys are order-normalized ("a\tb" with a <= b lexicographically) so
/// lookups are symmetric.
struct CountSnapshot {
  std::uint64_t m = 1;
  std::map<std::string, std::uint64_t> term_counts;
  std::map<std::string, std::uint64_t> pair_counts;
  std::string provider_id;
  std::int64_t created_at = 0;  // seconds since epoch

  static std::string pair_key(const TermQuery& x, const TermQuery& y);

  bool operator==(const CountSnapshot&) const = default;
};

/// Canonical serialization: JSON with sorted keys, two-space indent, one
/// trailing newline. Serializing the same snapshot twice is byte-identical.
std::string serialize_snapshot(const CountSnapshot& snap);

/// Throws InputError on malformed input or an unknown version.
CountSnapshot parse_snapshot(std::string_view text);

/// Writes to a temp file in the target directory, then atomically renames.
void save_snapshot(const CountSnapshot& snap, const std::filesystem::path& to);
CountSnapshot load_snapshot(const std::filesystem::path& from);

/// "2026-01-31T12:00:00Z" <-> seconds since epoch (UTC, whole seconds).
std::string format_iso8601(std::int64_t epoch_seconds);
std::int64_t parse_iso8601(std::string_view text);

/// Count source backed by a snapshot; symmetric in pair order and
/// independent of any live backend.
class SnapshotProvider final : public CountProvider {
 public:
  explicit SnapshotProvider(CountSnapshot snap) : snap_(std::move(snap)) {}

  /// Throws SnapshotMissError naming the absent term or pair key.
  CountObservation observe(const TermQuery& x, const TermQuery& y) override;
  std::string id() const override { return snap_.provider_id; }
  const CountSnapshot& snapshot() const { return snap_; }

 private:
  CountSnapshot snap_;
};

/// Captures every marginal and pair count needed to recompute the NGD of
/// each listed pair offline. Source errors propagate; the failing pair is
/// reported on the warning stream.
CountSnapshot snapshot_from_pairs(
    CountProvider& source,
    std::span<const std::pair<TermQuery, TermQuery>> pairs,
    std::optional<std::int64_t> created_at = std::nullopt);

struct PairStability {
  std::string pair_key;
  DistanceValue ngd_a;
  DistanceValue ngd_b;
  /// |ngd_b - ngd_a| / ngd_a; absent when either side is not finite or the
  /// baseline is zero.
  std::optional<double> relative_change;
};

struct StabilityReport {
  std::vector<PairStability> pairs;
  std::optional<double> max_relative_change;
  std::string max_pair_key;
};

/// Per-pair NGD under both snapshots plus the largest relative drift.
/// Throws CoverageError naming the first missing key.
StabilityReport compare_snapshots(
    const CountSnapshot& a, const CountSnapshot& b,
    std::span<const std::pair<TermQuery, TermQuery>> pairs);

}  // namespace ngd
