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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ngd/corpus.hpp"
#include "ngd/count_provider.hpp"
#include "ngd/metric.hpp"
#include "ngd/term.hpp"

namespace ngd {

/// A labeled set of at least two distinct terms.
struct WordSet {
  std::string label;
  std::vector<TermQuery> words;

  /// Throws InputError when fewer than two words remain after
  /// canonical deduplication.
  static WordSet create(std::string label, std::vector<TermQuery> words);
};

struct ExcludedPair {
  std::string pair_key;
  std::string reason;
};

struct SetStatistics {
  std::string label;
  std::size_t word_count = 0;
  std::size_t pair_count = 0;  // pairs with a finite distance
  double mean_ngd = 0.0;
  double std_ngd = 0.0;  // population standard deviation
  /// Mean triangle difference over all ordered triples of distinct words
  /// whose three legs are finite; absent when no triple qualifies.
  std::optional<double> mean_td;
  std::size_t triples_used = 0;
  std::size_t triples_skipped = 0;
  std::vector<ExcludedPair> excluded_pairs;
};

/// Mean and population standard deviation of the NGD over all unordered
/// pairs in the set, plus the mean triangle difference over ordered
/// triples. Non-finite pairs are excluded and reported, never averaged in.
/// Throws Error when no pair has a finite distance.
SetStatistics set_statistics(const WordSet& ws, CountProvider& source);

/// Sum(w_i * v_i) / Sum(w_i). Throws std::invalid_argument on an empty list
/// or a non-positive weight.
double weighted_mean(std::span<const std::pair<double, double>> values);

struct EtdReport {
  double e_ngd = 0.0;  // word-count-weighted mean NGD across sets
  double e_td = 0.0;   // word-count-weighted mean TD across sets
  double difference = 0.0;
  double tolerance = 0.0;
  bool within_tolerance = false;
};

/// Checks that the expected triangle difference tracks the expected NGD,
/// weighting each set by its word count. Throws std::invalid_argument on
/// empty input or a set without a populated mean_td.
EtdReport etd_consistency(std::span<const SetStatistics> sets,
                          double tolerance = 0.1);

struct TriangleViolation {
  TermQuery x;
  TermQuery mediator;
  TermQuery z;  // endpoints ordered so that x < z
  double d_xm = 0.0;
  double d_mz = 0.0;
  double d_xz = 0.0;
  double td = 0.0;  // d_xm + d_mz - d_xz, below -tolerance
};

struct ViolationScan {
  std::vector<TriangleViolation> violations;
  std::size_t triples_examined = 0;
  std::size_t assignments_skipped = 0;  // mediator choices with a
                                        // non-finite leg
};

/// Scans every unordered triple of distinct words under every mediator
/// assignment and reports those with a triangle difference below
/// -tolerance. Output order is deterministic: lexicographic by triple, then
/// by mediator.
ViolationScan scan_triangle_violations(std::span<const TermQuery> words,
                                       CountProvider& source,
                                       double tolerance = 0.0);

/// Word-count-weighted mean NGD across the sets: the empirical
/// normalization constant for calibrate(). Sets without a single usable
/// pair are skipped with a warning; throws Error when none remain.
double estimate_calibration_constant(std::span<const WordSet> sets,
                                     CountProvider& source);

/// Portable uniform draw in [0, n); rejection sampling over mt19937_64 so
/// results are identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Samples `size` distinct vocabulary terms, uniformly without replacement,
/// restricted to terms appearing in at least min_count documents.
WordSet sample_word_set(const CorpusIndex& index, std::string label,
                        std::size_t size, std::mt19937_64& rng,
                        std::uint64_t min_count = 5);

}  // namespace ngd
