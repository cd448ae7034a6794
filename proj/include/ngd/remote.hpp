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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ngd/count_provider.hpp"
#include "ngd/term.hpp"

namespace ngd {

/// How to pull a hit count out of a response body.
struct CountExtractionRule {
  enum class Kind { JsonPointer, Regex };
  Kind kind = Kind::JsonPointer;
  std::string json_pointer;   // e.g. "/count"
  std::string regex_pattern;  // e.g. "about ([0-9,]+) results"
  int regex_group = 1;
};

struct RemoteEndpointConfig {
  std::string url_template;  // contains exactly one {query}
  CountExtractionRule extract;
  double requests_per_second = 1.0;
  int max_retries = 3;
  std::chrono::milliseconds timeout{5000};
  std::chrono::milliseconds backoff_initial{100};
  /// Index size M reported in every observation; remote search APIs do not
  /// expose it, so it is configured alongside the endpoint.
  std::uint64_t index_size = 0;
  std::map<std::string, std::string> headers;  // static pass-through
  std::filesystem::path cache_path;            // empty: in-memory cache only

  /// Throws InputError when the template or limits are malformed.
  void validate() const;
};

/// Reads an endpoint config from a JSON file. See README for the schema.
RemoteEndpointConfig load_remote_config(const std::filesystem::path& path);

/// RFC 3986 percent-encoding; everything outside [A-Za-z0-9-._~] escapes.
std::string percent_encode(std::string_view text);
std::string percent_decode(std::string_view text);

/// Query string for a term or a pair: a single term becomes a quoted
/// phrase, a pair two quoted phrases joined by a space (conjunction), both
/// percent-encoded. Deterministic in argument order.
std::string build_remote_query(const TermQuery& x,
                               const TermQuery* y = nullptr);

/// Serializes callers onto a minimum-interval schedule: N acquisitions at
/// limit r per second take at least (N-1)/r seconds.
class RateLimiter {
 public:
  explicit RateLimiter(double per_second);
  void acquire();

 private:
  std::mutex mu_;
  std::chrono::steady_clock::time_point next_{};
  std::chrono::nanoseconds interval_;
};

/// Cache of query -> count with optional persistence. Entries never expire;
/// a snapshot of counts should stay coherent rather than fresh. Writes go
/// to a temp file that atomically replaces the previous one, so a crash
/// mid-write cannot corrupt earlier entries.
class CountCache {
 public:
  struct Entry {
    std::uint64_t count = 0;
    std::int64_t fetched_at = 0;
    bool operator==(const Entry&) const = default;
  };

  explicit CountCache(std::filesystem::path file = {});

  std::optional<Entry> get(const std::string& key) const;
  void put(const std::string& key, Entry entry);
  std::size_t size() const;

 private:
  void persist_locked() const;

  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, Entry> entries_;
  std::filesystem::path file_;
};

/// Count source over an HTTP endpoint with caching, rate limiting and
/// exponential-backoff retries. Concurrent callers are allowed; outbound
/// requests funnel through one rate-limited queue.
class RemoteProvider final : public CountProvider {
 public:
  explicit RemoteProvider(RemoteEndpointConfig cfg);

  CountObservation observe(const TermQuery& x, const TermQuery& y) override;

  /// Single-term and pair hit counts, cached and rate limited like any
  /// other query. Pair queries are issued with the terms in lexicographic
  /// order so that cached results are symmetric.
  std::uint64_t term_hits(const TermQuery& x);
  std::uint64_t pair_hits(const TermQuery& x, const TermQuery& y);

  std::string id() const override { return id_; }

  /// Number of requests that actually went upstream (cache misses).
  std::uint64_t upstream_requests() const { return upstream_.load(); }

 private:
  CountCache::Entry fetch(const std::string& query);

  RemoteEndpointConfig cfg_;
  RateLimiter limiter_;
  CountCache cache_;
  std::string id_;
  std::string base_url_;       // scheme://host[:port]
  std::string path_template_;  // /path?q={query}
  std::atomic<std::uint64_t> upstream_{0};
};

}  // namespace ngd
