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

#include <string>

#include "ngd/observation.hpp"
#include "ngd/term.hpp"

namespace ngd {

/// Any backend that can answer (f(x), f(y), f(x,y), M) for a pair of terms:
/// a local corpus index, a persisted snapshot, or a remote search API.
class CountProvider {
 public:
  virtual ~CountProvider() = default;

  /// Returns one observation with provider_id and timestamp filled in.
  /// Throws SnapshotMissError for snapshot sources and NetworkError /
  /// ParseError / RateLimitedError for remote sources.
  virtual CountObservation observe(const TermQuery& x, const TermQuery& y) = 0;

  virtual std::string id() const = 0;
};

}  // namespace ngd
