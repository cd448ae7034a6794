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

#include <algorithm>
#include <cstdint>
#include <string>

namespace ngd {

/// Hit counts f(x), f(y), f(x,y) plus index size M as reported by one count
/// source at one point in time.
struct CountObservation {
  std::uint64_t fx = 0;
  std::uint64_t fy = 0;
  std::uint64_t fxy = 0;
  std::uint64_t m = 1;  // always >= 1
  std::string provider_id;
  std::int64_t timestamp = 0;  // seconds since epoch

  /// True iff the counts could have come from one coherent document set.
  /// Local indexes always satisfy this; remote sources may not.
  bool locally_consistent() const {
    return fxy <= std::min(fx, fy) && std::max(fx, fy) <= m;
  }

  bool operator==(const CountObservation&) const = default;
};

}  // namespace ngd
