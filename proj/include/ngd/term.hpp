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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ngd {

/// Longest phrase a query may carry; longer input is rejected at
/// canonicalization.
inline constexpr std::size_t kMaxPhraseTokens = 8;

/// Splits text into lowercase tokens on any run of non-alphanumeric bytes.
/// Bytes >= 0x80 are kept verbatim so UTF-8 letters stay inside tokens.
/// Tokens shorter than min_token_length are dropped.
std::vector<std::string> tokenize(std::string_view text,
                                  std::size_t min_token_length = 1);

/// A single- or multi-word search term in canonical form: 1..8 lowercase
/// tokens, none empty, none containing whitespace. The canonical string is
/// the tokens joined by single spaces, and canonicalizing it again is a
/// no-op.
class TermQuery {
 public:
  /// Throws InputError when the text yields no tokens or more than
  /// kMaxPhraseTokens.
  static TermQuery canonicalize(std::string_view raw);

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& str() const { return canonical_; }
  bool single_token() const { return tokens_.size() == 1; }

  bool operator==(const TermQuery& other) const {
    return canonical_ == other.canonical_;
  }
  std::strong_ordering operator<=>(const TermQuery& other) const {
    return canonical_ <=> other.canonical_;
  }

 private:
  explicit TermQuery(std::vector<std::string> tokens);

  std::vector<std::string> tokens_;
  std::string canonical_;
};

}  // namespace ngd
