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
#include <string>
#include <unordered_map>
#include <vector>

#include "ngd/count_provider.hpp"
#include "ngd/observation.hpp"
#include "ngd/term.hpp"

namespace ngd {

struct TokenizerConfig {
  std::size_t min_token_length = 1;
};

struct SkipRecord {
  std::string source;  // file path or "line N"
  std::string reason;
};

struct BuildReport {
  std::uint64_t documents = 0;
  std::uint64_t vocabulary = 0;
  std::vector<SkipRecord> skipped;
};

/// Immutable document-frequency and co-occurrence index over a local text
/// corpus. Counting is at document level: a term counts once per document
/// containing it, never per occurrence. Multi-token terms match as
/// contiguous token subsequences (quoted-phrase semantics); pair counts are
/// conjunctions (both terms present somewhere in the document).
///
/// The index never changes after build, so any number of threads may query
/// it concurrently.
class CorpusIndex {
 public:
  /// Builds from in-memory documents, one string each.
  static CorpusIndex from_documents(const std::vector<std::string>& docs,
                                    TokenizerConfig cfg = {});
  /// Builds from every regular file under root, recursively, one document
  /// per file. Non-UTF-8 files are skipped and recorded in the build report.
  static CorpusIndex from_directory(const std::filesystem::path& root,
                                    TokenizerConfig cfg = {});
  /// Builds from a line-delimited file, one document per newline-terminated
  /// line.
  static CorpusIndex from_lines_file(const std::filesystem::path& file,
                                     TokenizerConfig cfg = {});

  /// M: total number of indexed documents.
  std::uint64_t document_count() const { return docs_.size(); }

  /// Number of documents containing t (contiguous token subsequence for
  /// phrases); 0 for unseen terms.
  std::uint64_t hit_count(const TermQuery& t) const;

  /// Number of documents containing both x and y; symmetric.
  std::uint64_t pair_count(const TermQuery& x, const TermQuery& y) const;

  /// Bundles f(x), f(y), f(x,y) and M into one observation. Always
  /// locally consistent by construction.
  CountObservation observe(const TermQuery& x, const TermQuery& y) const;

  /// Single-token vocabulary with document counts, sorted by token.
  std::vector<std::pair<std::string, std::uint64_t>> vocabulary() const;

  const BuildReport& build_report() const { return report_; }

  /// Stable hash of the corpus bytes; identical corpus bytes and tokenizer
  /// settings give an identical fingerprint.
  const std::string& fingerprint() const { return fingerprint_; }
  std::string provider_id() const { return "local:" + fingerprint_; }

 private:
  CorpusIndex() = default;

  static CorpusIndex build(std::vector<std::string> texts,
                           std::vector<std::string> labels,
                           std::vector<SkipRecord> pre_skipped,
                           TokenizerConfig cfg);

  /// Sorted ids of documents containing t; phrase-aware.
  std::vector<std::uint32_t> doc_ids_for(const TermQuery& t) const;
  bool doc_contains_phrase(std::uint32_t doc,
                           const std::vector<std::uint32_t>& phrase) const;

  std::unordered_map<std::string, std::uint32_t> vocab_;  // token -> id
  std::vector<std::string> token_names_;                  // id -> token
  std::vector<std::vector<std::uint32_t>> postings_;      // id -> sorted docs
  std::vector<std::vector<std::uint32_t>> docs_;          // doc -> id stream
  BuildReport report_;
  std::string fingerprint_;
};

/// CountProvider view over a local index. The index must outlive the
/// provider.
class LocalIndexProvider final : public CountProvider {
 public:
  explicit LocalIndexProvider(const CorpusIndex& index) : index_(&index) {}

  CountObservation observe(const TermQuery& x, const TermQuery& y) override {
    return index_->observe(x, y);
  }
  std::string id() const override { return index_->provider_id(); }

 private:
  const CorpusIndex* index_;
};

}  // namespace ngd
