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

#include <stdexcept>
#include <string>
#include <utility>

namespace ngd {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: missing files, malformed flags, empty corpora,
/// unparseable snapshot or config files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A snapshot source was asked for a term or pair it does not contain.
class SnapshotMissError : public Error {
 public:
  explicit SnapshotMissError(std::string key)
      : Error("snapshot miss: " + key), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Transport-level failure talking to a remote count endpoint.
class NetworkError : public Error {
 public:
  NetworkError(const std::string& what, std::string query)
      : Error(what + " (query: " + query + ")"), query_(std::move(query)) {}
  const std::string& query() const { return query_; }

 private:
  std::string query_;
};

/// The remote endpoint answered but the count could not be extracted.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string query)
      : Error(what + " (query: " + query + ")"), query_(std::move(query)) {}
  const std::string& query() const { return query_; }

 private:
  std::string query_;
};

/// The remote endpoint kept refusing after all retries were spent.
class RateLimitedError : public Error {
 public:
  explicit RateLimitedError(std::string query)
      : Error("rate limited after retries (query: " + query + ")"),
        query_(std::move(query)) {}
  const std::string& query() const { return query_; }

 private:
  std::string query_;
};

/// A snapshot comparison needed a key that one side does not cover.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, std::string key)
      : Error(what + ": " + key), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace ngd
