// Copyright 2026 The Sentest Authors
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

#ifndef SENTEST_ERRORS_H_
#define SENTEST_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentest {

// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kInvalidArgument,
  kConfig,
  kParse,
  kValidation,
  kEncoding,
  kIo,
  kProvider,
  kProtocol,
  kRequest,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& message)
      : Error(ErrorKind::kInvalidArgument, message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorKind::kConfig, message) {}
};

// Malformed record in an input file. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::kParse, message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A well-formed record that violates a data invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class EncodingError : public Error {
 public:
  explicit EncodingError(const std::string& message)
      : Error(ErrorKind::kEncoding, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::kIo, message) {}
};

// Embedding provider failed after retries. [begin, end) is the range of
// input indices of the batch that could not be served.
class ProviderError : public Error {
 public:
  ProviderError(std::size_t begin, std::size_t end, const std::string& message)
      : Error(ErrorKind::kProvider, message), begin_(begin), end_(end) {}

  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }

 private:
  std::size_t begin_;
  std::size_t end_;
};

// The provider answered, but the answer breaks the wire contract.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& message)
      : Error(ErrorKind::kProtocol, message) {}
};

// The provider rejected the request as malformed (HTTP 400).
class RequestError : public Error {
 public:
  explicit RequestError(const std::string& message)
      : Error(ErrorKind::kRequest, message) {}
};

}  // namespace sentest

#endif  // SENTEST_ERRORS_H_
