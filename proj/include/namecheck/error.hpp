// Copyright 2026 The namecheck Authors.
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

#ifndef NAMECHECK_ERROR_HPP
#define NAMECHECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace namecheck {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (Java source, sequence database, records, config).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A statement kind or marker has no entry in the code alphabet.
class UnknownKind : public Error {
 public:
  using Error::Error;
};

/// An integer code is not part of the code alphabet.
class UnknownCode : public Error {
 public:
  using Error::Error;
};

class EmptyDatabase : public Error {
 public:
  using Error::Error;
};

class SupportOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownFormat : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration: bad regex, bad lexicon line, bad option value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace namecheck

#endif  // NAMECHECK_ERROR_HPP
