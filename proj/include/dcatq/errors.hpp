// Copyright 2026 The dcatq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dcatq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed Turtle or RDF/XML input.
class SyntaxError : public Error {
public:
    SyntaxError(unsigned line, const std::string& message)
        : Error("syntax error at line " + std::to_string(line) + ": " + message), line_(line) {}
    unsigned line() const { return line_; }

private:
    unsigned line_;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public Error {
public:
    explicit EncodingError(const std::string& message) : Error("encoding error: " + message) {}
};

/// No catalog and no dataset entity could be found, or a metric has an
/// empty domain (m = 0, Q = 0, no keyable datasets, ...).
class EmptyCatalogError : public Error {
public:
    explicit EmptyCatalogError(const std::string& message) : Error("empty catalog: " + message) {}
};

/// File or URL could not be read.
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("i/o error: " + message) {}
};

/// Serialization format could not be determined from extension or content type.
class FormatUndetectableError : public Error {
public:
    explicit FormatUndetectableError(const std::string& source)
        : Error("cannot detect RDF format of '" + source + "' (expected .ttl or .rdf/.xml)") {}
};

/// A URL-valued attribute has no entry in the offline fixture store.
class ProbeMissingError : public Error {
public:
    explicit ProbeMissingError(const std::string& url)
        : Error("no probe result for URL: " + url), url_(url) {}
    const std::string& url() const { return url_; }

private:
    std::string url_;
};

/// probe() was handed a URL that is neither http nor https.
class UnsupportedSchemeError : public Error {
public:
    explicit UnsupportedSchemeError(const std::string& url)
        : Error("unsupported URL scheme: " + url) {}
};

/// Malformed fixture file entry.
class FixtureSchemaError : public Error {
public:
    explicit FixtureSchemaError(const std::string& message)
        : Error("fixture schema error: " + message) {}
};

/// Config file violates the documented schema (unknown key, bad range, bad type).
class ConfigSchemaError : public Error {
public:
    ConfigSchemaError(const std::string& key, const std::string& message)
        : Error("config error at '" + key + "': " + message), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Dataset has neither an identifier nor a title to derive a key from.
class KeyUnavailableError : public Error {
public:
    explicit KeyUnavailableError(const std::string& entity)
        : Error("no identifier or title to build a dataset key for " + entity) {}
};

/// Text has no countable words (readability domain error).
class NoWordsError : public Error {
public:
    explicit NoWordsError(const std::string& message) : Error("no words: " + message) {}
};

/// Scalability harness has nothing to replicate.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& message)
        : Error("insufficient data: " + message) {}
};

}  // namespace dcatq
