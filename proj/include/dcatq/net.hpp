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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcatq::net {

enum class ProbeOutcome { ok, http_error, timeout, connection_error, redirect_loop };

std::string_view to_string(ProbeOutcome outcome);
std::optional<ProbeOutcome> outcome_from_string(std::string_view name);

/// Outcome of checking one URL, live or from a fixture store.
struct ProbeResult {
    std::string url;
    ProbeOutcome outcome = ProbeOutcome::connection_error;
    std::optional<int> status_code;
    std::optional<std::string> content_type;
    std::int64_t response_ms = 0;

    bool ok() const { return outcome == ProbeOutcome::ok; }
};

struct ProbeOptions {
    int timeout_ms = 10000;
    int retries = 1;
    int max_in_flight = 8;
};

/// Probe results keyed by trimmed URL; the lookup the metrics consume.
using ProbeMap = std::map<std::string, ProbeResult, std::less<>>;

/// Recorded probe results keyed by exact URL string (trimmed). Makes the
/// network-dependent checks reproducible offline.
class FixtureStore {
public:
    FixtureStore() = default;

    /// Parse the fixture JSON: an object mapping URL -> {"status": int|null,
    /// "content_type": string|null, "response_ms": int, "outcome"?: string}.
    /// Absent "outcome" is inferred from the status code.
    static FixtureStore parse(std::string_view json_text);
    static FixtureStore load(const std::string& path);

    void insert(ProbeResult result);
    std::optional<ProbeResult> lookup(std::string_view url) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::string, ProbeResult, std::less<>> entries_;
};

/// Probe one URL live: HEAD first, GET fallback on 405/501, at most five
/// redirects, transient failures retried. Elapsed time covers the whole
/// redirect chain of the final attempt, measured on a monotonic clock.
/// Throws UnsupportedSchemeError for non-http(s) URLs.
ProbeResult probe(const std::string& url, const ProbeOptions& options = {});

/// Probe every distinct URL with at most `options.max_in_flight` requests
/// outstanding at once. Per-URL failures land in the results, never throw.
ProbeMap probe_all(const std::vector<std::string>& urls, const ProbeOptions& options = {});

struct FetchResult {
    std::string body;
    std::string content_type;
};

/// GET a document body (catalog download, not probing). Follows redirects.
/// Throws IoError on any failure and UnsupportedSchemeError for non-http(s).
FetchResult fetch_url(const std::string& url, int timeout_ms = 30000);

}  // namespace dcatq::net
