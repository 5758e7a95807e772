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

#include "dcatq/net.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "dcatq/errors.hpp"
#include "dcatq/rdf.hpp"

namespace dcatq::net {
namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

struct UrlParts {
    std::string origin;  // scheme://host[:port]
    std::string path;    // path + query, fragment stripped
};

UrlParts split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw UnsupportedSchemeError(url);
    std::string scheme = url.substr(0, scheme_end);
    for (auto& c : scheme) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (scheme != "http" && scheme != "https") throw UnsupportedSchemeError(url);

    std::string rest = url.substr(scheme_end + 3);
    auto slash = rest.find('/');
    std::string host_port = slash == std::string::npos ? rest : rest.substr(0, slash);
    std::string path = slash == std::string::npos ? std::string("/") : rest.substr(slash);
    auto hash = path.find('#');
    if (hash != std::string::npos) path.resize(hash);
    return {scheme + "://" + host_port, path};
}

struct RawResponse {
    bool received = false;
    int status = 0;
    std::string content_type;
    std::string location;
};

RawResponse head_request(httplib::Client& client, const std::string& path) {
    RawResponse out;
    auto res = client.Head(path);
    if (res) {
        out.received = true;
        out.status = res->status;
        out.content_type = res->get_header_value("Content-Type");
        out.location = res->get_header_value("Location");
    }
    return out;
}

/// GET that stops after the response headers; the probe never needs bodies.
RawResponse get_headers_request(httplib::Client& client, const std::string& path) {
    RawResponse out;
    client.Get(
        path,
        [&out](const httplib::Response& response) {
            out.received = true;
            out.status = response.status;
            out.content_type = response.get_header_value("Content-Type");
            out.location = response.get_header_value("Location");
            return false;
        },
        [](const char*, std::size_t) { return false; });
    return out;
}

bool is_redirect(int status) {
    return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

constexpr int kMaxRedirects = 5;

ProbeResult single_attempt(const std::string& url, int timeout_ms) {
    ProbeResult result;
    result.url = url;
    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&started]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    std::string current = url;
    for (int hop = 0; hop <= kMaxRedirects; ++hop) {
        UrlParts parts = split_url(current);
        httplib::Client client(parts.origin);
        client.set_connection_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_read_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_write_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_follow_location(false);

        RawResponse response = head_request(client, parts.path);
        if (response.received && (response.status == 405 || response.status == 501)) {
            response = get_headers_request(client, parts.path);
        }
        if (!response.received) {
            auto spent = elapsed_ms();
            if (spent >= timeout_ms) {
                result.outcome = ProbeOutcome::timeout;
                result.response_ms = timeout_ms;
            } else {
                result.outcome = ProbeOutcome::connection_error;
                result.response_ms = spent;
            }
            return result;
        }
        if (is_redirect(response.status) && !response.location.empty()) {
            if (hop == kMaxRedirects) {
                result.outcome = ProbeOutcome::redirect_loop;
                result.status_code = response.status;
                result.response_ms = elapsed_ms();
                return result;
            }
            current = rdf::resolve_iri(response.location, current);
            continue;
        }
        result.outcome = response.status < 400 ? ProbeOutcome::ok : ProbeOutcome::http_error;
        result.status_code = response.status;
        if (!response.content_type.empty()) result.content_type = response.content_type;
        result.response_ms = elapsed_ms();
        return result;
    }
    result.outcome = ProbeOutcome::redirect_loop;
    result.response_ms = elapsed_ms();
    return result;
}

ProbeOutcome infer_outcome(const std::string& url, int status) {
    if (status >= 200 && status <= 399) return ProbeOutcome::ok;
    if (status >= 400 && status <= 599) return ProbeOutcome::http_error;
    throw FixtureSchemaError(url + ": status " + std::to_string(status) + " out of range");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return std::move(buffer).str();
}

}  // namespace

std::string_view to_string(ProbeOutcome outcome) {
    switch (outcome) {
        case ProbeOutcome::ok: return "ok";
        case ProbeOutcome::http_error: return "http_error";
        case ProbeOutcome::timeout: return "timeout";
        case ProbeOutcome::connection_error: return "connection_error";
        case ProbeOutcome::redirect_loop: return "redirect_loop";
    }
    return "unknown";
}

std::optional<ProbeOutcome> outcome_from_string(std::string_view name) {
    for (auto outcome : {ProbeOutcome::ok, ProbeOutcome::http_error, ProbeOutcome::timeout,
                         ProbeOutcome::connection_error, ProbeOutcome::redirect_loop}) {
        if (name == to_string(outcome)) return outcome;
    }
    return std::nullopt;
}

FixtureStore FixtureStore::parse(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FixtureSchemaError(e.what());
    }
    if (!doc.is_object()) throw FixtureSchemaError("top level must be a JSON object");

    FixtureStore store;
    for (const auto& [url, entry] : doc.items()) {
        if (!entry.is_object()) throw FixtureSchemaError(url + ": entry must be an object");
        for (const auto& [key, _] : entry.items()) {
            if (key != "status" && key != "content_type" && key != "response_ms" &&
                key != "outcome") {
                throw FixtureSchemaError(url + ": unknown key \"" + key + "\"");
            }
        }
        if (!entry.contains("status")) throw FixtureSchemaError(url + ": missing \"status\"");

        ProbeResult result;
        result.url = trim(url);
        if (result.url.empty()) throw FixtureSchemaError("empty URL key");

        const json& status = entry.at("status");
        if (status.is_number_integer()) {
            result.status_code = status.get<int>();
        } else if (!status.is_null()) {
            throw FixtureSchemaError(url + ": \"status\" must be an integer or null");
        }

        if (entry.contains("content_type")) {
            const json& ct = entry.at("content_type");
            if (ct.is_string()) result.content_type = ct.get<std::string>();
            else if (!ct.is_null()) throw FixtureSchemaError(url + ": \"content_type\" must be a string or null");
        }

        if (entry.contains("response_ms")) {
            const json& ms = entry.at("response_ms");
            if (!ms.is_number_integer() || ms.get<std::int64_t>() < 0) {
                throw FixtureSchemaError(url + ": \"response_ms\" must be a non-negative integer");
            }
            result.response_ms = ms.get<std::int64_t>();
        }

        if (entry.contains("outcome")) {
            const json& outcome = entry.at("outcome");
            if (!outcome.is_string()) throw FixtureSchemaError(url + ": \"outcome\" must be a string");
            auto parsed = outcome_from_string(outcome.get<std::string>());
            if (!parsed) throw FixtureSchemaError(url + ": unknown outcome \"" + outcome.get<std::string>() + "\"");
            result.outcome = *parsed;
            if (result.outcome == ProbeOutcome::ok &&
                (!result.status_code || *result.status_code < 200 || *result.status_code > 399)) {
                throw FixtureSchemaError(url + ": outcome \"ok\" requires a status in [200,399]");
            }
        } else {
            if (!result.status_code) {
                throw FixtureSchemaError(url + ": \"outcome\" required when status is null");
            }
            result.outcome = infer_outcome(url, *result.status_code);
        }
        store.insert(std::move(result));
    }
    return store;
}

FixtureStore FixtureStore::load(const std::string& path) { return parse(read_file(path)); }

void FixtureStore::insert(ProbeResult result) {
    std::string key = trim(result.url);
    entries_.insert_or_assign(std::move(key), std::move(result));
}

std::optional<ProbeResult> FixtureStore::lookup(std::string_view url) const {
    auto it = entries_.find(trim(url));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

ProbeResult probe(const std::string& url, const ProbeOptions& options) {
    std::string target = trim(url);
    split_url(target);  // scheme gate; throws UnsupportedSchemeError
    for (int attempt = 0;; ++attempt) {
        ProbeResult result = single_attempt(target, options.timeout_ms);
        bool transient = result.outcome == ProbeOutcome::timeout ||
                         result.outcome == ProbeOutcome::connection_error;
        if (!transient || attempt >= options.retries) return result;
    }
}

ProbeMap probe_all(const std::vector<std::string>& urls, const ProbeOptions& options) {
    std::vector<std::string> distinct;
    std::set<std::string> seen;
    for (const auto& url : urls) {
        std::string key = trim(url);
        if (!key.empty() && seen.insert(key).second) distinct.push_back(std::move(key));
    }

    ProbeMap results;
    if (distinct.empty()) return results;

    std::mutex results_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= distinct.size()) return;
            const std::string& url = distinct[index];
            ProbeResult result;
            try {
                result = probe(url, options);
            } catch (const UnsupportedSchemeError&) {
                result.url = url;
                result.outcome = ProbeOutcome::connection_error;
            }
            std::lock_guard<std::mutex> lock(results_mutex);
            results.insert_or_assign(url, std::move(result));
        }
    };

    std::size_t workers = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(options.max_in_flight, 1)), distinct.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
    return results;
}

FetchResult fetch_url(const std::string& url, int timeout_ms) {
    std::string current = trim(url);
    for (int hop = 0; hop <= kMaxRedirects; ++hop) {
        UrlParts parts = split_url(current);
        httplib::Client client(parts.origin);
        client.set_connection_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_read_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_write_timeout(std::chrono::milliseconds(timeout_ms));
        client.set_follow_location(false);

        auto res = client.Get(parts.path);
        if (!res) {
            throw IoError("GET " + current + " failed: " + httplib::to_string(res.error()));
        }
        if (is_redirect(res->status)) {
            std::string location = res->get_header_value("Location");
            if (location.empty() || hop == kMaxRedirects) {
                throw IoError("GET " + current + " failed: too many redirects");
            }
            current = rdf::resolve_iri(location, current);
            continue;
        }
        if (res->status < 200 || res->status > 299) {
            throw IoError("GET " + current + " failed: HTTP " + std::to_string(res->status));
        }
        return {res->body, res->get_header_value("Content-Type")};
    }
    throw IoError("GET " + url + " failed: too many redirects");
}

}  // namespace dcatq::net
