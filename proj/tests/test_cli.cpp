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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

const std::string kBinary = DCATQ_BINARY_PATH;
const std::string kDataDir = DCATQ_TEST_DATA_DIR;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

/// Run the CLI through the shell, capturing exit code and both streams.
CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out_path = dir / ("dcatq_cli_out_" + std::to_string(counter));
    auto err_path = dir / ("dcatq_cli_err_" + std::to_string(counter));
    ++counter;

    std::string command = env_prefix + kBinary + " " + args + " > " + out_path.string() +
                          " 2> " + err_path.string();
    int status = std::system(command.c_str());

    CliResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

std::string golden_assess_args(const std::string& extra = {}) {
    return "assess " + kDataDir + "/golden.ttl --offline " + kDataDir +
           "/golden_fixtures.json --config " + kDataDir + "/golden_config.json" + extra;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("offline assessment exits zero with a JSON report") {
    auto result = run_cli(golden_assess_args());
    REQUIRE(result.code == 0);
    CHECK(result.err.empty());

    auto parsed = json::parse(result.out);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["assessed_at"] == "2024-03-21T00:00:00Z");
    CHECK(parsed["dimensions"]["accuracy"]["value"] ==
          0.5 * (100.0 * 21.0 / 23.0) + (1.0 - 0.5) * (100.0 * 5.0 / 6.0));
    CHECK(parsed["dimensions"]["completeness"]["value"] == 100.0 * 17.0 / 19.0);
    CHECK(parsed["dimensions"]["consistency"]["value"] == 100.0 * 5.0 / 6.0);
    CHECK(parsed["dimensions"]["timeliness"]["verdict"] == false);
    CHECK(parsed["dimensions"]["licensing"]["value"] == 50.0);
    CHECK(parsed["entity_counts"]["dataset"] == 2);
}

TEST_CASE("repeated offline runs emit identical bytes") {
    // Scalability is wall-clock timed; hold it out of the byte comparison.
    std::string args = golden_assess_args(
        " --dimensions "
        "accuracy,completeness,consistency,timeliness,provenance,readability,licensing");
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.code == 0);
    REQUIRE(second.code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("markdown and text formats render the same report") {
    auto markdown = run_cli(golden_assess_args(" --format markdown"));
    REQUIRE(markdown.code == 0);
    CHECK(markdown.out.rfind("# Catalog quality report", 0) == 0);
    CHECK(markdown.out.find("| Licensing | 50.00% |") != std::string::npos);

    auto text = run_cli(golden_assess_args(" --format text"));
    REQUIRE(text.code == 0);
    CHECK(text.out.rfind("Catalog quality report", 0) == 0);
    CHECK(text.out.find("Licensing     50.00%") != std::string::npos);
}

TEST_CASE("dimension subsets trim the report") {
    auto result = run_cli(golden_assess_args(" --dimensions licensing"));
    REQUIRE(result.code == 0);
    auto parsed = json::parse(result.out);
    CHECK(parsed["dimensions"].size() == 1);
    CHECK(parsed["dimensions"].contains("licensing"));
}

TEST_CASE("compare renders both directions") {
    auto result = run_cli("compare " + kDataDir + "/compare_left.ttl " + kDataDir +
                          "/compare_right.ttl --config " + kDataDir + "/golden_config.json");
    REQUIRE(result.code == 0);
    auto parsed = json::parse(result.out);
    CHECK(parsed["compatibility"]["forward"] == 50.0);
    CHECK(parsed["compatibility"]["backward"] == 100.0);
    CHECK(parsed["pairing"].size() == 2);

    auto markdown = run_cli("compare " + kDataDir + "/compare_left.ttl " + kDataDir +
                            "/compare_right.ttl --format markdown");
    REQUIRE(markdown.code == 0);
    CHECK(markdown.out.find("| Similarity | 77.78% |") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("assess").code == 2);
    CHECK(run_cli("compare onlyone.ttl").code == 2);

    auto bad_format = run_cli(golden_assess_args(" --format yaml"));
    CHECK(bad_format.code == 2);
    CHECK(bad_format.err.find("usage error:") != std::string::npos);

    auto bad_dimension = run_cli(golden_assess_args(" --dimensions accuracy,sparkle"));
    CHECK(bad_dimension.code == 2);
    CHECK(bad_dimension.err.find("unknown dimension 'sparkle'") != std::string::npos);
}

TEST_CASE("environment and input errors exit with code two") {
    auto missing = run_cli("assess /no/such/file.ttl");
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());

    // A .json source has no recognizable RDF serialization.
    CHECK(run_cli("assess " + kDataDir + "/golden_config.json").code == 2);

    auto bad_config = write_temp("dcatq_bad_config.json", "{\"alpha\": 2}");
    CHECK(run_cli("assess " + kDataDir + "/golden.ttl --config " + bad_config.string()).code == 2);

    auto bad_env = run_cli(golden_assess_args(), "DCATQ_PROBE_TIMEOUT_MS=never ");
    CHECK(bad_env.code == 2);
    CHECK(bad_env.err.find("DCATQ_PROBE_TIMEOUT_MS") != std::string::npos);

    std::filesystem::remove(bad_config);
}

TEST_CASE("assessment failures exit with code one") {
    auto syntax = run_cli("assess " + kDataDir + "/bad_syntax.ttl");
    CHECK(syntax.code == 1);
    CHECK(syntax.out.empty());
    CHECK_FALSE(syntax.err.empty());

    CHECK(run_cli("assess " + kDataDir + "/empty.ttl").code == 1);

    // Offline probing with fixtures that lack the catalog's URLs.
    auto empty_fixtures = write_temp("dcatq_empty_fixtures.json", "{}");
    auto unprobed = run_cli("assess " + kDataDir + "/golden.ttl --offline " +
                            empty_fixtures.string());
    CHECK(unprobed.code == 1);
    std::filesystem::remove(empty_fixtures);
}

}  // TEST_SUITE
