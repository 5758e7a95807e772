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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcatq/assess.hpp"
#include "dcatq/errors.hpp"
#include "dcatq/report.hpp"

namespace {

/// Split a comma-separated dimension list; nullopt on any unknown id.
std::optional<std::vector<dcatq::report::Dimension>> parse_dimensions(const std::string& list,
                                                                      std::string& bad) {
    std::vector<dcatq::report::Dimension> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string item = list.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!item.empty() && item.front() == ' ') {
            item.erase(item.begin());
        }
        while (!item.empty() && item.back() == ' ') {
            item.pop_back();
        }
        if (!item.empty()) {
            auto dimension = dcatq::report::dimension_from_string(item);
            if (!dimension) {
                bad = item;
                return std::nullopt;
            }
            out.push_back(*dimension);
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Open data catalog quality assessment"};
    app.require_subcommand(1);

    std::string source1;
    std::string source2;
    std::string config_path;
    std::string offline_path;
    std::string format_name = "json";
    std::string dimensions_arg;

    CLI::App* assess_cmd = app.add_subcommand("assess", "Assess one catalog");
    assess_cmd->add_option("source", source1, "Catalog file or http(s) URL")->required();
    CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two catalogs");
    compare_cmd->add_option("source1", source1, "First catalog file or URL")->required();
    compare_cmd->add_option("source2", source2, "Second catalog file or URL")->required();
    for (CLI::App* cmd : {assess_cmd, compare_cmd}) {
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--offline", offline_path,
                        "Probe fixture JSON file; disables live probing");
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"json", "markdown", "text"}));
        cmd->add_option("--dimensions", dimensions_arg,
                        "Comma-separated dimension subset (assess only)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& error) {
        return app.exit(error);
    } catch (const CLI::CallForAllHelp& error) {
        return app.exit(error);
    } catch (const CLI::ParseError& error) {
        std::cerr << "usage error: " << error.what() << "\n";
        return 2;
    }

    try {
        dcatq::assess::AssessOptions options;
        options.config = dcatq::load_config(
            config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
        if (!offline_path.empty()) {
            options.probe_mode = dcatq::assess::ProbeMode::offline;
            options.fixtures = dcatq::net::FixtureStore::load(offline_path);
        }
        if (!dimensions_arg.empty()) {
            std::string bad;
            auto dimensions = parse_dimensions(dimensions_arg, bad);
            if (!dimensions) {
                std::cerr << "usage error: unknown dimension '" << bad << "'\n";
                return 2;
            }
            options.dimensions = std::move(*dimensions);
        }
        auto format = dcatq::report::format_from_string(format_name);

        if (app.got_subcommand(assess_cmd)) {
            auto result = dcatq::assess::assess_source(source1, options);
            std::cout << dcatq::report::render_report(result, *format);
        } else {
            auto result = dcatq::assess::compare_sources(source1, source2, options);
            std::cout << dcatq::report::render_report(result, *format);
        }
        return 0;
    } catch (const dcatq::ConfigSchemaError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const dcatq::FixtureSchemaError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const dcatq::FormatUndetectableError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const dcatq::IoError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const dcatq::Error& error) {
        std::cerr << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
