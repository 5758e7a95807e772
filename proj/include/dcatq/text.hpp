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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcatq::text {

/// Lowercase word tokens: UTF-8 aware folding over ASCII and Latin-1 /
/// Latin Extended-A letters, split on non-alphanumeric runs.
std::vector<std::string> tokenize(std::string_view input);

/// Lowercase, trim, collapse internal whitespace runs to single spaces.
/// The label normalization used by duplicate detection and dataset keys.
std::string normalize_label(std::string_view input);

/// Stopword-frequency language guess over {en, de, fr, es, it} with a
/// minimum-margin confidence gate. Returns nullopt when the text is too
/// short or the margin is too thin to call.
std::optional<std::string> detect_language(std::string_view input);

}  // namespace dcatq::text
