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

#include <string>
#include <string_view>
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/config.hpp"
#include "dcatq/findings.hpp"

namespace dcatq::metrics {

/// Identity of a dataset across catalogs: its normalized identifier when
/// present, else its normalized title. Always non-empty.
struct DatasetKey {
    std::string key;

    bool operator==(const DatasetKey&) const = default;
    auto operator<=>(const DatasetKey&) const = default;
};

/// Throws KeyUnavailableError when the dataset has neither an identifier
/// nor a title with content.
DatasetKey dataset_key(const catalog::Entity& entity);

/// 100 * |K1 ∩ K2| / |K1| over dataset key sets; asymmetric. Throws
/// EmptyCatalogError when c1 has no keyable dataset.
double compatibility(const catalog::CatalogModel& c1, const catalog::CatalogModel& c2);

/// Token-set similarity in [0,1]: Jaccard over lowercase word tokens or
/// TF-vector cosine over the same tokens. Two empty texts compare as 1.0;
/// empty versus non-empty as 0.0.
double value_similarity(std::string_view a, std::string_view b, SimilarityMeasure measure);

struct PairedDatasets {
    std::string left;   // dataset id in c1
    std::string right;  // dataset id in c2
    double score = 0.0;
};

/// Greedy best-first matching over title+description texts. Deterministic:
/// ties break by (c1 entity order, c2 entity order).
struct Pairing {
    std::vector<PairedDatasets> pairs;

    std::size_t k() const { return pairs.size(); }
};

/// Throws EmptyCatalogError when either catalog has no datasets.
Pairing pair_objects(const catalog::CatalogModel& c1, const catalog::CatalogModel& c2,
                     SimilarityMeasure measure, double floor = 0.0);

/// 100 * mean pair score over the greedy pairing. Throws EmptyCatalogError
/// when the pairing is empty.
double attribute_similarity(const catalog::CatalogModel& c1, const catalog::CatalogModel& c2,
                            SimilarityMeasure measure, double floor = 0.0);

/// Advisory-only comparisons (license overlap, temporal coverage overlap);
/// never part of the compatibility score.
std::vector<Finding> comparison_advisories(const catalog::CatalogModel& c1,
                                           const catalog::CatalogModel& c2);

}  // namespace dcatq::metrics
