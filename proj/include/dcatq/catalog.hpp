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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcatq/rdf.hpp"
#include "dcatq/vocab.hpp"

namespace dcatq::catalog {

enum class EntityKind { catalog, dataset, distribution };

std::string_view to_string(EntityKind kind);

/// One (entity, canonical property, value) statement; corresponds to exactly
/// one source triple.
struct AttributeOccurrence {
    std::string owner;  // entity id (IRI or "_:bN")
    vocab::CanonicalProperty property;
    rdf::RdfTerm value;
};

/// One declared entity-to-entity link. The target is always a node id,
/// never a literal; it may be dangling (absent from the model's entities).
struct RelationshipInstance {
    std::string source;
    vocab::CanonicalProperty predicate;
    std::string target;
};

struct Entity {
    std::string id;
    EntityKind kind = EntityKind::dataset;
    std::vector<AttributeOccurrence> attributes;

    /// First attribute value for `name`, if any.
    const rdf::RdfTerm* value_of(vocab::Name name) const;
};

/// Immutable, deterministically ordered view of one catalog document.
///
/// Entities sort by (kind, id) with catalog < dataset < distribution;
/// attributes sort by (property, value) within each entity; relationships
/// sort by (source, predicate, target). The ordering is part of the public
/// contract: findings and duplicate detection refer to it.
class CatalogModel {
public:
    /// Validates and canonicalizes the parts. Throws EmptyCatalogError when
    /// no catalog and no dataset entity is present, std::invalid_argument
    /// when ids collide or an attribute owner / relationship source is not
    /// an entity of the model.
    CatalogModel(std::string catalog_node, std::vector<Entity> entities,
                 std::vector<RelationshipInstance> relationships, std::size_t triple_count);

    const std::string& catalog_node() const { return catalog_node_; }
    const std::vector<Entity>& entities() const { return entities_; }
    const std::vector<RelationshipInstance>& relationships() const { return relationships_; }
    std::size_t triple_count() const { return triple_count_; }

    /// Entity lookup by id; nullptr when absent.
    const Entity* find(std::string_view id) const;

    /// Total attribute occurrences across all entities (symbol m).
    std::size_t attribute_count() const;

    std::size_t count_of(EntityKind kind) const;

    /// Bitmask (1 << int(vocab::Name)) of attribute names carrying a
    /// non-blank value on entities()[index]; lets bulk scans stay on a few
    /// bytes per entity instead of walking every value string.
    std::uint32_t nonblank_attribute_names(std::size_t index) const {
        return nonblank_attribute_names_[index];
    }

    /// Bitmask of relationship predicate names leaving entities()[index].
    std::uint32_t outgoing_relationship_names(std::size_t index) const {
        return outgoing_relationship_names_[index];
    }

private:
    std::string catalog_node_;
    std::vector<Entity> entities_;
    std::vector<RelationshipInstance> relationships_;
    std::vector<std::uint32_t> nonblank_attribute_names_;
    std::vector<std::uint32_t> outgoing_relationship_names_;
    std::size_t triple_count_ = 0;
};

/// Materialize a CatalogModel from parsed triples.
///
/// Entities are the subjects typed dcat:Catalog / dcat:Dataset /
/// dcat:Distribution, plus untyped subjects classified by structural
/// position (object of dcat:dataset or dcat:distribution). A node with no
/// outgoing triples is not an entity, which is what makes dangling
/// references observable. rdf:type triples are neither attributes nor
/// relationships.
CatalogModel build_catalog(const rdf::TripleSet& triples,
                           const vocab::PredicateMap& predicates = vocab::PredicateMap::builtin());

/// Read `source` (file path or http(s) URL), detect the serialization from
/// the format hint, file extension, or content type, and compose
/// parse_rdf + build_catalog.
CatalogModel load_catalog(const std::string& source,
                          std::optional<rdf::RdfFormat> format_hint = {},
                          const vocab::PredicateMap& predicates = vocab::PredicateMap::builtin());

std::optional<EntityKind> kind_from_string(std::string_view text);

}  // namespace dcatq::catalog
