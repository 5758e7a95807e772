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

#include "dcatq/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dcatq/errors.hpp"
#include "dcatq/net.hpp"

namespace dcatq::catalog {
namespace {

using rdf::RdfTerm;
using rdf::TripleSet;
using vocab::Name;

static_assert(static_cast<int>(Name::other) < 32, "vocab::Name must fit a 32-bit mask");

int kind_rank(EntityKind kind) {
    switch (kind) {
        case EntityKind::catalog: return 0;
        case EntityKind::dataset: return 1;
        case EntityKind::distribution: return 2;
    }
    return 3;
}

bool blank_value(std::string_view lexical) {
    return lexical.find_first_not_of(" \t\n\r\f\v") == std::string_view::npos;
}

auto property_key(const vocab::CanonicalProperty& p) {
    return std::make_pair(vocab::to_string(p.name), std::string_view(p.raw_predicate));
}

std::string node_id(const RdfTerm& term) { return term.lexical; }

}  // namespace

std::string_view to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::catalog: return "catalog";
        case EntityKind::dataset: return "dataset";
        case EntityKind::distribution: return "distribution";
    }
    return "unknown";
}

std::optional<EntityKind> kind_from_string(std::string_view text) {
    if (text == "catalog") return EntityKind::catalog;
    if (text == "dataset") return EntityKind::dataset;
    if (text == "distribution") return EntityKind::distribution;
    return std::nullopt;
}

const rdf::RdfTerm* Entity::value_of(vocab::Name name) const {
    for (const auto& attr : attributes) {
        if (attr.property.name == name) return &attr.value;
    }
    return nullptr;
}

CatalogModel::CatalogModel(std::string catalog_node, std::vector<Entity> entities,
                           std::vector<RelationshipInstance> relationships,
                           std::size_t triple_count)
    : catalog_node_(std::move(catalog_node)),
      entities_(std::move(entities)),
      relationships_(std::move(relationships)),
      triple_count_(triple_count) {
    std::sort(entities_.begin(), entities_.end(), [](const Entity& a, const Entity& b) {
        return std::make_pair(kind_rank(a.kind), std::string_view(a.id)) <
               std::make_pair(kind_rank(b.kind), std::string_view(b.id));
    });

    std::set<std::string_view> ids;
    bool has_catalog_or_dataset = false;
    for (auto& entity : entities_) {
        if (!ids.insert(entity.id).second) {
            throw std::invalid_argument("duplicate entity id: " + entity.id);
        }
        if (entity.kind != EntityKind::distribution) has_catalog_or_dataset = true;
        for (const auto& attr : entity.attributes) {
            if (attr.owner != entity.id) {
                throw std::invalid_argument("attribute owner mismatch for entity " + entity.id);
            }
        }
        std::sort(entity.attributes.begin(), entity.attributes.end(),
                  [](const AttributeOccurrence& a, const AttributeOccurrence& b) {
                      return std::make_pair(property_key(a.property), std::cref(a.value)) <
                             std::make_pair(property_key(b.property), std::cref(b.value));
                  });
    }
    if (!has_catalog_or_dataset) {
        throw EmptyCatalogError("no catalog or dataset entities found");
    }

    for (const auto& rel : relationships_) {
        if (ids.count(rel.source) == 0) {
            throw std::invalid_argument("relationship source is not an entity: " + rel.source);
        }
    }
    std::sort(relationships_.begin(), relationships_.end(),
              [](const RelationshipInstance& a, const RelationshipInstance& b) {
                  return std::make_tuple(std::string_view(a.source), property_key(a.predicate),
                                         std::string_view(a.target)) <
                         std::make_tuple(std::string_view(b.source), property_key(b.predicate),
                                         std::string_view(b.target));
              });

    if (!catalog_node_.empty() && ids.count(catalog_node_) == 0) {
        throw std::invalid_argument("catalog node is not an entity: " + catalog_node_);
    }

    nonblank_attribute_names_.assign(entities_.size(), 0);
    outgoing_relationship_names_.assign(entities_.size(), 0);
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        for (const auto& attr : entities_[i].attributes) {
            if (!blank_value(attr.value.lexical)) {
                nonblank_attribute_names_[i] |= std::uint32_t{1}
                                                << static_cast<int>(attr.property.name);
            }
        }
    }
    // Entities of one kind and relationships are both sorted by source id, so
    // a single forward pass per kind pairs every relationship with its slot.
    for (EntityKind kind :
         {EntityKind::catalog, EntityKind::dataset, EntityKind::distribution}) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < entities_.size(); ++i) {
            if (entities_[i].kind != kind) continue;
            std::string_view id = entities_[i].id;
            while (r < relationships_.size() && std::string_view(relationships_[r].source) < id) {
                ++r;
            }
            for (std::size_t j = r; j < relationships_.size() && relationships_[j].source == id;
                 ++j) {
                outgoing_relationship_names_[i] |=
                    std::uint32_t{1} << static_cast<int>(relationships_[j].predicate.name);
            }
        }
    }
}

const Entity* CatalogModel::find(std::string_view id) const {
    for (const auto& entity : entities_) {
        if (entity.id == id) return &entity;
    }
    return nullptr;
}

std::size_t CatalogModel::attribute_count() const {
    std::size_t total = 0;
    for (const auto& entity : entities_) total += entity.attributes.size();
    return total;
}

std::size_t CatalogModel::count_of(EntityKind kind) const {
    std::size_t total = 0;
    for (const auto& entity : entities_) {
        if (entity.kind == kind) ++total;
    }
    return total;
}

CatalogModel build_catalog(const rdf::TripleSet& triples, const vocab::PredicateMap& predicates) {
    const std::string dcat_catalog = std::string(rdf::kDcatNs) + "Catalog";
    const std::string dcat_dataset_class = std::string(rdf::kDcatNs) + "Dataset";
    const std::string dcat_distribution_class = std::string(rdf::kDcatNs) + "Distribution";
    const std::string dcat_dataset_link = std::string(rdf::kDcatNs) + "dataset";

    std::set<std::string> subjects;
    for (const auto& t : triples) subjects.insert(node_id(t.subject));

    // Typed classification first; the strongest kind wins when a node
    // carries several DCAT types.
    std::map<std::string, EntityKind> kinds;
    auto classify = [&kinds](const std::string& id, EntityKind kind) {
        auto [it, inserted] = kinds.emplace(id, kind);
        if (!inserted && kind_rank(kind) < kind_rank(it->second)) it->second = kind;
    };
    for (const auto& t : triples) {
        if (t.predicate != rdf::kRdfType || !t.object.is_iri()) continue;
        if (t.object.lexical == dcat_catalog) classify(node_id(t.subject), EntityKind::catalog);
        else if (t.object.lexical == dcat_dataset_class) classify(node_id(t.subject), EntityKind::dataset);
        else if (t.object.lexical == dcat_distribution_class) classify(node_id(t.subject), EntityKind::distribution);
    }

    // Structural fallback for untyped nodes that carry triples of their own.
    for (const auto& t : triples) {
        if (t.predicate != dcat_dataset_link || !t.object.is_node()) continue;
        std::string target = node_id(t.object);
        if (subjects.count(target) != 0 && kinds.count(target) == 0) {
            kinds.emplace(target, EntityKind::dataset);
        }
    }
    for (const auto& t : triples) {
        if (!t.object.is_node()) continue;
        if (predicates.normalize(t.predicate).name != Name::distribution) continue;
        std::string target = node_id(t.object);
        if (subjects.count(target) != 0 && kinds.count(target) == 0) {
            kinds.emplace(target, EntityKind::distribution);
        }
    }

    std::map<std::string, std::vector<AttributeOccurrence>> attributes;
    std::vector<RelationshipInstance> relationships;
    for (const auto& t : triples) {
        std::string subject = node_id(t.subject);
        auto kind_it = kinds.find(subject);
        if (kind_it == kinds.end()) continue;
        if (t.predicate == rdf::kRdfType) continue;

        vocab::CanonicalProperty prop = predicates.normalize(t.predicate);
        if (t.object.is_node()) {
            std::string target = node_id(t.object);
            bool is_relationship = prop.name == Name::distribution ||
                                   t.predicate == dcat_dataset_link ||
                                   (prop.name == Name::other && kinds.count(target) != 0);
            if (is_relationship) {
                relationships.push_back({subject, std::move(prop), std::move(target)});
                continue;
            }
        }
        attributes[subject].push_back({subject, std::move(prop), t.object});
    }

    std::vector<Entity> entities;
    entities.reserve(kinds.size());
    std::string catalog_node;
    for (auto& [id, kind] : kinds) {
        if (kind == EntityKind::catalog && (catalog_node.empty() || id < catalog_node)) {
            catalog_node = id;
        }
        Entity entity;
        entity.id = id;
        entity.kind = kind;
        auto attr_it = attributes.find(id);
        if (attr_it != attributes.end()) entity.attributes = std::move(attr_it->second);
        entities.push_back(std::move(entity));
    }

    return CatalogModel(std::move(catalog_node), std::move(entities), std::move(relationships),
                        triples.size());
}

namespace {

std::optional<rdf::RdfFormat> format_from_extension(std::string_view path) {
    auto query = path.find_first_of("?#");
    if (query != std::string_view::npos) path = path.substr(0, query);
    auto slash = path.find_last_of('/');
    std::string_view name = slash == std::string_view::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot == std::string_view::npos) return std::nullopt;
    std::string ext(name.substr(dot + 1));
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == "ttl" || ext == "turtle") return rdf::RdfFormat::turtle;
    if (ext == "rdf" || ext == "xml") return rdf::RdfFormat::rdf_xml;
    return std::nullopt;
}

std::optional<rdf::RdfFormat> format_from_content_type(std::string_view content_type) {
    auto semi = content_type.find(';');
    std::string media(content_type.substr(0, semi));
    for (auto& c : media) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    while (!media.empty() && media.back() == ' ') media.pop_back();
    while (!media.empty() && media.front() == ' ') media.erase(media.begin());
    if (media == "text/turtle") return rdf::RdfFormat::turtle;
    if (media == "application/rdf+xml" || media == "application/xml" || media == "text/xml") {
        return rdf::RdfFormat::rdf_xml;
    }
    return std::nullopt;
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

CatalogModel load_catalog(const std::string& source, std::optional<rdf::RdfFormat> format_hint,
                          const vocab::PredicateMap& predicates) {
    std::string content;
    std::optional<rdf::RdfFormat> detected = format_hint;
    if (source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0) {
        net::FetchResult fetched = net::fetch_url(source);
        content = std::move(fetched.body);
        if (!detected) detected = format_from_content_type(fetched.content_type);
        if (!detected) detected = format_from_extension(source);
    } else {
        content = read_file(source);
        if (!detected) detected = format_from_extension(source);
    }
    if (!detected) throw FormatUndetectableError(source);
    return build_catalog(rdf::parse_rdf(content, *detected, source), predicates);
}

}  // namespace dcatq::catalog
