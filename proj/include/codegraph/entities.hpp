#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace codegraph {

enum class EntityKind { Class, Interface, Enum, Record, Annotation };

const char* to_string(EntityKind kind);
std::optional<EntityKind> entity_kind_from_string(std::string_view s);

/// A project-local Java type declaration, keyed by simple name.
struct CodeEntity {
    std::string name;
    EntityKind kind = EntityKind::Class;
    std::string path; // repository-relative, '/'-separated

    bool operator==(const CodeEntity&) const = default;
};

enum class Relation { Injects, Extends, Implements };

const char* to_string(Relation relation);

/// extends > implements > injects when several signals hit the same pair.
int relation_precedence(Relation relation);

struct TypedEdge {
    std::string src;
    std::string dst;
    Relation relation = Relation::Injects;

    bool operator==(const TypedEdge&) const = default;
};

struct NeighborRef {
    std::string name;
    Relation relation;
};

/// Directed typed graph over project-local entities. Instances are built once
/// through Builder and stay immutable afterwards.
class OntologyGraph {
public:
    class Builder;

    /// Sorted by entity name; names are unique.
    const std::vector<CodeEntity>& entities() const { return entities_; }

    /// Sorted by (src, dst); at most one edge per ordered pair.
    const std::vector<TypedEdge>& edges() const { return edges_; }

    /// name -> repository-relative path of the declaring file.
    const std::map<std::string, std::string>& file_map() const { return file_map_; }

    bool has_node(const std::string& name) const { return by_name_.count(name) != 0; }
    const CodeEntity* find(const std::string& name) const;

    /// Outgoing neighbors, name ascending.
    const std::vector<NeighborRef>& successors(const std::string& name) const;

    /// Incoming neighbors, name ascending.
    const std::vector<NeighborRef>& predecessors(const std::string& name) const;

    std::optional<Relation> relation(const std::string& src, const std::string& dst) const;

    std::size_t node_count() const { return entities_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    double build_seconds() const { return build_seconds_; }

private:
    std::vector<CodeEntity> entities_;
    std::vector<TypedEdge> edges_;
    std::map<std::string, std::size_t> by_name_;
    std::map<std::string, std::string> file_map_;
    std::map<std::string, std::vector<NeighborRef>> successors_;
    std::map<std::string, std::vector<NeighborRef>> predecessors_;
    double build_seconds_ = 0.0;
};

class OntologyGraph::Builder {
public:
    /// First declaration of a name wins; returns false on a collision.
    bool add_entity(CodeEntity entity);

    /// Drops self-edges and edges with unknown endpoints; keeps the
    /// highest-precedence relation per (src, dst). Returns true if the edge
    /// set changed.
    bool add_edge(const std::string& src, const std::string& dst, Relation relation);

    bool has_entity(const std::string& name) const { return names_.count(name) != 0; }

    OntologyGraph build(double build_seconds = 0.0);

private:
    std::vector<CodeEntity> entities_;
    std::map<std::string, std::size_t> names_;
    std::map<std::pair<std::string, std::string>, Relation> edges_;
};

} // namespace codegraph
