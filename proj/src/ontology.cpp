#include "codegraph/ontology.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>

#include "codegraph/errors.hpp"
#include "codegraph/java_source.hpp"
#include "codegraph/text.hpp"

namespace fs = std::filesystem;

namespace codegraph {

// ---------------------------------------------------------------------------
// enum names

const char* to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Class: return "class";
        case EntityKind::Interface: return "interface";
        case EntityKind::Enum: return "enum";
        case EntityKind::Record: return "record";
        case EntityKind::Annotation: return "annotation";
    }
    return "class";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view s) {
    if (s == "class") return EntityKind::Class;
    if (s == "interface") return EntityKind::Interface;
    if (s == "enum") return EntityKind::Enum;
    if (s == "record") return EntityKind::Record;
    if (s == "annotation") return EntityKind::Annotation;
    return std::nullopt;
}

const char* to_string(Relation relation) {
    switch (relation) {
        case Relation::Injects: return "injects";
        case Relation::Extends: return "extends";
        case Relation::Implements: return "implements";
    }
    return "injects";
}

int relation_precedence(Relation relation) {
    switch (relation) {
        case Relation::Injects: return 1;
        case Relation::Implements: return 2;
        case Relation::Extends: return 3;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// OntologyGraph

const CodeEntity* OntologyGraph::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &entities_[it->second];
}

static const std::vector<NeighborRef>& empty_neighbors() {
    static const std::vector<NeighborRef> none;
    return none;
}

const std::vector<NeighborRef>& OntologyGraph::successors(const std::string& name) const {
    auto it = successors_.find(name);
    return it == successors_.end() ? empty_neighbors() : it->second;
}

const std::vector<NeighborRef>& OntologyGraph::predecessors(const std::string& name) const {
    auto it = predecessors_.find(name);
    return it == predecessors_.end() ? empty_neighbors() : it->second;
}

std::optional<Relation> OntologyGraph::relation(const std::string& src, const std::string& dst) const {
    for (const auto& edge : successors(src)) {
        if (edge.name == dst) return edge.relation;
    }
    return std::nullopt;
}

bool OntologyGraph::Builder::add_entity(CodeEntity entity) {
    if (names_.count(entity.name)) return false;
    names_.emplace(entity.name, entities_.size());
    entities_.push_back(std::move(entity));
    return true;
}

bool OntologyGraph::Builder::add_edge(const std::string& src, const std::string& dst, Relation relation) {
    if (src == dst) return false;
    if (!names_.count(src) || !names_.count(dst)) return false;
    auto key = std::make_pair(src, dst);
    auto it = edges_.find(key);
    if (it == edges_.end()) {
        edges_.emplace(std::move(key), relation);
        return true;
    }
    if (relation_precedence(relation) > relation_precedence(it->second)) {
        it->second = relation;
        return true;
    }
    return false;
}

OntologyGraph OntologyGraph::Builder::build(double build_seconds) {
    OntologyGraph g;
    g.entities_ = entities_;
    std::sort(g.entities_.begin(), g.entities_.end(),
              [](const CodeEntity& a, const CodeEntity& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < g.entities_.size(); ++i) {
        g.by_name_.emplace(g.entities_[i].name, i);
        g.file_map_.emplace(g.entities_[i].name, g.entities_[i].path);
    }
    for (const auto& [pair, relation] : edges_) {
        g.edges_.push_back(TypedEdge{pair.first, pair.second, relation});
        g.successors_[pair.first].push_back(NeighborRef{pair.second, relation});
        g.predecessors_[pair.second].push_back(NeighborRef{pair.first, relation});
    }
    auto by_name = [](const NeighborRef& a, const NeighborRef& b) { return a.name < b.name; };
    for (auto& [_, refs] : g.successors_) std::sort(refs.begin(), refs.end(), by_name);
    for (auto& [_, refs] : g.predecessors_) std::sort(refs.begin(), refs.end(), by_name);
    g.build_seconds_ = build_seconds;
    return g;
}

// ---------------------------------------------------------------------------
// repository scan

ScanResult scan_repository(const std::string& root) {
    std::error_code ec;
    fs::path root_path(root);
    if (!fs::exists(root_path, ec) || ec) throw FatalError("repository root does not exist: " + root);
    if (!fs::is_directory(root_path, ec) || ec) throw FatalError("repository root is not a directory: " + root);

    ScanResult result;
    result.root = root;
    fs::recursive_directory_iterator it(root_path, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw FatalError("repository root is not readable: " + root);
    for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) {
            result.warnings.push_back("scan: traversal error under " + root + ": " + ec.message());
            break;
        }
        std::error_code file_ec;
        if (!it->is_regular_file(file_ec) || file_ec) continue;
        const fs::path& p = it->path();
        if (p.extension() != ".java") continue;
        std::string rel = fs::relative(p, root_path, file_ec).generic_string();
        if (file_ec) continue;
        std::ifstream probe(p, std::ios::binary);
        if (!probe) {
            result.warnings.push_back("scan: unreadable file skipped: " + rel);
            continue;
        }
        result.files.push_back(std::move(rel));
    }
    std::sort(result.files.begin(), result.files.end());
    return result;
}

// ---------------------------------------------------------------------------
// type discovery and edge extraction

static EntityKind to_entity_kind(java::DeclKind kind) {
    switch (kind) {
        case java::DeclKind::Class: return EntityKind::Class;
        case java::DeclKind::Interface: return EntityKind::Interface;
        case java::DeclKind::Enum: return EntityKind::Enum;
        case java::DeclKind::Record: return EntityKind::Record;
        case java::DeclKind::Annotation: return EntityKind::Annotation;
    }
    return EntityKind::Class;
}

static void collect_entities(const java::TypeDecl& decl, const std::string& path,
                             std::vector<CodeEntity>& out) {
    out.push_back(CodeEntity{decl.name, to_entity_kind(decl.kind), path});
    for (const auto& nested : decl.nested) collect_entities(nested, path, out);
}

std::vector<CodeEntity> discover_types(const std::string& path, std::string_view source,
                                       std::vector<std::string>* warnings) {
    java::ParseResult parsed = java::parse_types(source);
    if (parsed.failed && warnings) warnings->push_back("parse: no declarations recovered from " + path);
    std::vector<CodeEntity> entities;
    for (const auto& decl : parsed.decls) collect_entities(decl, path, entities);
    return entities;
}

static const java::TypeDecl* find_decl(const std::vector<java::TypeDecl>& decls, const std::string& name) {
    for (const auto& decl : decls) {
        if (decl.name == name) return &decl;
        if (const java::TypeDecl* inner = find_decl(decl.nested, name)) return inner;
    }
    return nullptr;
}

static std::vector<TypedEdge> edges_for_decl(const java::TypeDecl& decl, const std::string& src,
                                             const std::map<std::string, std::string>& file_map) {
    std::map<std::string, Relation> best;
    auto offer = [&](const std::string& dst, Relation relation) {
        if (dst == src || !file_map.count(dst)) return;
        auto it = best.find(dst);
        if (it == best.end()) {
            best.emplace(dst, relation);
        } else if (relation_precedence(relation) > relation_precedence(it->second)) {
            it->second = relation;
        }
    };
    for (const auto& t : decl.extends_types) offer(t, Relation::Extends);
    for (const auto& t : decl.implements_types) offer(t, Relation::Implements);
    for (const auto& t : decl.field_types) offer(t, Relation::Injects);
    for (const auto& t : decl.ctor_param_types) offer(t, Relation::Injects);

    std::vector<TypedEdge> edges;
    edges.reserve(best.size());
    for (const auto& [dst, relation] : best) edges.push_back(TypedEdge{src, dst, relation});
    return edges;
}

std::vector<TypedEdge> extract_edges(const CodeEntity& entity, std::string_view source,
                                     const std::map<std::string, std::string>& file_map) {
    java::ParseResult parsed = java::parse_types(source);
    const java::TypeDecl* decl = find_decl(parsed.decls, entity.name);
    if (!decl) return {};
    return edges_for_decl(*decl, entity.name, file_map);
}

// ---------------------------------------------------------------------------
// two-pass build

GraphBuild build_graph(const std::string& root) {
    ScanResult scan = scan_repository(root);
    GraphBuild result;
    result.files = scan.files;
    result.warnings = scan.warnings;

    auto t0 = std::chrono::steady_clock::now();

    struct FileDecls {
        std::string path;
        java::ParseResult parsed;
    };
    std::vector<FileDecls> per_file;
    per_file.reserve(scan.files.size());

    // pass 1: discover every declaration, first occurrence of a name wins
    OntologyGraph::Builder builder;
    std::map<std::string, std::string> file_map;
    for (const std::string& rel : scan.files) {
        std::string source;
        if (!try_read_file((fs::path(root) / rel).string(), source)) {
            result.warnings.push_back("read: unreadable file skipped: " + rel);
            continue;
        }
        java::ParseResult parsed = java::parse_types(source);
        if (parsed.failed) result.warnings.push_back("parse: no declarations recovered from " + rel);
        std::vector<CodeEntity> entities;
        for (const auto& decl : parsed.decls) collect_entities(decl, rel, entities);
        for (auto& entity : entities) {
            if (builder.add_entity(entity)) {
                file_map.emplace(entity.name, rel);
            } else {
                result.warnings.push_back("collision: type " + entity.name + " in " + rel +
                                          " already declared in " + file_map[entity.name] +
                                          "; keeping first occurrence");
            }
        }
        per_file.push_back(FileDecls{rel, std::move(parsed)});
    }

    // pass 2: extract edges against the complete file map; a name's edges come
    // from its surviving (first) declaration only
    struct Walker {
        OntologyGraph::Builder& builder;
        const std::map<std::string, std::string>& file_map;
        std::set<std::string> done;

        void walk(const java::TypeDecl& decl) {
            if (done.insert(decl.name).second) {
                for (const auto& edge : edges_for_decl(decl, decl.name, file_map)) {
                    builder.add_edge(edge.src, edge.dst, edge.relation);
                }
            }
            for (const auto& nested : decl.nested) walk(nested);
        }
    };
    Walker walker{builder, file_map, {}};
    for (const auto& file : per_file) {
        for (const auto& decl : file.parsed.decls) walker.walk(decl);
    }

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    result.graph = builder.build(elapsed.count());
    return result;
}

} // namespace codegraph
