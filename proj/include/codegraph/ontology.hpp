#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "codegraph/entities.hpp"

namespace codegraph {

struct ScanResult {
    std::string root;
    std::vector<std::string> files; // repository-relative, '/'-separated, sorted
    std::vector<std::string> warnings;
};

/// Walks `root` for regular *.java files, skipping unreadable entries with a
/// warning. Throws FatalError when root is missing, unreadable, or not a
/// directory.
ScanResult scan_repository(const std::string& root);

/// One CodeEntity per class / interface / enum / record / annotation
/// declaration in `source`, in declaration (pre-)order, nested declarations
/// included. An unparseable file yields an empty list plus a warning.
std::vector<CodeEntity> discover_types(const std::string& path, std::string_view source,
                                       std::vector<std::string>* warnings = nullptr);

/// Typed edges leaving `entity`, attributed to its declaration in `source`:
/// supertypes become extends/implements, field and constructor-parameter base
/// types become injects. Targets outside `file_map` and self-references are
/// dropped; duplicates collapse to the highest-precedence relation. Sorted by
/// destination name.
std::vector<TypedEdge> extract_edges(const CodeEntity& entity, std::string_view source,
                                     const std::map<std::string, std::string>& file_map);

struct GraphBuild {
    OntologyGraph graph;
    std::vector<std::string> warnings;
    std::vector<std::string> files; // the scan result backing the graph
};

/// Two-pass build: discover every type, then extract edges against the
/// complete name map. Name collisions keep the first occurrence in scan order
/// and warn. build_seconds covers both passes.
GraphBuild build_graph(const std::string& root);

} // namespace codegraph
