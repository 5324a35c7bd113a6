#pragma once

#include <string>

namespace codegraph::prompts {

/// Answer template for the plain retrieval pipeline.
extern const char* const kAnswerNoGraph;

/// Answer template for the graph-aware pipeline (ontology notes in context).
extern const char* const kAnswerDkb;

/// Extraction template producing {"results":[...]} records for the audit.
extern const char* const kExtractionRecords;

/// Answer template for pipelines backed by extracted dependency records.
extern const char* const kAnswerLlmkb;

/// Replaces each {context} / {question} placeholder in one pass, so
/// placeholder-like text inside the substituted values stays untouched.
std::string render_answer(const char* tmpl, const std::string& context, const std::string& question);

} // namespace codegraph::prompts
