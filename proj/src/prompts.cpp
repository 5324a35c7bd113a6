#include "codegraph/prompts.hpp"

namespace codegraph::prompts {

const char* const kAnswerNoGraph =
    "You are a Senior Java Engineer. Answer based on the code provided.\n"
    "\n"
    "Context:\n"
    "{context}\n"
    "\n"
    "Question: {question}\n";

const char* const kAnswerDkb =
    "You are a Senior Java Engineer. Answer based on the code provided.\n"
    "Use the [ONTOLOGY INFO] to understand the architecture.\n"
    "\n"
    "Context:\n"
    "{context}\n"
    "\n"
    "Question: {question}\n";

const char* const kExtractionRecords =
    "You are a static code analyzer. Analyze the provided batch of Java files.\n"
    "For EACH file, identify the Class Name and any Custom Dependencies (other classes in the "
    "project that are used).\n"
    "Ignore standard libraries (java.*, spring framework, etc.).\n"
    "\n"
    "Return a JSON object with a single key \"results\" containing a list of objects, one for "
    "each file.\n"
    "\n"
    "Schema:\n"
    "{\n"
    "  \"results\": [\n"
    "    {\n"
    "      \"file_path\": \"path/to/File.java\",\n"
    "      \"class_name\": \"NameOfClass\",\n"
    "      \"dependencies\": [\"OtherClass1\", \"OtherClass2\"]\n"
    "    }\n"
    "  ]\n"
    "}\n"
    "\n"
    "Input Files:\n"
    "{batch_content}\n";

const char* const kAnswerLlmkb =
    "You are a Senior Java Architect. Answer the question based on the provided Code Context.\n"
    "The context includes the main classes found via vector search, AND their dependencies from "
    "the Gemini-generated Knowledge Graph.\n"
    "\n"
    "Context:\n"
    "{context}\n"
    "\n"
    "Question: {question}\n";

std::string render_answer(const char* tmpl, const std::string& context, const std::string& question) {
    const std::string text(tmpl);
    std::string out;
    out.reserve(text.size() + context.size() + question.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text.compare(i, 9, "{context}") == 0) {
            out += context;
            i += 9;
        } else if (text.compare(i, 10, "{question}") == 0) {
            out += question;
            i += 10;
        } else {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

} // namespace codegraph::prompts
