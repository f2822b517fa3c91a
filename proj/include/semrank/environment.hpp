#ifndef SEMRANK_ENVIRONMENT_HPP
#define SEMRANK_ENVIRONMENT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "semrank/graph_model.hpp"

namespace semrank {

// A complete controlled environment: knowledge base, annotated pages and
// (optionally) the user's query.
struct Environment {
    OntologyGraph ontology;
    std::vector<PageSubgraph> pages;  // sorted by page id
    std::optional<Query> query;
};

// Parses the canonical JSON document (see README for the schema).
// Throws ParseError on malformed input, ValidationError on the first
// violated model invariant.
Environment parse_environment(const std::string& text);

Environment load_environment(const std::filesystem::path& path);

// Canonical serialization: concepts by index, relations by id, pages by id;
// two-space indentation, trailing newline. Loading then re-serializing a
// canonical document is byte-identical.
std::string serialize_environment(const Environment& env);

void save_environment(const Environment& env, const std::filesystem::path& path);

}  // namespace semrank

#endif
