#include "semrank/environment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semrank {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing key \"") + key + "\" in " + where);
    return *it;
}

int require_int(const json& v, const char* where) {
    if (!v.is_number_integer())
        throw ParseError(std::string("expected integer for ") + where);
    return v.get<int>();
}

std::string require_string(const json& v, const char* where) {
    if (!v.is_string())
        throw ParseError(std::string("expected string for ") + where);
    return v.get<std::string>();
}

}  // namespace

Environment parse_environment(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed environment document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("environment document is not an object");

    const json& onto = require(doc, "ontology", "document");
    const json& jconcepts = require(onto, "concepts", "ontology");
    const json& jrelations = require(onto, "relations", "ontology");
    if (!jconcepts.is_array() || !jrelations.is_array())
        throw ParseError("ontology concepts/relations must be arrays");

    std::vector<std::string> labels;
    labels.reserve(jconcepts.size());
    for (const json& c : jconcepts) labels.push_back(require_string(c, "concept label"));

    std::vector<RelationEdge> relations;
    relations.reserve(jrelations.size());
    for (const json& r : jrelations) {
        if (!r.is_object()) throw ParseError("relation entry must be an object");
        RelationEdge e;
        e.id = require_string(require(r, "id", "relation"), "relation id");
        e.source = require_int(require(r, "source", "relation"), "relation source");
        e.target = require_int(require(r, "target", "relation"), "relation target");
        relations.push_back(std::move(e));
    }

    Environment env;
    env.ontology = OntologyGraph::make(std::move(labels), std::move(relations));

    const json& jpages = require(doc, "pages", "document");
    if (!jpages.is_array()) throw ParseError("pages must be an array");
    for (const json& p : jpages) {
        if (!p.is_object()) throw ParseError("page entry must be an object");
        std::string id = require_string(require(p, "id", "page"), "page id");
        std::vector<std::string> rel_ids;
        const json& jrels = require(p, "relations", "page");
        if (!jrels.is_array()) throw ParseError("page relations must be an array");
        for (const json& rid : jrels) rel_ids.push_back(require_string(rid, "page relation id"));
        std::vector<ConceptId> extras;
        if (auto it = p.find("concepts"); it != p.end()) {
            if (!it->is_array()) throw ParseError("page concepts must be an array");
            for (const json& c : *it) extras.push_back(require_int(c, "page concept index"));
        }
        env.pages.push_back(
            PageSubgraph::make(std::move(id), std::move(rel_ids), std::move(extras), env.ontology));
    }
    std::sort(env.pages.begin(), env.pages.end(),
              [](const PageSubgraph& a, const PageSubgraph& b) { return a.id() < b.id(); });
    for (size_t i = 1; i < env.pages.size(); ++i) {
        if (env.pages[i].id() == env.pages[i - 1].id())
            throw ValidationError("duplicate page id \"" + env.pages[i].id() + "\"");
    }

    if (auto it = doc.find("query"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("query must be an object");
        const json& jterms = require(*it, "terms", "query");
        if (!jterms.is_array()) throw ParseError("query terms must be an array");
        std::vector<Query::Association> assocs;
        for (const json& t : jterms) {
            if (!t.is_object()) throw ParseError("query term entry must be an object");
            Query::Association a;
            a.term = require_string(require(t, "term", "query term"), "query term");
            a.concept_id = require_int(require(t, "concept", "query term"), "query concept");
            assocs.push_back(std::move(a));
        }
        env.query = Query::make(std::move(assocs), env.ontology);
    }
    return env;
}

Environment load_environment(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open environment file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_environment(buf.str());
}

std::string serialize_environment(const Environment& env) {
    ordered_json doc;

    ordered_json jconcepts = ordered_json::array();
    for (const std::string& label : env.ontology.concept_labels()) jconcepts.push_back(label);

    ordered_json jrelations = ordered_json::array();
    for (const RelationEdge& r : env.ontology.relations()) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["source"] = r.source;
        jr["target"] = r.target;
        jrelations.push_back(std::move(jr));
    }
    doc["ontology"] = {{"concepts", std::move(jconcepts)}, {"relations", std::move(jrelations)}};

    ordered_json jpages = ordered_json::array();
    for (const PageSubgraph& p : env.pages) {
        ordered_json jp;
        jp["id"] = p.id();
        jp["relations"] = p.relation_ids();
        if (!p.extra_concepts().empty()) jp["concepts"] = p.extra_concepts();
        jpages.push_back(std::move(jp));
    }
    doc["pages"] = std::move(jpages);

    if (env.query) {
        ordered_json jterms = ordered_json::array();
        for (const Query::Association& a : env.query->associations()) {
            ordered_json jt;
            jt["term"] = a.term;
            jt["concept"] = a.concept_id;
            jterms.push_back(std::move(jt));
        }
        doc["query"] = {{"terms", std::move(jterms)}};
    }
    return doc.dump(2) + "\n";
}

void save_environment(const Environment& env, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write environment file: " + path.string());
    out << serialize_environment(env);
}

}  // namespace semrank
