#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clutter/clutter.hpp"

namespace clutter {

/// A parsed clutter document.  "matching" and "classes" are optional
/// annotations: ordered lists of vertex sets consumed by the matching
/// and admissible-structure modules.
struct ClutterDocument {
    Clutter clutter;
    std::optional<std::vector<VertexSet>> matching;
    std::optional<std::vector<VertexSet>> classes;
};

namespace detail {

inline std::vector<VertexSet> parse_set_list(const Clutter& c, const nlohmann::json& arr,
                                             const std::string& what) {
    if (!arr.is_array()) throw validation_error("\"" + what + "\" must be an array of arrays");
    std::vector<VertexSet> out;
    for (const auto& part : arr) {
        if (!part.is_array()) throw validation_error("\"" + what + "\" must be an array of arrays");
        VertexSet s(c.vertex_count());
        for (const auto& name : part) {
            if (!name.is_string())
                throw validation_error("\"" + what + "\" entries must be vertex names");
            int v = c.index_of(name.get<std::string>());
            if (v < 0)
                throw validation_error("unknown vertex name in \"" + what +
                                       "\": " + name.get<std::string>());
            s.insert(v);
        }
        out.push_back(s);
    }
    return out;
}

} // namespace detail

/// Parse the JSON clutter format:
///   {"vertices": [name...], "edges": [[name...]...],
///    "matching": [[name...]...]?, "classes": [[name...]...]?}
/// Vertex order is the order of the "vertices" array.
inline ClutterDocument parse_clutter_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw validation_error("clutter document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw validation_error("missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw validation_error("missing \"edges\" array");

    std::vector<std::string> labels;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw validation_error("vertex names must be strings");
        labels.push_back(v.get<std::string>());
    }

    // Labels must be installed before edges can be resolved, so build a
    // label-only clutter first and reuse its name index.
    Clutter universe_only(labels, {});
    std::vector<VertexSet> edges = detail::parse_set_list(universe_only, doc["edges"], "edges");
    Clutter c(labels, std::move(edges));

    ClutterDocument out{std::move(c), std::nullopt, std::nullopt};
    if (doc.contains("matching"))
        out.matching = detail::parse_set_list(out.clutter, doc["matching"], "matching");
    if (doc.contains("classes"))
        out.classes = detail::parse_set_list(out.clutter, doc["classes"], "classes");
    return out;
}

inline Clutter parse_clutter(const std::string& text) {
    return parse_clutter_document(text).clutter;
}

inline nlohmann::ordered_json set_to_json(const Clutter& c, VertexSet s) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : s.members()) arr.push_back(c.label(v));
    return arr;
}

inline nlohmann::ordered_json set_list_to_json(const Clutter& c, const std::vector<VertexSet>& sets) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : sets) arr.push_back(set_to_json(c, s));
    return arr;
}

inline nlohmann::ordered_json clutter_to_json(const ClutterDocument& doc) {
    nlohmann::ordered_json out;
    out["vertices"] = doc.clutter.labels();
    out["edges"] = set_list_to_json(doc.clutter, doc.clutter.edges());
    if (doc.matching) out["matching"] = set_list_to_json(doc.clutter, *doc.matching);
    if (doc.classes) out["classes"] = set_list_to_json(doc.clutter, *doc.classes);
    return out;
}

inline nlohmann::ordered_json clutter_to_json(const Clutter& c) {
    return clutter_to_json(ClutterDocument{c, std::nullopt, std::nullopt});
}

/// Canonical serialization; parse(serialize(c)) == c.
inline std::string serialize_clutter(const ClutterDocument& doc) {
    return clutter_to_json(doc).dump(2) + "\n";
}

inline std::string serialize_clutter(const Clutter& c) {
    return serialize_clutter(ClutterDocument{c, std::nullopt, std::nullopt});
}

} // namespace clutter
