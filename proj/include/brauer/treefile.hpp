#pragma once

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "brauer/tree.hpp"

namespace brauer {

/// TreeFile document:
///   {
///     "vertices": [{"id": str, "mult": int (default 1), "order": [edge ids]}],
///     "edges":    [{"id": str, "ends": [vertex id, vertex id]}],
///     "W":        [{"edge": str, "vertex": str}]   (optional, default empty)
///   }
/// Parsing is fail-closed: unknown fields are rejected.

namespace treefile_detail {

using nlohmann::json;

inline void require_keys(const json& obj, const char* what,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional) {
    if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object");
    for (const char* k : required)
        if (!obj.contains(k))
            throw ParseError(std::string(what) + " is missing field \"" + k + "\"");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* r : required) known |= k == r;
        for (const char* o : optional) known |= k == o;
        if (!known)
            throw ParseError("unknown field \"" + k + "\" in " + what);
    }
}

inline std::string get_string(const json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
    return v.get<std::string>();
}

} // namespace treefile_detail

inline std::pair<BrauerTree, SpecialSubset> parse_tree_file(const std::string& text) {
    using treefile_detail::get_string;
    using treefile_detail::require_keys;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    require_keys(doc, "tree file", {"vertices", "edges"}, {"W"});
    if (!doc["vertices"].is_array() || !doc["edges"].is_array())
        throw ParseError("\"vertices\" and \"edges\" must be arrays");

    RawTree raw;
    for (const auto& v : doc["vertices"]) {
        require_keys(v, "vertex", {"id", "order"}, {"mult"});
        RawTree::Vertex out;
        out.id = get_string(v["id"], "vertex id");
        if (v.contains("mult")) {
            if (!v["mult"].is_number_integer()) throw ParseError("\"mult\" must be an integer");
            out.mult = v["mult"].get<int>();
        }
        if (!v["order"].is_array()) throw ParseError("\"order\" must be an array");
        for (const auto& e : v["order"]) out.order.push_back(get_string(e, "order entry"));
        raw.vertices.push_back(std::move(out));
    }
    for (const auto& e : doc["edges"]) {
        require_keys(e, "edge", {"id", "ends"}, {});
        RawTree::Edge out;
        out.id = get_string(e["id"], "edge id");
        if (!e["ends"].is_array() || e["ends"].size() != 2)
            throw ParseError("\"ends\" must be a pair of vertex ids");
        out.ends = {get_string(e["ends"][0], "endpoint"), get_string(e["ends"][1], "endpoint")};
        raw.edges.push_back(std::move(out));
    }

    BrauerTree t = validate_tree(raw);
    SpecialSubset w;
    if (doc.contains("W")) {
        if (!doc["W"].is_array()) throw ParseError("\"W\" must be an array");
        for (const auto& h : doc["W"]) {
            require_keys(h, "W entry", {"edge", "vertex"}, {});
            HookLabel label{get_string(h["edge"], "W edge"), get_string(h["vertex"], "W vertex")};
            check_label(t, label);
            w.insert(label);
        }
    }
    return {std::move(t), std::move(w)};
}

inline nlohmann::json tree_file_json(const BrauerTree& t, const SpecialSubset& w) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& [v, cyc] : t.tree.order)
        doc["vertices"].push_back({{"id", v}, {"mult", t.mult.at(v)}, {"order", cyc}});
    doc["edges"] = nlohmann::json::array();
    for (const auto& [e, uv] : t.tree.ends)
        doc["edges"].push_back({{"id", e}, {"ends", {uv.first, uv.second}}});
    doc["W"] = nlohmann::json::array();
    for (const HookLabel& h : w)
        doc["W"].push_back({{"edge", h.edge}, {"vertex", h.vertex}});
    return doc;
}

} // namespace brauer
