#pragma once

#include "qwalk/branch.hpp"
#include "qwalk/graph.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <string>

namespace qwalk {

using Json = nlohmann::ordered_json;

/// Graph JSON: {"n": int, "edges": [[u,v,w?],...], "labels": [...]?, "loops": bool?}
/// A missing weight means 1. Weights may be integers, doubles, or exact
/// fraction strings like "3/2". Listing both [u,v,w1] and [v,u,w2] with
/// w1 != w2 is rejected as an asymmetric weight function.
inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer field 'n'");
    const int n = j["n"].get<int>();
    const bool loops = j.value("loops", false);
    Graph g(n, loops);

    std::map<std::pair<int, int>, Json> seen;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("graph json: 'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3)
                throw std::invalid_argument("graph json: edge entries are [u,v] or [u,v,w]");
            if (!e[0].is_number_integer() || !e[1].is_number_integer())
                throw std::invalid_argument("graph json: edge endpoints must be integers");
            int u = e[0].get<int>();
            int v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph json: edge endpoint out of range");
            if (u == v && !loops)
                throw std::invalid_argument("graph json: self-loop without the loops flag");
            Json w = e.size() == 3 ? e[2] : Json(1);
            auto key = std::minmax(u, v);
            auto it = seen.find(key);
            if (it != seen.end()) {
                if (it->second != w)
                    throw std::invalid_argument("graph json: asymmetric weights for edge (" +
                                                std::to_string(u) + "," + std::to_string(v) + ")");
                continue;
            }
            seen.emplace(key, w);
            if (w.is_number_integer()) {
                g.set_weight(u, v, Rational(w.get<long long>()));
            } else if (w.is_string()) {
                auto q = parse_rational(w.get<std::string>());
                if (!q) throw std::invalid_argument("graph json: unparseable weight string");
                g.set_weight(u, v, *q);
            } else if (w.is_number()) {
                g.set_weight(u, v, w.get<double>());
            } else {
                throw std::invalid_argument("graph json: weight must be a number or fraction string");
            }
        }
    }
    if (j.contains("labels") && !j["labels"].is_null()) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
            throw std::invalid_argument("graph json: labels must list one string per vertex");
        std::vector<std::string> labels;
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
        g.set_labels(std::move(labels));
    }
    if (j.contains("family") && j["family"].is_object()) {
        const auto& f = j["family"];
        const std::string kind = f.value("kind", "");
        static const std::map<std::string, FamilyInfo::Kind> kinds = {
            {"path", FamilyInfo::Kind::Path},
            {"cycle", FamilyInfo::Kind::Cycle},
            {"complete", FamilyInfo::Kind::Complete},
            {"star", FamilyInfo::Kind::Star},
            {"book", FamilyInfo::Kind::Book},
            {"cayley", FamilyInfo::Kind::CayleyAbelian},
            {"complete-minus-c4s", FamilyInfo::Kind::CompleteMinusC4s},
        };
        auto it = kinds.find(kind);
        if (it != kinds.end()) g.family.kind = it->second;
        if (f.contains("params")) g.family.params = f["params"].get<std::vector<long long>>();
        if (f.contains("orders")) g.family.group_orders = f["orders"].get<std::vector<long long>>();
    }
    return g;
}

inline std::string family_kind_name(FamilyInfo::Kind k) {
    switch (k) {
        case FamilyInfo::Kind::Path: return "path";
        case FamilyInfo::Kind::Cycle: return "cycle";
        case FamilyInfo::Kind::Complete: return "complete";
        case FamilyInfo::Kind::Star: return "star";
        case FamilyInfo::Kind::Book: return "book";
        case FamilyInfo::Kind::CayleyAbelian: return "cayley";
        case FamilyInfo::Kind::CompleteMinusC4s: return "complete-minus-c4s";
        default: return "";
    }
}

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        auto w = g.exact_weight(u, v);
        if (w && *w == 1) {
            edges.push_back(Json::array({u, v}));
        } else if (w && is_integer(*w)) {
            edges.push_back(Json::array({u, v, to_long_checked(numerator(*w), "weight")}));
        } else if (w) {
            std::string s = numerator(*w).str() + "/" + denominator(*w).str();
            edges.push_back(Json::array({u, v, s}));
        } else {
            edges.push_back(Json::array({u, v, g.weight(u, v)}));
        }
    }
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    if (g.allows_loops()) j["loops"] = true;
    if (g.family.kind != FamilyInfo::Kind::None) {
        Json f;
        f["kind"] = family_kind_name(g.family.kind);
        if (!g.family.params.empty()) f["params"] = g.family.params;
        if (!g.family.group_orders.empty()) f["orders"] = g.family.group_orders;
        j["family"] = std::move(f);
    }
    return j;
}

inline Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("graph json parse error in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

inline void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

/// BranchPair JSON: {"copy1": [...], "copy2": [...], "f": [[a, fa], ...]}.
/// "f" alone is enough; copy lists, when present, must agree with it.
inline BranchPair branch_pair_from_json(const Json& j) {
    BranchPair bp;
    if (j.contains("f")) {
        for (const auto& e : j["f"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("branch json: 'f' entries are [a, f(a)] pairs");
            bp.copy1.push_back(e[0].get<int>());
            bp.copy2.push_back(e[1].get<int>());
        }
    } else if (j.contains("copy1") && j.contains("copy2")) {
        bp.copy1 = j["copy1"].get<std::vector<int>>();
        bp.copy2 = j["copy2"].get<std::vector<int>>();
    } else {
        throw std::invalid_argument("branch json: need 'f' or copy1/copy2");
    }
    if (j.contains("copy1") && j["copy1"].get<std::vector<int>>() != bp.copy1)
        throw std::invalid_argument("branch json: copy1 disagrees with f");
    if (j.contains("copy2") && j["copy2"].get<std::vector<int>>() != bp.copy2)
        throw std::invalid_argument("branch json: copy2 disagrees with f");
    if (bp.copy1.size() != bp.copy2.size() || bp.copy1.empty())
        throw std::invalid_argument("branch json: empty or mismatched branch lists");
    return bp;
}

inline Json branch_pair_to_json(const BranchPair& bp) {
    Json j;
    j["copy1"] = bp.copy1;
    j["copy2"] = bp.copy2;
    Json f = Json::array();
    for (size_t i = 0; i < bp.copy1.size(); ++i)
        f.push_back(Json::array({bp.copy1[i], bp.copy2[i]}));
    j["f"] = std::move(f);
    return j;
}

inline BranchPair read_branch_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open branch file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("branch json parse error in " + path + ": " + e.what());
    }
    return branch_pair_from_json(j);
}

}  // namespace qwalk
