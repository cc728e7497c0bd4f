#include "pert/io.hpp"

#include "pert/error.hpp"

#include <algorithm>
#include <sstream>

namespace pert::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Input, "MalformedInput", what); }

int as_index(const json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
    auto v = j.get<long long>();
    if (v < -1000000000LL || v > 1000000000LL) malformed(std::string(what) + " out of range");
    return static_cast<int>(v);
}

Term term_from_json(const json& j) {
    if (!j.is_array()) malformed("a term must be an array of indices");
    Term t;
    for (const auto& x : j) t.push_back(as_index(x, "term index"));
    return t;
}

} // namespace

json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    malformed("rationals must be strings (\"3/2\", \"1.25\") or integers");
}

json terms_to_json(const SupportFamily& family) {
    json out = json::array();
    for (const auto& t : family) out.push_back(t);
    return out;
}

ProjectNetwork network_from_json(const json& j, ValidateOptions options) {
    if (!j.is_object() || !j.contains("activities") || !j["activities"].is_array())
        malformed("network JSON needs an \"activities\" array");
    const auto& acts = j["activities"];
    const int n = static_cast<int>(acts.size());
    std::vector<Rational> costs(acts.size());
    std::vector<std::string> names(acts.size());
    std::vector<char> seen(acts.size(), 0);
    for (const auto& a : acts) {
        if (!a.is_object() || !a.contains("id")) malformed("each activity needs an \"id\"");
        int id = as_index(a["id"], "activity id");
        if (id < 1 || id > n) malformed("activity ids must be 1.." + std::to_string(n));
        auto k = static_cast<std::size_t>(id - 1);
        if (seen[k]) malformed("duplicate activity id " + std::to_string(id));
        seen[k] = 1;
        if (!a.contains("cost")) malformed("activity " + std::to_string(id) + " has no cost");
        costs[k] = rational_from_json(a["cost"]);
        if (a.contains("name")) {
            if (!a["name"].is_string()) malformed("activity names must be strings");
            names[k] = a["name"].get<std::string>();
        }
    }
    std::vector<Arc> arcs;
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) malformed("\"arcs\" must be an array");
        for (const auto& a : j["arcs"]) {
            if (!a.is_array() || a.size() != 2) malformed("each arc must be a pair [from, to]");
            arcs.push_back({as_index(a[0], "arc endpoint"), as_index(a[1], "arc endpoint")});
        }
    }
    return validate_network(n, std::move(arcs), std::move(costs), std::move(names), options);
}

json network_to_json(const ProjectNetwork& network) {
    json acts = json::array();
    for (int i = 1; i <= network.size(); ++i) {
        json a = json::object();
        a["id"] = i;
        const auto& name = network.names()[static_cast<std::size_t>(i - 1)];
        if (!name.empty()) a["name"] = name;
        a["cost"] = format_rational(network.costs()[static_cast<std::size_t>(i - 1)]);
        acts.push_back(std::move(a));
    }
    json arcs = json::array();
    for (const auto& a : network.covers()) arcs.push_back({a.from, a.to});
    return json{{"activities", std::move(acts)}, {"arcs", std::move(arcs)}};
}

TropicalPolynomial poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j["terms"].is_array())
        malformed("polynomial JSON needs \"n\" and \"terms\"");
    SupportFamily terms;
    for (const auto& t : j["terms"]) terms.push_back(term_from_json(t));
    return make_poly(as_index(j["n"], "n"), std::move(terms));
}

json poly_to_json(const TropicalPolynomial& f) {
    return json{{"n", f.variables()}, {"terms", terms_to_json(f.terms())}};
}

TropicalPolynomial read_polynomial(std::string_view text, std::size_t max_chains) {
    auto j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) return parse_poly_text(text);
    if (j.is_object() && j.contains("activities")) return eft_polynomial(network_from_json(j), max_chains);
    return poly_from_json(j);
}

json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return json{{"vertices", terms_to_json(g.vertices)}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const json& j, int n) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) malformed("graph JSON needs vertices and edges");
    SupportFamily vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(term_from_json(v));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair");
        edges.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
    }
    return canonical_graph(n, std::move(vertices), std::move(edges));
}

CostVector parse_costs(std::string_view text) {
    CostVector out;
    auto j = json::parse(text.begin(), text.end(), nullptr, false);
    if (!j.is_discarded() && j.is_array()) {
        for (const auto& x : j) out.push_back(rational_from_json(x));
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

json evaluation_to_json(const Rational& value, const SupportFamily& argmax) {
    return json{{"value", rational_to_json(value)}, {"critical_paths", terms_to_json(argmax)}};
}

json membership_to_json(const ChamberMembership& m) {
    if (m.interior) return json{{"kind", "interior"}, {"term", m.terms.front()}};
    return json{{"kind", "wall"}, {"tie", terms_to_json(m.terms)}};
}

json whatif_to_json(const WhatIfResult& r, const Prediction& p) {
    json crossings = json::array();
    for (const auto& c : r.crossings)
        crossings.push_back(
            json{{"s", rational_to_json(c.step)}, {"tie", terms_to_json(c.tie)}, {"next", terms_to_json(c.next)}});
    json horizon{{"kind", r.horizon.kind == Horizon::Kind::Stable ? "stable" : "floor"},
                 {"argmax", terms_to_json(r.horizon.argmax)}};
    if (r.horizon.kind == Horizon::Kind::Floor) horizon["s"] = rational_to_json(r.horizon.step);
    return json{{"activity", r.activity},
                {"direction", r.sign > 0 ? "up" : "down"},
                {"start", terms_to_json(r.start)},
                {"crossings", std::move(crossings)},
                {"horizon", std::move(horizon)},
                {"candidates", terms_to_json(p.candidates)},
                {"prediction", p.code == PredictionCode::Exits ? "exits" : "stays-inside"}};
}

json realisation_failure_to_json(NotRealisableReason reason) {
    return json{{"error", "NotRealisable"}, {"reason", to_string(reason)}};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string term_label(const Term& t) { return format_term(t); }

} // namespace

std::string network_to_dot(const ProjectNetwork& network) {
    std::ostringstream os;
    os << "digraph network {\n  rankdir=LR;\n";
    for (int i = 1; i <= network.size(); ++i) {
        const auto& name = network.names()[static_cast<std::size_t>(i - 1)];
        os << "  a" << i << " [label=\"" << i;
        if (!name.empty()) os << " " << dot_escape(name);
        os << "\\n" << format_rational(network.costs()[static_cast<std::size_t>(i - 1)]) << "\"];\n";
    }
    for (const auto& a : network.covers()) os << "  a" << a.from << " -> a" << a.to << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_dot(const LabeledGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n  node [shape=box];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << term_label(g.vertices[v]) << "\"];\n";
    for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace pert::io
