#include <edgemagic/io.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace edgemagic {

using nlohmann::json;

std::string vertex_tag(const VertexRole & role)
{
    auto pair = [&](char prefix) { return prefix + std::to_string(role.component) + "." + std::to_string(role.index); };
    switch (role.kind) {
    case RoleKind::StarCenter: return "c" + std::to_string(role.component);
    case RoleKind::StarLeaf: return pair('l');
    case RoleKind::UPart: return pair('u');
    case RoleKind::VPart: return pair('v');
    case RoleKind::Plain: break;
    }
    return "";
}

json forest_to_json(const ForestGraph & g)
{
    json doc;
    doc["n"] = g.n;
    doc["edges"] = json::array();
    for (auto & e : g.edges)
        doc["edges"].push_back({e.u, e.v});

    json roles;
    switch (g.family) {
    case ForestFamily::Plain:
        roles["family"] = "plain";
        break;
    case ForestFamily::Constellation:
        roles["family"] = "constellation";
        roles["sizes"] = g.star_sizes;
        break;
    case ForestFamily::Army: {
        roles["family"] = "army";
        roles["type"] = {g.caterpillar_shapes.front().r(), g.caterpillar_shapes.front().s()};
        roles["shapes"] = json::array();
        for (auto & shape : g.caterpillar_shapes)
            roles["shapes"].push_back(shape.to_string());
        json order = json::object();
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            order[edge_key(g.edges[e])] = g.edge_order[e];
        roles["edge_order"] = std::move(order);
        break;
    }
    }
    if (g.family != ForestFamily::Plain) {
        json vertices = json::object();
        for (int id = 1; id <= g.n; ++id)
            vertices[std::to_string(id)] = vertex_tag(g.role(id));
        roles["vertices"] = std::move(vertices);
    }
    doc["roles"] = std::move(roles);
    return doc;
}

namespace {
    std::set<std::pair<int, int>> edge_set(const std::vector<Edge> & edges)
    {
        std::set<std::pair<int, int>> result;
        for (auto & e : edges)
            result.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
        return result;
    }

    void require_same_edges(const ForestGraph & expected, int n, const std::vector<Edge> & edges, const std::string & family)
    {
        if (expected.n != n || expected.edges.size() != edges.size() || edge_set(expected.edges) != edge_set(edges))
            throw InputError("edge list does not match the " + family + " described in roles");
    }
}

ForestGraph forest_from_json(const json & doc)
{
    try {
        if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
            throw InputError("forest document needs \"n\" and \"edges\"");
        const int n = doc.at("n").get<int>();
        std::vector<Edge> edges;
        for (auto & pair : doc.at("edges")) {
            if (! pair.is_array() || pair.size() != 2)
                throw InputError("each edge must be a pair of vertex ids");
            edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }

        std::string family = "plain";
        if (doc.contains("roles") && doc["roles"].contains("family"))
            family = doc["roles"]["family"].get<std::string>();
        auto & roles = doc.contains("roles") ? doc["roles"] : doc;

        if (family == "constellation") {
            auto g = build_constellation(Constellation(roles.at("sizes").get<std::vector<StarSize>>()));
            require_same_edges(g, n, edges, family);
            return g;
        }
        if (family == "army") {
            auto type = roles.at("type").get<std::vector<int>>();
            if (type.size() != 2)
                throw InputError("army type must be [r, s]");
            std::vector<CaterpillarShape> shapes;
            for (auto & text : roles.at("shapes"))
                shapes.push_back(CaterpillarShape::parse(type[0], type[1], text.get<std::string>()));
            auto g = build_army(Army(std::move(shapes)));
            require_same_edges(g, n, edges, family);
            if (roles.contains("edge_order"))
                for (std::size_t e = 0; e < g.edges.size(); ++e) {
                    auto key = edge_key(g.edges[e]);
                    if (! roles["edge_order"].contains(key) || roles["edge_order"][key].get<int>() != g.edge_order[e])
                        throw InputError("edge_order entry for " + key + " does not match the staircase");
                }
            return g;
        }
        if (family != "plain")
            throw InputError("unknown forest family \"" + family + "\"");
        return make_forest(n, std::move(edges));
    }
    catch (const json::exception & e) {
        throw InputError(std::string("malformed forest document: ") + e.what());
    }
    catch (const ForestError & e) {
        throw InputError(e.what());
    }
}

json labeling_to_json(const ForestGraph & g, const TotalLabeling & t, const std::string & kind)
{
    json doc;
    doc["kind"] = kind;
    doc["magic_constant"] = t.magic_constant ? json(*t.magic_constant) : json(nullptr);
    json vertices = json::object(), edges = json::object();
    for (int id = 1; id <= g.n; ++id)
        vertices[std::to_string(id)] = t.vertex_labels.at(static_cast<std::size_t>(id - 1));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        edges[edge_key(g.edges[e])] = t.edge_labels.at(e);
    doc["vertex_labels"] = std::move(vertices);
    doc["edge_labels"] = std::move(edges);
    return doc;
}

TotalLabeling labeling_from_json(const ForestGraph & g, const json & doc)
{
    try {
        auto & vertices = doc.at("vertex_labels");
        auto & edges = doc.at("edge_labels");
        if (vertices.size() != static_cast<std::size_t>(g.n) || edges.size() != g.edges.size())
            throw InputError("labeling covers " + std::to_string(vertices.size()) + " vertices and " + std::to_string(edges.size())
                + " edges; forest has " + std::to_string(g.n) + " and " + std::to_string(g.m()));
        TotalLabeling t;
        for (int id = 1; id <= g.n; ++id) {
            auto key = std::to_string(id);
            if (! vertices.contains(key))
                throw InputError("no label for vertex " + key);
            t.vertex_labels.push_back(vertices[key].get<int>());
        }
        for (auto & e : g.edges) {
            auto key = edge_key(e);
            if (! edges.contains(key))
                throw InputError("no label for edge " + key);
            t.edge_labels.push_back(edges[key].get<int>());
        }
        if (doc.contains("magic_constant") && ! doc["magic_constant"].is_null())
            t.magic_constant = doc["magic_constant"].get<int>();
        return t;
    }
    catch (const json::exception & e) {
        throw InputError(std::string("malformed labeling document: ") + e.what());
    }
}

json report_to_json(const ForestGraph & g, const SearchReport & report)
{
    json doc;
    doc["outcome"] = to_string(report.outcome);
    doc["k"] = report.magic_constant() ? json(*report.magic_constant()) : json(nullptr);
    doc["nodes"] = report.nodes_visited;
    doc["millis"] = report.millis;
    doc["per_constant"] = json::array();
    for (auto & c : report.per_constant)
        doc["per_constant"].push_back({{"k", c.k}, {"outcome", to_string(c.outcome)}, {"nodes", c.nodes}});
    doc["labeling"] = report.labeling ? labeling_to_json(g, *report.labeling, "search") : json(nullptr);
    return doc;
}

json scan_record_to_json(const ScanRecord & record)
{
    json doc;
    doc["sizes"] = record.sizes;
    doc["symmetric"] = record.symmetric;
    doc["n"] = record.vertex_count;
    doc["outcome"] = to_string(record.outcome);
    doc["k"] = record.magic_constant ? json(*record.magic_constant) : json(nullptr);
    doc["nodes"] = record.nodes;
    doc["millis"] = record.millis;
    if (record.constructive_constant)
        doc["constructive_k"] = *record.constructive_constant;
    if (record.agrees)
        doc["agrees"] = *record.agrees;
    if (record.reverified_infeasible)
        doc["reverified_infeasible"] = *record.reverified_infeasible;
    return doc;
}

std::string export_dot(const ForestGraph & g, const TotalLabeling & t)
{
    if (t.vertex_labels.size() != static_cast<std::size_t>(g.n) || t.edge_labels.size() != g.edges.size())
        throw InputError("labeling does not cover the forest");
    std::ostringstream out;
    out << "graph labeling {\n";
    out << "  node [shape=circle];\n";
    for (int id = 1; id <= g.n; ++id) {
        out << "  " << id << " [label=\"" << t.vertex_labels[id - 1] << "\"";
        if (auto tag = vertex_tag(g.role(id)); ! tag.empty())
            out << ", tooltip=\"" << tag << "\"";
        out << "];\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out << "  " << g.edges[e].u << " -- " << g.edges[e].v << " [label=\"" << t.edge_labels[e] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace edgemagic
