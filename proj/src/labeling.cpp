#include <edgemagic/labeling.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace edgemagic {

const char * to_string(LabelingError error)
{
    switch (error) {
    case LabelingError::None: return "None";
    case LabelingError::CoverageMismatch: return "CoverageMismatch";
    case LabelingError::NotBijective: return "NotBijective";
    case LabelingError::NotConstant: return "NotConstant";
    case LabelingError::VerticesNotLow: return "VerticesNotLow";
    case LabelingError::NotConsecutive: return "NotConsecutive";
    }
    return "?";
}

LabelingException::LabelingException(LabelingError error, const std::string & what) :
    std::runtime_error(std::string(to_string(error)) + ": " + what),
    _error(error)
{
}

std::string edge_key(const Edge & e)
{
    return std::to_string(std::min(e.u, e.v)) + "-" + std::to_string(std::max(e.u, e.v));
}

namespace {
    Verdict fail(LabelingError error, std::string message)
    {
        Verdict v;
        v.error = error;
        v.message = std::move(message);
        return v;
    }

    std::string describe_element(const ForestGraph & g, int element)
    {
        // elements 0..n-1 are vertices, n.. are edges
        if (element < g.n)
            return "vertex " + std::to_string(element + 1);
        return "edge " + edge_key(g.edges[element - g.n]);
    }
}

Verdict verify_edge_magic(const ForestGraph & g, const TotalLabeling & t)
{
    const int n = g.n, m = g.m();
    if (t.vertex_labels.size() != static_cast<std::size_t>(n) || t.edge_labels.size() != static_cast<std::size_t>(m))
        return fail(LabelingError::CoverageMismatch,
            "labeling has " + std::to_string(t.vertex_labels.size()) + " vertex and " + std::to_string(t.edge_labels.size())
                + " edge labels for a graph with n=" + std::to_string(n) + ", m=" + std::to_string(m));

    std::vector<int> owner(static_cast<std::size_t>(n + m + 1), -1);
    for (int element = 0; element < n + m; ++element) {
        int label = element < n ? t.vertex_labels[element] : t.edge_labels[element - n];
        if (label < 1 || label > n + m) {
            auto v = fail(LabelingError::NotBijective,
                describe_element(g, element) + " has label " + std::to_string(label) + " outside 1.." + std::to_string(n + m));
            v.label = label;
            return v;
        }
        if (owner[label] != -1) {
            auto v = fail(LabelingError::NotBijective,
                "label " + std::to_string(label) + " used by " + describe_element(g, owner[label]) + " and "
                    + describe_element(g, element));
            v.label = label;
            return v;
        }
        owner[label] = element;
    }

    Verdict result;
    for (int e = 0; e < m; ++e) {
        int sum = t.vertex_labels[g.edges[e].u - 1] + t.vertex_labels[g.edges[e].v - 1] + t.edge_labels[e];
        if (! result.magic_constant) {
            result.magic_constant = sum;
            result.first_edge = e;
        }
        else if (sum != *result.magic_constant) {
            auto v = fail(LabelingError::NotConstant,
                "edge " + edge_key(g.edges[*result.first_edge]) + " sums to " + std::to_string(*result.magic_constant)
                    + " but edge " + edge_key(g.edges[e]) + " sums to " + std::to_string(sum));
            v.first_edge = result.first_edge;
            v.second_edge = e;
            return v;
        }
    }
    if (result.magic_constant && t.magic_constant && *t.magic_constant != *result.magic_constant) {
        auto v = fail(LabelingError::NotConstant,
            "declared magic constant " + std::to_string(*t.magic_constant) + " but edges sum to "
                + std::to_string(*result.magic_constant));
        v.first_edge = result.first_edge;
        return v;
    }
    result.first_edge.reset();
    return result;
}

Verdict verify_super_edge_magic(const ForestGraph & g, const TotalLabeling & t)
{
    auto verdict = verify_edge_magic(g, t);
    if (! verdict)
        return verdict;
    for (int id = 1; id <= g.n; ++id)
        if (t.vertex_labels[id - 1] > g.n) {
            auto v = fail(LabelingError::VerticesNotLow,
                "vertex " + std::to_string(id) + " has label " + std::to_string(t.vertex_labels[id - 1]) + " > n = "
                    + std::to_string(g.n));
            v.vertex = id;
            v.label = t.vertex_labels[id - 1];
            return v;
        }
    return verdict;
}

SumSet vertex_sum_check(const ForestGraph & g, const VertexLabeling & vl)
{
    SumSet result;
    if (vl.labels.size() != static_cast<std::size_t>(g.n))
        return result;
    std::vector<bool> seen(static_cast<std::size_t>(g.n + 1), false);
    for (int label : vl.labels) {
        if (label < 1 || label > g.n || seen[label])
            return result;
        seen[label] = true;
    }

    std::set<int> sums;
    for (auto & e : g.edges)
        sums.insert(vl(e.u) + vl(e.v));
    result.sums.assign(sums.begin(), sums.end());
    if (! sums.empty())
        result.min_sum = *sums.begin();
    const int m = g.m();
    result.consecutive = m == 0 || (static_cast<int>(sums.size()) == m && *sums.rbegin() - *sums.begin() == m - 1);
    return result;
}

TotalLabeling extend_vertex_labeling(const ForestGraph & g, const VertexLabeling & vl)
{
    auto check = vertex_sum_check(g, vl);
    if (! check.consecutive)
        throw LabelingException(LabelingError::NotConsecutive, "vertex sums are not m distinct consecutive integers");

    TotalLabeling t;
    t.vertex_labels = vl.labels;
    if (g.m() == 0)
        return t;
    const int k = *check.min_sum + g.n + g.m();
    t.edge_labels.reserve(g.edges.size());
    for (auto & e : g.edges)
        t.edge_labels.push_back(k - vl(e.u) - vl(e.v));
    t.magic_constant = k;
    return t;
}

std::pair<ForestGraph, TotalLabeling> restrict_to_component(const ForestGraph & g, const TotalLabeling & t, int component)
{
    if (g.edge_component.size() != g.edges.size())
        throw std::invalid_argument("graph carries no component structure");

    ForestGraph sub;
    sub.family = g.family;
    if (g.family == ForestFamily::Army)
        sub.caterpillar_shapes = {g.caterpillar_shapes.at(static_cast<std::size_t>(component - 1))};
    if (g.family == ForestFamily::Constellation)
        sub.star_sizes = {g.star_sizes.at(static_cast<std::size_t>(component - 1))};

    TotalLabeling restricted;
    std::map<int, int> new_id;
    for (int id = 1; id <= g.n; ++id) {
        auto role = g.role(id);
        if (role.component != component)
            continue;
        role.component = 1;
        sub.roles.push_back(role);
        new_id[id] = ++sub.n;
        restricted.vertex_labels.push_back(t.vertex_labels.at(static_cast<std::size_t>(id - 1)));
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edge_component[e] != component)
            continue;
        sub.edges.push_back({new_id.at(g.edges[e].u), new_id.at(g.edges[e].v)});
        sub.edge_component.push_back(1);
        if (! g.edge_order.empty())
            sub.edge_order.push_back(g.edge_order[e]);
        restricted.edge_labels.push_back(t.edge_labels.at(e));
    }
    restricted.magic_constant = t.magic_constant;
    return {std::move(sub), std::move(restricted)};
}

} // namespace edgemagic
