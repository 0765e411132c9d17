#include <edgemagic/forest.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace edgemagic {

const char * to_string(ForestErrorKind kind)
{
    switch (kind) {
    case ForestErrorKind::NotOdd: return "NotOdd";
    case ForestErrorKind::NotSymmetric: return "NotSymmetric";
    case ForestErrorKind::InvalidConstellation: return "InvalidConstellation";
    case ForestErrorKind::InvalidShape: return "InvalidShape";
    case ForestErrorKind::InvalidArmy: return "InvalidArmy";
    case ForestErrorKind::InvalidForest: return "InvalidForest";
    }
    return "?";
}

ForestError::ForestError(ForestErrorKind kind, const std::string & what) :
    std::invalid_argument(std::string(to_string(kind)) + ": " + what),
    _kind(kind)
{
}

std::string constellation_violation(const std::vector<StarSize> & sizes)
{
    const auto p = static_cast<int>(sizes.size());
    if (p % 2 == 0)
        return "star count " + std::to_string(p) + " is not odd";
    for (auto s : sizes)
        if (s < 0)
            return "negative star size " + std::to_string(s);
    const int r = (p + 1) / 2;
    for (int i = 1; i <= r - 1; ++i)
        if (sizes[i - 1] != sizes[p - i])
            return "sizes at positions " + std::to_string(i) + " and " + std::to_string(p - i + 1) + " differ";
    for (int i = 1; i <= r - 2; ++i)
        if (sizes[i - 1] > sizes[i])
            return "first half is not ascending at position " + std::to_string(i);
    return {};
}

Constellation::Constellation(std::vector<StarSize> sizes) :
    _sizes(std::move(sizes))
{
    if (auto why = constellation_violation(_sizes); ! why.empty())
        throw ForestError(ForestErrorKind::InvalidConstellation, why);
}

int Constellation::vertex_count() const
{
    return p() + edge_count();
}

int Constellation::edge_count() const
{
    return std::accumulate(_sizes.begin(), _sizes.end(), 0);
}

namespace {
    std::map<StarSize, int> multiplicities(const std::vector<StarSize> & sizes)
    {
        std::map<StarSize, int> result;
        for (auto s : sizes)
            ++result[s];
        return result;
    }
}

bool is_symmetric(std::vector<StarSize> sizes)
{
    auto mult = multiplicities(sizes);
    return std::count_if(mult.begin(), mult.end(), [](auto & kv) { return kv.second % 2 == 1; }) <= 1;
}

Constellation symmetric_order(std::vector<StarSize> sizes)
{
    if (sizes.size() % 2 == 0)
        throw ForestError(ForestErrorKind::NotOdd, std::to_string(sizes.size()) + " stars");
    for (auto s : sizes)
        if (s < 0)
            throw ForestError(ForestErrorKind::InvalidConstellation, "negative star size " + std::to_string(s));

    auto mult = multiplicities(sizes);
    std::vector<StarSize> half;
    StarSize center = -1;
    for (auto & [size, count] : mult) {
        if (count % 2 == 1) {
            if (center != -1)
                throw ForestError(ForestErrorKind::NotSymmetric,
                    "sizes " + std::to_string(center) + " and " + std::to_string(size) + " both occur an odd number of times");
            center = size;
        }
        half.insert(half.end(), static_cast<std::size_t>(count / 2), size);
    }

    std::vector<StarSize> ordered = half;
    ordered.push_back(center);
    ordered.insert(ordered.end(), half.rbegin(), half.rend());
    return Constellation(std::move(ordered));
}

CaterpillarShape::CaterpillarShape(int r, int s, std::vector<Step> steps) :
    _r(r),
    _s(s),
    _steps(std::move(steps))
{
    if (_r < 1 || _s < 1)
        throw ForestError(ForestErrorKind::InvalidShape, "part sizes must be positive");
    if (_r > _s) {
        std::swap(_r, _s);
        for (auto & step : _steps)
            step = (step == Step::AdvanceU) ? Step::AdvanceV : Step::AdvanceU;
    }
    auto us = std::count(_steps.begin(), _steps.end(), Step::AdvanceU);
    auto vs = std::count(_steps.begin(), _steps.end(), Step::AdvanceV);
    if (us != _r - 1 || vs != _s - 1)
        throw ForestError(ForestErrorKind::InvalidShape,
            "type (" + std::to_string(_r) + "," + std::to_string(_s) + ") needs " + std::to_string(_r - 1) + " U and "
                + std::to_string(_s - 1) + " V steps, got " + std::to_string(us) + " and " + std::to_string(vs));
}

CaterpillarShape CaterpillarShape::first(int r, int s)
{
    if (r > s)
        std::swap(r, s);
    if (r < 1)
        throw ForestError(ForestErrorKind::InvalidShape, "part sizes must be positive");
    std::vector<Step> steps(static_cast<std::size_t>(r - 1), Step::AdvanceU);
    steps.insert(steps.end(), static_cast<std::size_t>(s - 1), Step::AdvanceV);
    return CaterpillarShape(r, s, std::move(steps));
}

CaterpillarShape CaterpillarShape::parse(int r, int s, const std::string & text)
{
    std::vector<Step> steps;
    if (text != "-")
        for (char ch : text) {
            if (ch == 'U' || ch == 'u')
                steps.push_back(Step::AdvanceU);
            else if (ch == 'V' || ch == 'v')
                steps.push_back(Step::AdvanceV);
            else
                throw ForestError(ForestErrorKind::InvalidShape, std::string("unexpected step character '") + ch + "'");
        }
    return CaterpillarShape(r, s, std::move(steps));
}

std::string CaterpillarShape::to_string() const
{
    if (_steps.empty())
        return "-";
    std::string result;
    for (auto step : _steps)
        result += (step == Step::AdvanceU) ? 'U' : 'V';
    return result;
}

Army::Army(std::vector<CaterpillarShape> shapes) :
    _shapes(std::move(shapes))
{
    if (_shapes.size() % 2 == 0)
        throw ForestError(ForestErrorKind::InvalidArmy, std::to_string(_shapes.size()) + " caterpillars is not odd");
    for (auto & shape : _shapes)
        if (shape.r() != _shapes.front().r() || shape.s() != _shapes.front().s())
            throw ForestError(ForestErrorKind::InvalidArmy, "caterpillars of different types");
}

Army Army::uniform(int r, int s, int p)
{
    if (p < 1)
        throw ForestError(ForestErrorKind::InvalidArmy, "army needs at least one caterpillar");
    return Army(std::vector<CaterpillarShape>(static_cast<std::size_t>(p), CaterpillarShape::first(r, s)));
}

std::vector<int> ForestGraph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto & e : edges) {
        ++deg[e.u - 1];
        ++deg[e.v - 1];
    }
    return deg;
}

namespace {
    struct DisjointSets {
        std::vector<int> parent;
        explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n))
        {
            std::iota(parent.begin(), parent.end(), 0);
        }
        int find(int x)
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }
        bool unite(int a, int b)
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent[std::max(a, b)] = std::min(a, b);
            return true;
        }
    };
}

std::vector<int> ForestGraph::components() const
{
    DisjointSets sets(n);
    for (auto & e : edges)
        sets.unite(e.u - 1, e.v - 1);
    std::vector<int> result(static_cast<std::size_t>(n));
    std::map<int, int> ids;
    for (int v = 0; v < n; ++v) {
        auto [it, _] = ids.emplace(sets.find(v), static_cast<int>(ids.size()));
        result[v] = it->second;
    }
    return result;
}

std::string forest_violation(const ForestGraph & g)
{
    if (g.n < 0)
        return "negative vertex count";
    if (g.roles.size() != static_cast<std::size_t>(g.n))
        return "role table does not cover every vertex";
    if (g.m() > std::max(0, g.n - 1))
        return "too many edges for a forest";
    DisjointSets sets(g.n);
    for (auto & e : g.edges) {
        if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range";
        if (e.u == e.v)
            return "loop at " + std::to_string(e.u);
        if (! sets.unite(e.u - 1, e.v - 1))
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " closes a cycle";
    }
    return {};
}

ForestGraph make_forest(int n, std::vector<Edge> edges)
{
    ForestGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.roles.assign(static_cast<std::size_t>(std::max(n, 0)), VertexRole{});
    if (auto why = forest_violation(g); ! why.empty())
        throw ForestError(ForestErrorKind::InvalidForest, why);
    return g;
}

std::string staircase_violation(const ForestGraph & g)
{
    if (g.family != ForestFamily::Army)
        return {};
    if (g.edge_order.size() != g.edges.size() || g.edge_component.size() != g.edges.size())
        return "edge order table does not cover every edge";

    struct Position {
        int u_index, v_index;
    };
    std::map<int, std::map<int, Position>> by_component;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto a = g.role(g.edges[e].u), b = g.role(g.edges[e].v);
        if (a.kind == RoleKind::VPart)
            std::swap(a, b);
        if (a.kind != RoleKind::UPart || b.kind != RoleKind::VPart || a.component != b.component)
            return "edge " + std::to_string(e + 1) + " does not join u and v of one caterpillar";
        if (! by_component[a.component].emplace(g.edge_order[e], Position{a.index, b.index}).second)
            return "duplicate edge index in caterpillar " + std::to_string(a.component);
    }
    for (auto & [component, edges] : by_component) {
        auto & shape = g.caterpillar_shapes.at(static_cast<std::size_t>(component - 1));
        const int total = shape.r() + shape.s() - 1;
        if (static_cast<int>(edges.size()) != total || edges.begin()->first != 1 || edges.rbegin()->first != total)
            return "caterpillar " + std::to_string(component) + " edge indices are not 1.." + std::to_string(total);
        auto top = edges.at(total), bottom = edges.at(1);
        if (top.u_index != 1 || top.v_index != 1)
            return "caterpillar " + std::to_string(component) + ": highest edge index is not u1v1";
        if (bottom.u_index != shape.r() || bottom.v_index != shape.s())
            return "caterpillar " + std::to_string(component) + ": edge index 1 is not u_r v_s";
        for (int t = total; t > 1; --t) {
            auto from = edges.at(t), to = edges.at(t - 1);
            int du = to.u_index - from.u_index, dv = to.v_index - from.v_index;
            if (! ((du == 1 && dv == 0) || (du == 0 && dv == 1)))
                return "caterpillar " + std::to_string(component) + ": edges " + std::to_string(t) + " and "
                    + std::to_string(t - 1) + " do not advance one index";
        }
    }
    return {};
}

ForestGraph build_constellation(const Constellation & c)
{
    ForestGraph g;
    g.family = ForestFamily::Constellation;
    g.star_sizes = c.sizes();
    g.n = c.vertex_count();
    g.roles.reserve(static_cast<std::size_t>(g.n));
    for (int i = 1; i <= c.p(); ++i)
        g.roles.push_back({RoleKind::StarCenter, i, 0});
    int next_id = c.p() + 1;
    for (int i = 1; i <= c.p(); ++i)
        for (int j = 1; j <= c.sizes()[i - 1]; ++j) {
            g.roles.push_back({RoleKind::StarLeaf, i, j});
            g.edges.push_back({i, next_id++});
            g.edge_component.push_back(i);
        }
    return g;
}

namespace {
    void append_caterpillar(ForestGraph & g, const CaterpillarShape & shape, int component)
    {
        const int base = g.n;
        const int r = shape.r(), s = shape.s();
        for (int j = 1; j <= r; ++j)
            g.roles.push_back({RoleKind::UPart, component, j});
        for (int j = 1; j <= s; ++j)
            g.roles.push_back({RoleKind::VPart, component, j});
        g.n += r + s;

        int ui = 1, vi = 1;
        auto emit = [&](int t) {
            g.edges.push_back({base + ui, base + r + vi});
            g.edge_order.push_back(r + s - t);
            g.edge_component.push_back(component);
        };
        emit(1);
        int t = 1;
        for (auto step : shape.steps()) {
            (step == Step::AdvanceU ? ui : vi) += 1;
            emit(++t);
        }
    }
}

ForestGraph build_caterpillar(const CaterpillarShape & shape)
{
    return build_army(Army({shape}));
}

ForestGraph build_army(const Army & a)
{
    ForestGraph g;
    g.family = ForestFamily::Army;
    g.caterpillar_shapes = a.shapes();
    for (int i = 1; i <= a.p(); ++i)
        append_caterpillar(g, a.shapes()[i - 1], i);
    return g;
}

ForestGraph build_path(int n)
{
    if (n < 1)
        throw ForestError(ForestErrorKind::InvalidForest, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    return make_forest(n, std::move(edges));
}

namespace {
    // Partitions of total into exactly `parts` parts, each <= cap, non-increasing.
    void partitions(int total, int parts, int cap, std::vector<int> & current, std::vector<std::vector<int>> & out)
    {
        if (parts == 0) {
            if (total == 0)
                out.push_back(current);
            return;
        }
        for (int part = std::min(cap, total - (parts - 1)); part >= 1; --part) {
            if (part * parts < total)
                break;
            current.push_back(part);
            partitions(total - part, parts - 1, part, current, out);
            current.pop_back();
        }
    }
}

std::vector<OddConstellation> enumerate_odd_constellations(int max_n)
{
    std::vector<OddConstellation> result;
    for (int n = 1; n <= max_n; ++n)
        for (int p = 1; p <= n; p += 2) {
            // Star vertex counts form a partition of n into p parts.
            std::vector<std::vector<int>> found;
            std::vector<int> current;
            partitions(n, p, n, current, found);
            std::vector<std::vector<StarSize>> multisets;
            for (auto & parts : found) {
                std::vector<StarSize> sizes;
                for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                    sizes.push_back(*it - 1);
                multisets.push_back(std::move(sizes));
            }
            std::sort(multisets.begin(), multisets.end());
            for (auto & sizes : multisets) {
                bool symmetric = is_symmetric(sizes);
                result.push_back({std::move(sizes), symmetric, n});
            }
        }
    return result;
}

std::vector<CaterpillarShape> enumerate_caterpillar_shapes(int r, int s)
{
    if (r > s)
        std::swap(r, s);
    if (r < 1)
        throw ForestError(ForestErrorKind::InvalidShape, "part sizes must be positive");
    std::vector<Step> steps(static_cast<std::size_t>(r - 1), Step::AdvanceU);
    steps.insert(steps.end(), static_cast<std::size_t>(s - 1), Step::AdvanceV);
    std::vector<CaterpillarShape> result;
    do
        result.emplace_back(r, s, steps);
    while (std::next_permutation(steps.begin(), steps.end()));
    return result;
}

} // namespace edgemagic
