#include <edgemagic/caterpillar_labeler.hpp>

#include <set>

namespace edgemagic {

ArmyLabelingParams::ArmyLabelingParams(int r_, int s_, int p_) :
    r(r_),
    s(s_),
    p(p_)
{
    if (r < 1 || r > s)
        throw ForestError(ForestErrorKind::InvalidArmy, "type must satisfy 1 <= r <= s");
    if (p < 1 || p % 2 == 0)
        throw ForestError(ForestErrorKind::InvalidArmy, "caterpillar count must be odd");
}

int ArmyLabelingParams::u_label(int i, int j) const noexcept
{
    return j + u_block(i) * x();
}

int ArmyLabelingParams::v_label(int i, int j) const noexcept
{
    return (2 * r + s - 1) + j + v_block(i) * x();
}

int ArmyLabelingParams::e_label(int i, int j) const noexcept
{
    return r + j + e_block(i) * x();
}

TotalLabeling army_labeling(const Army & a)
{
    const ArmyLabelingParams params(a.r(), a.s(), a.p());
    const auto g = build_army(a);

    TotalLabeling t;
    t.vertex_labels.reserve(static_cast<std::size_t>(g.n));
    for (auto & role : g.roles)
        t.vertex_labels.push_back(role.kind == RoleKind::UPart ? params.u_label(role.component, role.index)
                                                               : params.v_label(role.component, role.index));
    t.edge_labels.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        t.edge_labels.push_back(params.e_label(g.edge_component[e], g.edge_order[e]));
    t.magic_constant = army_magic_constant(a.r(), a.s(), a.p());
    return t;
}

int army_magic_constant(int r, int s, int p)
{
    const int x = 2 * (r + s) - 1;
    return 4 * r + 2 * s + ((3 * p - 3) / 2) * x;
}

bool is_well_behaved(const ForestGraph & cat, const TotalLabeling & t)
{
    if (t.vertex_labels.size() != static_cast<std::size_t>(cat.n) || t.edge_labels.size() != cat.edges.size()
        || cat.edge_order.size() != cat.edges.size() || cat.caterpillar_shapes.size() != 1)
        throw LabelingException(LabelingError::CoverageMismatch, "labeling does not cover a single caterpillar");

    std::set<int> seen;
    for (int label : t.vertex_labels)
        if (! seen.insert(label).second)
            return false;
    for (int label : t.edge_labels)
        if (! seen.insert(label).second)
            return false;

    const int r = cat.caterpillar_shapes.front().r(), s = cat.caterpillar_shapes.front().s();
    std::vector<int> u(static_cast<std::size_t>(r), 0), v(static_cast<std::size_t>(s), 0), e(static_cast<std::size_t>(r + s - 1), 0);
    for (int id = 1; id <= cat.n; ++id) {
        auto & role = cat.role(id);
        (role.kind == RoleKind::UPart ? u : v).at(static_cast<std::size_t>(role.index - 1)) = t.vertex_labels[id - 1];
    }
    for (std::size_t k = 0; k < cat.edges.size(); ++k)
        e.at(static_cast<std::size_t>(cat.edge_order[k] - 1)) = t.edge_labels[k];

    auto run = [](const std::vector<int> & labels) {
        for (std::size_t k = 1; k < labels.size(); ++k)
            if (labels[k] != labels[k - 1] + 1)
                return false;
        return true;
    };
    return run(u) && run(v) && run(e);
}

} // namespace edgemagic
