#include <edgemagic/constellation_labeler.hpp>

#include <algorithm>

namespace edgemagic {

StandardVertexLabeling standard_vertex_labeling(const Constellation & c)
{
    StandardVertexLabeling result{build_constellation(c), {}, {}};
    const auto & sizes = c.sizes();
    const int p = c.p();

    // First leaf id of each star.
    std::vector<int> leaf_base(static_cast<std::size_t>(p));
    for (int i = 0, next = p + 1; i < p; ++i) {
        leaf_base[i] = next;
        next += sizes[i];
    }

    const int depth = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    auto & layers = result.trace.layers;
    layers.resize(static_cast<std::size_t>(depth));
    for (int t = 1; t <= depth; ++t) {
        auto & layer = layers[t - 1];
        for (int i = 1; i <= p; ++i)
            if (sizes[i - 1] >= t) {
                layer.stars.push_back(i);
                // Layer t removes the t-th highest leaf of the star.
                layer.leaves.push_back(leaf_base[i - 1] + sizes[i - 1] - t);
            }
        const int count = static_cast<int>(layer.stars.size());
        layer.nontrivial = count;
        layer.ell = (count + 2) / 2;
        for (int j = 1; j <= count; ++j)
            layer.local_labels.push_back(j >= layer.ell ? p + j - layer.ell + 1 : (p + count - layer.ell + 1) + j);
    }

    // A leaf placed at layer t is shifted once by every layer peeled before it.
    auto & labels = result.labeling.labels;
    labels.assign(static_cast<std::size_t>(result.graph.n), 0);
    for (int i = 1; i <= p; ++i)
        labels[i - 1] = i;
    int shift = 0;
    for (auto & layer : layers) {
        for (std::size_t j = 0; j < layer.leaves.size(); ++j)
            labels[layer.leaves[j] - 1] = layer.local_labels[j] + shift;
        shift += layer.nontrivial;
    }
    return result;
}

TotalLabeling standard_labeling(const Constellation & c)
{
    auto standard = standard_vertex_labeling(c);
    return extend_vertex_labeling(standard.graph, standard.labeling);
}

int predicted_magic_constant(const Constellation & c)
{
    return 2 * c.vertex_count() + c.r() + 1;
}

std::vector<int> layer_sums(const PeelLayer & layer)
{
    std::vector<int> sums;
    for (std::size_t j = 0; j < layer.stars.size(); ++j)
        sums.push_back(layer.stars[j] + layer.local_labels[j]);
    return sums;
}

} // namespace edgemagic
