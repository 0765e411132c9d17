#pragma once

// Standard super edge-magic labelings of odd symmetric constellations.
//
// The construction peels one leaf off every non-trivial star per layer. It
// is evaluated bottom-up: starting from the centers (f(c_i) = i), each layer
// shifts every previously placed leaf label up by p' and gives the layer's p'
// new leaves the labels p+1..p+p' cyclically, starting at the l-th new leaf
// where l = ceil((p'+1)/2). Within a star, the highest-id leaf is peeled
// first, so it receives its label in the outermost layer.

#include <edgemagic/forest.hpp>
#include <edgemagic/labeling.hpp>

#include <vector>

namespace edgemagic {

struct PeelLayer {
    /// Number of stars still non-trivial at this layer.
    int nontrivial = 0;
    /// ceil((nontrivial + 1) / 2)
    int ell = 0;
    /// 1-based star indices losing a leaf, strictly increasing.
    std::vector<int> stars;
    /// Vertex id of the removed leaf of each star in `stars`.
    std::vector<int> leaves;
    /// Label each removed leaf gets within the constellation where this layer
    /// is outermost; always a permutation of p+1..p+nontrivial.
    std::vector<int> local_labels;
};

/// Layers in peel order: layers.front() is removed first.
struct PeelTrace {
    std::vector<PeelLayer> layers;
};

struct StandardVertexLabeling {
    ForestGraph graph;
    VertexLabeling labeling;
    PeelTrace trace;
};

StandardVertexLabeling standard_vertex_labeling(const Constellation & c);

/// The extension of standard_vertex_labeling; its magic constant is 2n + r + 1.
TotalLabeling standard_labeling(const Constellation & c);

int predicted_magic_constant(const Constellation & c);

/// Sums f(c_i) + f(u_j) over one layer's new edges, in star order.
std::vector<int> layer_sums(const PeelLayer & layer);

} // namespace edgemagic
