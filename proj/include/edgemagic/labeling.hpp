#pragma once

// Total labelings and their verifiers, plus the consecutive-vertex-sum
// characterization of super edge-magic labelings and its forced extension.

#include <edgemagic/forest.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgemagic {

/// labels[id - 1] is the label of vertex id.
struct VertexLabeling {
    std::vector<int> labels;

    int operator()(int id) const { return labels.at(static_cast<std::size_t>(id - 1)); }
};

/// vertex_labels[id - 1]; edge_labels[e] is the label of g.edges[e].
struct TotalLabeling {
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;
    std::optional<int> magic_constant;

    VertexLabeling vertices() const { return {vertex_labels}; }
    friend bool operator==(const TotalLabeling &, const TotalLabeling &) = default;
};

enum class LabelingError {
    None,
    CoverageMismatch,
    NotBijective,
    NotConstant,
    VerticesNotLow,
    NotConsecutive,
};

const char * to_string(LabelingError error);

/// Outcome of a verification. On failure the witness fields name what broke:
/// for NotConstant the two edges with different sums, for NotBijective the
/// offending label (and the element that carried it first, if any), for
/// VerticesNotLow the vertex and its label.
struct Verdict {
    LabelingError error = LabelingError::None;
    /// Absent for edgeless graphs, which are vacuously (super) edge-magic.
    std::optional<int> magic_constant;
    std::string message;

    std::optional<int> first_edge, second_edge; // indices into g.edges
    std::optional<int> vertex;                  // vertex id
    std::optional<int> label;

    bool ok() const noexcept { return error == LabelingError::None; }
    explicit operator bool() const noexcept { return ok(); }
};

class LabelingException : public std::runtime_error {
public:
    LabelingException(LabelingError error, const std::string & what);
    LabelingError error() const noexcept { return _error; }

private:
    LabelingError _error;
};

Verdict verify_edge_magic(const ForestGraph & g, const TotalLabeling & t);

/// verify_edge_magic plus f(V) = {1..n}.
Verdict verify_super_edge_magic(const ForestGraph & g, const TotalLabeling & t);

/// L = {f(u) + f(v) : uv in E}.
struct SumSet {
    std::vector<int> sums; // sorted, distinct
    std::optional<int> min_sum;
    /// |L| = m and max - min = m - 1 (vacuously true when m = 0). False when
    /// the vertex labeling is not a bijection onto 1..n.
    bool consecutive = false;
};

SumSet vertex_sum_check(const ForestGraph & g, const VertexLabeling & vl);

/// Edge uv with vertex sum s gets label min(L) + n + m - s, which makes every
/// edge sum to k = min(L) + n + m. Throws LabelingException(NotConsecutive).
TotalLabeling extend_vertex_labeling(const ForestGraph & g, const VertexLabeling & vl);

/// Restriction of a labeling to one component of an army or constellation,
/// re-indexed as a standalone single-component graph.
std::pair<ForestGraph, TotalLabeling> restrict_to_component(const ForestGraph & g, const TotalLabeling & t, int component);

/// "u-v" with u < v, as used for edge keys in the labeling JSON.
std::string edge_key(const Edge & e);

} // namespace edgemagic
