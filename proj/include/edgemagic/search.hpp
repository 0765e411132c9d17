#pragma once

// Exhaustive backtracking search for (super) edge-magic labelings of small
// forests, and the odd-constellation scan built on it.
//
// The search fixes a magic constant k, assigns vertex labels, and derives each
// edge label as k - f(u) - f(v) as soon as both endpoints are labeled. In
// super mode vertex labels are drawn from 1..n only, so the search runs over
// vertex bijections and the derived edge labels must land in n+1..n+m (the
// consecutive-sum characterization). Candidate constants are tried in
// ascending order.
//
// Variable order: descending degree, then descending component size, then
// lowest id. Values ascend. Symmetry breaking (never changes a verdict):
// pendant leaves sharing a neighbor take increasing labels by id, and star
// components of equal size (isolated vertices and single edges included) are
// ordered by the label of their center.

#include <edgemagic/forest.hpp>
#include <edgemagic/labeling.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgemagic {

enum class SearchMode { EdgeMagic, SuperEdgeMagic };

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::chrono::milliseconds max_time{60'000};
    SearchMode mode = SearchMode::SuperEdgeMagic;
};

struct SearchOptions {
    /// Worker threads; the tree is split at the top branching level.
    int jobs = 1;
    /// Decide every candidate constant instead of stopping at the first hit.
    bool all_constants = false;
    /// Restrict the search to one magic constant.
    std::optional<int> only_constant;
    bool symmetry_breaking = true;
};

enum class SearchOutcome { Found, ExhaustedInfeasible, BudgetExceeded };

const char * to_string(SearchOutcome outcome);

struct ConstantOutcome {
    int k;
    SearchOutcome outcome;
    std::uint64_t nodes;
};

struct SearchReport {
    SearchOutcome outcome = SearchOutcome::ExhaustedInfeasible;
    /// The labeling found for the smallest feasible constant tried.
    std::optional<TotalLabeling> labeling;
    std::uint64_t nodes_visited = 0;
    /// One entry per constant that was attempted, ascending in k.
    std::vector<ConstantOutcome> per_constant;
    double millis = 0.0;

    std::optional<int> magic_constant() const { return labeling ? labeling->magic_constant : std::nullopt; }
    std::vector<int> feasible_constants() const;
};

/// Inclusive interval of magic constants not excluded by weighting arguments:
/// m k equals the sum of all edge labels plus deg(v) f(v) over the vertices,
/// which is bounded by pairing the largest weights with the smallest labels
/// and vice versa. In super mode the vertex labels are fixed to 1..n and the
/// minimal vertex sum lies in 3..2n-m. Empty (first > second) when nothing is
/// feasible. Undefined for edgeless graphs.
std::pair<int, int> magic_constant_bounds(const ForestGraph & g, SearchMode mode);

SearchReport search_labeling(const ForestGraph & g, const SearchBudget & budget, const SearchOptions & options = {});

SearchReport search_super_edge_magic(const ForestGraph & g, SearchBudget budget, const SearchOptions & options = {});
SearchReport search_edge_magic(const ForestGraph & g, SearchBudget budget, const SearchOptions & options = {});

struct ScanRecord {
    std::vector<StarSize> sizes;
    bool symmetric = false;
    int vertex_count = 0;
    SearchOutcome outcome = SearchOutcome::ExhaustedInfeasible;
    std::optional<int> magic_constant;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    /// Symmetric instances: the constructive labeling's constant, and whether
    /// it verified and the oracle confirmed that constant feasible.
    std::optional<int> constructive_constant;
    std::optional<bool> agrees;
    /// Infeasible instances are re-searched without symmetry breaking.
    std::optional<bool> reverified_infeasible;
};

/// Searches every odd constellation with at most max_n vertices for a super
/// edge-magic labeling. Throws std::invalid_argument when max_n exceeds guard.
std::vector<ScanRecord> scan_lee_kong(
    int max_n, const SearchBudget & budget, const SearchOptions & options = {}, int guard = 12);

} // namespace edgemagic
