#pragma once

// File formats. All vertex ids are 1-based.
//
// Forest:
//   {"n": 8, "edges": [[1,4],[2,5],...],
//    "roles": {"family": "constellation", "sizes": [2,1,2],
//              "vertices": {"1": "c1", "4": "l1.1", ...}}}
//   Army roles carry "type": [r, s], "shapes": ["UUVVV", ...] (one staircase
//   per caterpillar, "-" for the empty one), vertex tags "u<i>.<j>" and
//   "v<i>.<j>", and "edge_order": {"u-v": t} naming each edge e_{it}.
//   Plain forests use "family": "plain" (or omit "roles").
//
// Labeling:
//   {"kind": "super-edge-magic", "magic_constant": 8,
//    "vertex_labels": {"1": 1, ...}, "edge_labels": {"1-2": 5, ...}}
//   Edge keys are "u-v" with u < v; magic_constant is null for edgeless graphs.
//
// Objects are written with sorted keys, so equal inputs give identical bytes.

#include <edgemagic/forest.hpp>
#include <edgemagic/labeling.hpp>
#include <edgemagic/search.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace edgemagic {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json forest_to_json(const ForestGraph & g);
/// Throws InputError on malformed documents, including role metadata that
/// does not match the edge list.
ForestGraph forest_from_json(const nlohmann::json & doc);

nlohmann::json labeling_to_json(const ForestGraph & g, const TotalLabeling & t, const std::string & kind);
/// Throws InputError when the labels do not cover g's vertices and edges exactly.
TotalLabeling labeling_from_json(const ForestGraph & g, const nlohmann::json & doc);

nlohmann::json report_to_json(const ForestGraph & g, const SearchReport & report);
/// One line of the scan stream: {sizes, symmetric, outcome, k, nodes, millis, ...}.
nlohmann::json scan_record_to_json(const ScanRecord & record);

/// Vertex labels inside the nodes, edge labels on the edges; nodes in id order.
std::string export_dot(const ForestGraph & g, const TotalLabeling & t);

std::string vertex_tag(const VertexRole & role);

} // namespace edgemagic
