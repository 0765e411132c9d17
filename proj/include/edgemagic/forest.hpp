#pragma once

// Forest model: stars, constellations, caterpillars and armies, materialized
// as ForestGraph with fixed, deterministic vertex-id schemes.
//
// Vertex ids are 1-based everywhere.
//
//   constellation: centers c_1..c_p get ids 1..p, then the leaves of S_1,
//                  S_2, ... in star order (leaf j of S_i is role StarLeaf(i, j)).
//   army:          caterpillar C_i occupies a contiguous block; u_{i1}..u_{ir}
//                  come first, then v_{i1}..v_{is}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgemagic {

enum class ForestErrorKind {
    NotOdd,
    NotSymmetric,
    InvalidConstellation,
    InvalidShape,
    InvalidArmy,
    InvalidForest,
};

const char * to_string(ForestErrorKind kind);

class ForestError : public std::invalid_argument {
public:
    ForestError(ForestErrorKind kind, const std::string & what);
    ForestErrorKind kind() const noexcept { return _kind; }

private:
    ForestErrorKind _kind;
};

/// Number of edges of a star; 0 is the trivial star (an isolated vertex).
using StarSize = int;

/// An odd constellation in symmetric order: mirrored halves, ascending first
/// half, the odd-multiplicity size at the center position r (1-based).
class Constellation {
public:
    /// Validates the symmetric-order invariants; throws ForestError.
    explicit Constellation(std::vector<StarSize> sizes);

    const std::vector<StarSize> & sizes() const noexcept { return _sizes; }
    int p() const noexcept { return static_cast<int>(_sizes.size()); }
    int r() const noexcept { return (p() + 1) / 2; }
    StarSize center_size() const { return _sizes[r() - 1]; }
    int vertex_count() const;
    int edge_count() const;

    friend bool operator==(const Constellation &, const Constellation &) = default;

private:
    std::vector<StarSize> _sizes;
};

/// Checks the Constellation invariants without throwing. Empty string means valid.
std::string constellation_violation(const std::vector<StarSize> & sizes);

/// True iff at most one size occurs an odd number of times.
bool is_symmetric(std::vector<StarSize> sizes);

/// Arranges a multiset of star sizes into symmetric order.
/// Throws ForestError(NotOdd) or ForestError(NotSymmetric).
Constellation symmetric_order(std::vector<StarSize> sizes);

enum class Step : std::uint8_t { AdvanceU, AdvanceV };

/// Staircase encoding of a type-(r, s) caterpillar. Staircase edge t = 1 is
/// u_1 v_1; each step moves exactly one of the two indices forward, so the
/// last staircase edge is u_r v_s.
class CaterpillarShape {
public:
    /// Shapes given with r > s are normalized by swapping parts (and with them
    /// every step's direction). Throws ForestError(InvalidShape).
    CaterpillarShape(int r, int s, std::vector<Step> steps);

    /// Every AdvanceU before every AdvanceV.
    static CaterpillarShape first(int r, int s);

    /// Parses a string over {'U','V'} (or "-" for the empty path).
    static CaterpillarShape parse(int r, int s, const std::string & steps);
    std::string to_string() const;

    int r() const noexcept { return _r; }
    int s() const noexcept { return _s; }
    const std::vector<Step> & steps() const noexcept { return _steps; }

    friend bool operator==(const CaterpillarShape &, const CaterpillarShape &) = default;

private:
    int _r;
    int _s;
    std::vector<Step> _steps;
};

/// An odd uniform army: p caterpillars sharing one type (r, s).
class Army {
public:
    explicit Army(std::vector<CaterpillarShape> shapes);
    /// p copies of CaterpillarShape::first(r, s).
    static Army uniform(int r, int s, int p);

    int r() const noexcept { return _shapes.front().r(); }
    int s() const noexcept { return _shapes.front().s(); }
    int p() const noexcept { return static_cast<int>(_shapes.size()); }
    const std::vector<CaterpillarShape> & shapes() const noexcept { return _shapes; }

private:
    std::vector<CaterpillarShape> _shapes;
};

enum class RoleKind : std::uint8_t { Plain, StarCenter, StarLeaf, UPart, VPart };

/// component is the star / caterpillar index i, index the within-component
/// index j (leaf ordinal, u_{ij} or v_{ij}); both 1-based, 0 for Plain.
struct VertexRole {
    RoleKind kind = RoleKind::Plain;
    int component = 0;
    int index = 0;

    friend bool operator==(const VertexRole &, const VertexRole &) = default;
};

struct Edge {
    int u;
    int v;

    friend bool operator==(const Edge &, const Edge &) = default;
};

enum class ForestFamily : std::uint8_t { Plain, Constellation, Army };

struct ForestGraph {
    int n = 0;
    std::vector<Edge> edges;
    /// roles[id - 1]
    std::vector<VertexRole> roles;
    /// For armies: edge_order[e] = t such that edges[e] is e_{it}. Empty otherwise.
    std::vector<int> edge_order;
    /// Component index of edges[e] (army and constellation); empty otherwise.
    std::vector<int> edge_component;

    ForestFamily family = ForestFamily::Plain;
    std::vector<StarSize> star_sizes;                 // Constellation family
    std::vector<CaterpillarShape> caterpillar_shapes; // Army family

    int m() const noexcept { return static_cast<int>(edges.size()); }
    const VertexRole & role(int id) const { return roles.at(static_cast<std::size_t>(id - 1)); }
    std::vector<int> degrees() const;
    /// Component id (0-based, in order of lowest vertex id) per vertex; index id - 1.
    std::vector<int> components() const;
};

/// A plain forest from an edge list; throws ForestError(InvalidForest) when the
/// edges leave the range 1..n, repeat, form loops, or close a cycle.
ForestGraph make_forest(int n, std::vector<Edge> edges);

/// Empty string when g is a valid forest (ranges, no loops, acyclic, m <= n - 1).
std::string forest_violation(const ForestGraph & g);

/// Empty string when every army component's edge order is a monotone staircase
/// from e_{i(r+s-1)} = u_{i1}v_{i1} down to e_{i1} = u_{ir}v_{is}.
std::string staircase_violation(const ForestGraph & g);

ForestGraph build_constellation(const Constellation & c);
ForestGraph build_caterpillar(const CaterpillarShape & shape);
ForestGraph build_army(const Army & a);
/// Path on n vertices 1 - 2 - ... - n.
ForestGraph build_path(int n);

struct OddConstellation {
    std::vector<StarSize> sizes; // non-decreasing
    bool symmetric;
    int vertex_count;
};

/// Every multiset of star sizes with odd cardinality and p + sum(sizes) <= max_n,
/// each once; ordered by vertex count, then star count, then sizes.
std::vector<OddConstellation> enumerate_odd_constellations(int max_n);

/// All C(r+s-2, r-1) step sequences. Reflections are not identified.
std::vector<CaterpillarShape> enumerate_caterpillar_shapes(int r, int s);

} // namespace edgemagic
