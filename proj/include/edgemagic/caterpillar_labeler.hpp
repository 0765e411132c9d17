#pragma once

// Edge-magic labelings of odd uniform armies of caterpillars.
//
// With x = 2(r+s) - 1 labels per caterpillar, caterpillar C_i receives
//
//   f(u_ij) = j + (i-1) x
//   f(v_ij) = (2r+s-1) + j + ((p-1)/2 + i - 1 mod p) x
//   f(e_ij) = r + j + (2p - 2i + 1 mod p) x
//
// and every edge sums to 4r + 2s + ((3p-3)/2) x. Label values depend only on
// (r, s, p) and the indices; the staircase shape decides which vertex pair
// each e_ij joins.

#include <edgemagic/forest.hpp>
#include <edgemagic/labeling.hpp>

namespace edgemagic {

struct ArmyLabelingParams {
    int r, s, p;

    /// Throws ForestError(InvalidArmy) unless 1 <= r <= s and p is odd and positive.
    ArmyLabelingParams(int r, int s, int p);

    int x() const noexcept { return 2 * (r + s) - 1; }
    int u_label(int i, int j) const noexcept;
    int v_label(int i, int j) const noexcept;
    int e_label(int i, int j) const noexcept;

    /// The three per-caterpillar block multipliers of x.
    int u_block(int i) const noexcept { return i - 1; }
    int v_block(int i) const noexcept { return ((p - 1) / 2 + i - 1) % p; }
    int e_block(int i) const noexcept { return (2 * p - 2 * i + 1) % p; }
};

/// Labels build_army(a) (same vertex ids and edge order).
TotalLabeling army_labeling(const Army & a);

int army_magic_constant(int r, int s, int p);

/// True iff all labels are distinct and u_1..u_r, v_1..v_s, e_1..e_{r+s-1}
/// each carry a run of consecutive integers in index order. `cat` must be a
/// single caterpillar (Army family, one component). Throws
/// LabelingException(CoverageMismatch) when t does not cover cat exactly.
bool is_well_behaved(const ForestGraph & cat, const TotalLabeling & t);

} // namespace edgemagic
