#ifndef FOLDCUSP_BUNDLES_HPP
#define FOLDCUSP_BUNDLES_HPP

#include "foldcusp/angles.hpp"
#include "foldcusp/homology.hpp"
#include "foldcusp/multicurve.hpp"

namespace foldcusp {

/// A rank-2 vector bundle over a triangulated surface: one chart per face,
/// an exact orthogonal transition with angle lift across every edge.
/// trans[e][0] maps occ0's chart to occ1's chart, trans[e][1] the reverse;
/// the underlying matrices are mutual inverses. Lift asymmetry of a pair
/// encodes curvature concentrated on that edge (used by cusp regluings).
struct DiscreteBundle {
    SurfacePtr base;
    std::vector<std::array<LiftedOrtho, 2>> trans;

    const LiftedOrtho& transition(int edge, int to_occ) const {
        return trans[edge][to_occ == 1 ? 0 : 1];
    }
};

/// Twisted Euler number: an integer magnitude when w1(E) = w1(M), a mod-2
/// value otherwise.
struct EulerNumber {
    bool is_bit = false;
    long long value = 0;
    bool operator==(const EulerNumber& o) const {
        return is_bit == o.is_bit && value == o.value;
    }
};

struct BundleInvariants {
    Z2Class1 w1_on_basis;
    EulerNumber euler;
};

/// The tangent bundle modeled on equilateral charts; transitions align the
/// shared edge of adjacent faces. Requires a triangulated base.
DiscreteBundle discrete_tangent(const SurfacePtr& m);

/// The bundle with identity transitions everywhere.
DiscreteBundle trivial_bundle(const SurfacePtr& m);

/// Reglue along C with the reflection fixing the direction of C: every
/// transition across a curve edge is post-composed with that reflection.
/// Models the fold-modified tangent bundle.
DiscreteBundle fold_modify(const DiscreteBundle& b, const Multicurve& c);

/// Full-turn regluings near each cusp, on the face its direction points
/// into. `variant` selects one of the two equivalent loop conventions.
DiscreteBundle cusp_modify(const DiscreteBundle& b, const Multicurve& c,
                           const std::vector<CuspSpec>& cusps, int variant);

/// w1 by transition-determinant holonomy on the basis cycles; twisted Euler
/// number by trivializing over a dual spanning tree and summing per-vertex
/// winding defects, signs transported through the combined local system.
BundleInvariants bundle_invariants(const DiscreteBundle& b, const HomologyBasis& h);
BundleInvariants bundle_invariants(const DiscreteBundle& b);

/// Rank-2 bundles over a surface are isomorphic iff their w1 and twisted
/// Euler numbers agree.
bool bundles_isomorphic(const DiscreteBundle& b1, const DiscreteBundle& b2);

}  // namespace foldcusp

#endif
