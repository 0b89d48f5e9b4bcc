#ifndef FOLDCUSP_CURVE_MOVES_HPP
#define FOLDCUSP_CURVE_MOVES_HPP

#include "foldcusp/homology.hpp"
#include "foldcusp/multicurve.hpp"
#include "foldcusp/surface.hpp"

namespace foldcusp {

/// Closed walks on a surface, not necessarily embedded; crossings are the
/// vertices where two strands pass transversally.
struct CurveDiagram {
    SurfacePtr surface;
    std::vector<Walk> walks;
};

/// Curves produced by rewriting moves; they live on a subdivision of the
/// input surface, together with the carried homology basis for class
/// verification there.
struct RealizedCurves {
    SurfacePtr surface;
    std::vector<Walk> components;
    std::vector<Walk> carried_basis;

    Multicurve to_multicurve() const { return Multicurve{surface, components}; }
};

/// Number of transversal crossings of the diagram's strands.
int crossing_count(const CurveDiagram& d);

/// Resolve all crossings into an embedded multicurve of the same GF(2)
/// class. Already-embedded input is returned unchanged on the same surface.
RealizedCurves resolve_crossings(const CurveDiagram& d);

/// Join two components of an embedded multicurve by surgery along a
/// corridor of faces; the class is preserved and the result stays on the
/// same surface. Throws when no corridor exists.
Multicurve connect_components(const Multicurve& c);

/// Disjoint embedded simple closed curves realizing the given independent,
/// pairwise cup-orthogonal classes.
RealizedCurves realize_classes(const SurfacePtr& m, const std::vector<Z2Class1>& classes);

/// For a nonorientable surface: classes b_1..b_g with b_i^2 = 1,
/// b_i cup b_j = 0, and sum b_i = w1. Crosscap core curves are one-sided,
/// so the self-cup is 1 unconditionally, even on surfaces of even
/// nonorientable genus where w2 = 0 (the Klein bottle being the smallest).
std::vector<Z2Class1> crosscap_basis(const HomologyBasis& h);

}  // namespace foldcusp

#endif
