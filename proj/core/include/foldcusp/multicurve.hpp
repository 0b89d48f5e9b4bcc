#ifndef FOLDCUSP_MULTICURVE_HPP
#define FOLDCUSP_MULTICURVE_HPP

#include <optional>

#include "foldcusp/homology.hpp"
#include "foldcusp/surface.hpp"

namespace foldcusp {

/// Disjoint embedded cycles in the 1-skeleton of a surface.
struct Multicurve {
    SurfacePtr surface;
    std::vector<Walk> components;

    std::size_t size() const { return components.size(); }
};

/// A marked cusp point: a position along one component plus the adjacent
/// face its direction vector points into.
struct CuspSpec {
    int component = 0;
    int edge_index = 0;
    int side_face = 0;
};

/// Validates walks into a Multicurve. Errors: non-closed walk, repeated
/// edge, non-embedded component, components sharing a vertex, empty input.
Multicurve embed_multicurve(const SurfacePtr& m, const std::vector<Walk>& walks);

struct BoundaryCircle {
    int curve_component = -1;
    int side = -1;  // occurrence tag of the smallest edge copy; -1 if one-sided
    int length = 0;
};

struct CutComponent {
    int chi = 0;
    std::vector<int> faces;
    std::vector<BoundaryCircle> boundary;
};

struct CutResult {
    std::vector<CutComponent> components;
    std::vector<int> face_component;  // [face] -> index into components
    int total_boundary_circles = 0;
};

/// Cut the surface along the multicurve; chi is additive over the result.
CutResult cut_along(const SurfacePtr& m, const Multicurve& c);

/// The M+/M- decomposition when C separates.
struct SplitData {
    int chi_plus = 0, chi_minus = 0;
    int n_plus = 0, n_minus = 0;
    int plus_label_face = 0;  // face whose side is labeled M+
};

/// Everything Theorems 1 and 2 consume about (M, C, P).
struct CurveSummary {
    Z2Class1 c_class;
    bool c_is_zero = false;
    bool c_equals_w1 = false;
    int c_squared = 0;
    int one_sided_count = 0;
    int p_count = 0;
    std::optional<SplitData> split;
    int chi_M = 0;
    bool orientable_M = true;
    int w2_M = 0;
    int n_components = 0;
};

CurveSummary curve_summary(const HomologyBasis& h, const Multicurve& c,
                           const std::vector<CuspSpec>& cusps);

bool component_one_sided(const Multicurve& c, int idx);

}  // namespace foldcusp

#endif
