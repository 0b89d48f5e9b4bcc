#ifndef FOLDCUSP_HOMOLOGY_HPP
#define FOLDCUSP_HOMOLOGY_HPP

#include "foldcusp/gf2.hpp"
#include "foldcusp/surface.hpp"

namespace foldcusp {

/// A class in H^1(M; Z2), stored by its values on the surface's homology
/// basis cycles. Condition checks and curve classes all live in these
/// coordinates.
using Z2Class1 = Gf2Vec;

/// Deterministic basis of H_1(M; Z2) with the data Theorems 1 and 2 consume.
struct HomologyBasis {
    SurfacePtr surface;
    std::vector<Walk> basis_cycles;  // embedded graph cycles
    Gf2Mat cup_matrix;               // pairwise intersection numbers
    Gf2Mat cup_inverse;
    Z2Class1 w1_vector;              // w1(M) evaluated on the basis cycles
    int w2_bit = 0;                  // chi mod 2

    std::size_t rank() const { return basis_cycles.size(); }

    /// Class of a closed walk (or a union of walks) by intersection
    /// parities against the basis cycles.
    Z2Class1 class_of(const Walk& w) const;
    Z2Class1 class_of(const std::vector<Walk>& ws) const;

    /// Class of the i-th basis cycle itself.
    Z2Class1 class_of_basis(std::size_t i) const;

    /// Evaluation of a class on the i-th basis cycle.
    int eval_on_basis(const Z2Class1& x, std::size_t i) const;

    /// Coefficients a with x = sum a_i * PD(basis cycle i).
    Gf2Vec coefficients(const Z2Class1& x) const;
};

/// Homology of a surface: lexicographic spanning tree, fundamental cycles,
/// GF(2) echelon reduction against face boundaries.
HomologyBasis homology(const SurfacePtr& m);

/// Cup product of two classes given in basis coordinates.
int cup(const HomologyBasis& h, const Z2Class1& x, const Z2Class1& y);

/// Mod-2 intersection number of two closed walks: walk `a` is pushed off
/// the 1-skeleton and its transverse crossings with `b` are counted.
int intersection_mod2(const CombSurface& m, const Walk& a, const Walk& b);

/// True when orientation transport along an embedded closed walk reverses
/// local orientation (Moebius neighborhood).
bool walk_one_sided(const CombSurface& m, const Walk& w);

/// The sequence of faces the push-off of `w` travels through, with the
/// edges it crosses transversally between them. Used for bundle holonomy.
struct FaceWalk {
    struct Crossing {
        EdgeEnd end;
        int from_occ = 0;  // occurrence index on the entering side
        int to_occ = 0;
    };
    std::vector<int> faces;           // faces.front() == faces.back()
    std::vector<Crossing> crossings;  // crossings[i]: faces[i] -> faces[i+1]
};
FaceWalk pushoff_face_walk(const CombSurface& m, const Walk& w);

/// Validates that a walk is closed and consecutive steps share vertices.
void validate_closed_walk(const CombSurface& m, const Walk& w);

}  // namespace foldcusp

#endif
