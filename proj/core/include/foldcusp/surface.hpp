#ifndef FOLDCUSP_SURFACE_HPP
#define FOLDCUSP_SURFACE_HPP

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldcusp {

/// Error raised on invalid user input (malformed schemes, bad curves, ...).
/// The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Error raised when internal consistency breaks (should never happen on
/// valid inputs).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// One signed symbol of a face word: edge symbol traversed forwards or
/// reversed.
struct SignedSym {
    std::string sym;
    bool rev = false;
};

/// A closed surface as a polygon gluing scheme: a list of cyclic face words.
/// Every edge symbol must occur exactly twice across all words.
struct GluingScheme {
    std::vector<std::vector<SignedSym>> faces;
};

/// Homeomorphism type of a closed surface.
struct SurfaceClass {
    bool orientable = true;
    int genus = 0;  // nonorientable genus when orientable == false

    int chi() const { return orientable ? 2 - 2 * genus : 2 - genus; }
    bool operator==(const SurfaceClass& o) const {
        return orientable == o.orientable && genus == o.genus;
    }
};

/// Traversal of one edge, forwards (tail->head) or reversed.
struct Step {
    int edge = -1;
    bool rev = false;
    bool operator==(const Step& o) const { return edge == o.edge && rev == o.rev; }
};
using Walk = std::vector<Step>;

/// Side of a face word: which edge, and whether the boundary traverses it
/// against the edge's intrinsic orientation.
struct SideRef {
    int edge;
    bool rev;
};

/// One of the two occurrences of an edge in the face words.
struct EdgeOcc {
    int face = -1;
    int pos = -1;
    bool rev = false;
};

/// A corner of a face: the sector between side pos-1 and side pos.
struct Corner {
    int face = -1;
    int pos = -1;
    bool operator==(const Corner& o) const { return face == o.face && pos == o.pos; }
};

/// An endpoint of an edge: 0 = tail, 1 = head.
struct EdgeEnd {
    int edge = -1;
    int end = 0;
    bool operator==(const EdgeEnd& o) const { return edge == o.edge && end == o.end; }
};

/// Entry of a vertex link: a corner followed by the edge end the link
/// crosses on the way to the next corner. The sequence is cyclic and, by
/// construction, every visit turns from the arriving side to the departing
/// side counterclockwise in the visited face's own chart.
struct LinkEntry {
    Corner corner;
    EdgeEnd crossed;
};

class CombSurface;
using SurfacePtr = std::shared_ptr<const CombSurface>;

/// Validated combinatorial closed surface with derived cell structure.
class CombSurface {
public:
    // --- raw scheme ---
    std::vector<std::string> edge_names;
    std::vector<std::array<EdgeOcc, 2>> edge_occs;
    std::vector<std::vector<SideRef>> faces;

    // --- derived ---
    int V = 0, E = 0, F = 0;
    int euler_char = 0;
    bool orientable = false;
    SurfaceClass surface_class;
    std::vector<std::vector<int>> corner_vertex;  // [face][pos] -> vertex id
    std::vector<int> edge_or;                     // +1 compatible, -1 flipping
    std::vector<std::vector<LinkEntry>> links;    // [vertex] -> cyclic link

    int face_len(int f) const { return static_cast<int>(faces[f].size()); }
    int edge_id(const std::string& sym) const;

    /// Endpoint vertex of an edge: end 0 = tail, 1 = head.
    int edge_vertex(int e, int end) const;

    /// Vertex an occurrence's side starts at / ends at along the face word.
    int side_start_vertex(const EdgeOcc& o) const;
    int side_end_vertex(const EdgeOcc& o) const;

    /// Corner of occurrence `o` flanking the given end of its edge.
    Corner flank_corner(const EdgeOcc& o, int end) const;

    /// The occurrence of edge e other than (face,pos).
    const EdgeOcc& other_occ(int e, int face, int pos) const;

    /// Position of a corner / edge-end in its vertex link.
    int link_index_of_corner(const Corner& c) const;
    int link_index_of_end(const EdgeEnd& x) const;
    int vertex_of_end(const EdgeEnd& x) const;

    /// Walk endpoints: vertex a traversal departs from / arrives at.
    int step_from(const Step& s) const { return edge_vertex(s.edge, s.rev ? 1 : 0); }
    int step_to(const Step& s) const { return edge_vertex(s.edge, s.rev ? 0 : 1); }

    bool triangulated() const;

    GluingScheme scheme() const;

private:
    friend SurfacePtr build_surface(const GluingScheme&);
    std::vector<std::vector<int>> corner_link_index_;
    std::vector<std::array<int, 2>> end_link_index_;   // [edge][end] -> index
    std::vector<std::array<int, 2>> end_vertex_;       // [edge][end] -> vertex
};

/// Validates a gluing scheme and derives the cell structure.
/// Throws InputError on: a symbol not used exactly twice, an empty face,
/// or a disconnected complex.
SurfacePtr build_surface(const GluingScheme& scheme);

/// A triangulated surface of the given homeomorphism type, built from
/// bounded-degree pieces (octahedron, diagonal torus grids, the 6-vertex
/// projective plane) joined by connected sums.
SurfacePtr canonical_surface(const SurfaceClass& cls);

/// The canonical one-face polygon word for a class (4g-gon or crosscap word).
GluingScheme canonical_scheme(const SurfaceClass& cls);

/// Octahedral sphere; 3x3 torus grid with diagonals; the 6-vertex
/// triangulation of the projective plane.
GluingScheme octahedron_scheme();
GluingScheme torus_diag_scheme(int n, int m);
GluingScheme rp2_six_scheme();

/// Connected sum: remove one triangle from each summand and glue along the
/// boundary. Both inputs must be triangulated.
SurfacePtr connected_sum(const SurfacePtr& a, const SurfacePtr& b);

/// Result of one barycentric subdivision, with enough addressing to carry
/// curves and to build lane systems in a second subdivision.
struct Subdivision {
    SurfacePtr original;
    SurfacePtr sub;

    // Cell addressing in `sub`:
    std::vector<int> half_a;        // [old edge] -> half tail..mid
    std::vector<int> half_b;        // [old edge] -> half mid..head
    std::vector<int> mid_vertex;    // [old edge] -> vertex
    std::vector<int> center_vertex; // [old face] -> vertex
    std::vector<int> old_vertex;    // [old vertex] -> vertex
    std::vector<std::vector<int>> spoke;   // [old face][pos] -> edge mid..center
    std::vector<std::vector<int>> radius;  // [old face][pos] -> edge center..corner
    std::vector<std::vector<std::array<int, 2>>> tris;  // [old face][pos] -> {tri1, tri2}

    /// Image of a closed walk: every step becomes its two halves.
    Walk carry_walk(const Walk& w) const;
};

/// Barycentric subdivision. Preserves chi, orientability and homology.
Subdivision subdivide(const SurfacePtr& m);

/// Classifies by (orientability, chi); throws InternalError if chi is
/// inconsistent with a closed surface of that orientability.
SurfaceClass classify_by_chi(bool orientable, int chi);

}  // namespace foldcusp

#endif
