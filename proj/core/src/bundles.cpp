#include "foldcusp/bundles.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace foldcusp {

namespace {

// Chart corner angles: each face is drawn as a polygon whose corner angles
// sum to (len-2)*pi exactly, weighted inversely by vertex degree so that
// the cone angle around every vertex stays strictly between pi and 3*pi.
// That pins the nearest-turn branch of every vertex winding defect.
std::vector<std::vector<Rat>> side_angle_table(const CombSurface& m) {
    std::vector<std::vector<Rat>> phi(m.F);
    for (int f = 0; f < m.F; ++f) {
        const int len = m.face_len(f);
        Rat wsum(0);
        std::vector<Rat> w(len);
        for (int i = 0; i < len; ++i) {
            const int d = static_cast<int>(m.links[m.corner_vertex[f][i]].size());
            w[i] = Rat(1, d);
            wsum = wsum + w[i];
        }
        phi[f].assign(len, Rat(0));
        for (int i = 1; i < len; ++i) {
            const Rat interior = Rat(len - 2) * w[i] * Rat(wsum.den, wsum.num);
            phi[f][i] = phi[f][i - 1] + Rat(1) - interior;
        }
    }
    return phi;
}

// Interior chart angle at corner (f, i) under the adapted weights.
Rat corner_angle(const CombSurface& m, int f, int i) {
    const int len = m.face_len(f);
    Rat wsum(0);
    for (int k = 0; k < len; ++k)
        wsum = wsum + Rat(1, static_cast<long long>(
                                 m.links[m.corner_vertex[f][k]].size()));
    const Rat wc(1, static_cast<long long>(m.links[m.corner_vertex[f][i]].size()));
    return Rat(len - 2) * wc * Rat(wsum.den, wsum.num);
}

// Cone angle around a vertex under the adapted corner angles.
Rat cone_angle(const CombSurface& m, int v) {
    Rat cone(0);
    for (const LinkEntry& le : m.links[v])
        cone = cone + corner_angle(m, le.corner.face, le.corner.pos);
    return cone;
}

// One crossing of the link loop around a vertex.
struct LoopCrossing {
    int edge;
    int slot;    // transition composed at this crossing
    int sigma;   // product of the dets of the later crossings
    int ccoef;   // coefficient of a correction rotation on this edge
};

std::vector<LoopCrossing> loop_crossings(const CombSurface& m, const DiscreteBundle& b,
                                         int v) {
    const auto& link = m.links[v];
    const int len = static_cast<int>(link.size());
    std::vector<LoopCrossing> out(len);
    for (int k = 0; k < len; ++k) {
        const EdgeEnd x = link[k].crossed;
        const Corner after = link[(k + 1) % len].corner;
        int to_occ = -1;
        for (int i = 0; i < 2; ++i)
            if (m.flank_corner(m.edge_occs[x.edge][i], x.end) == after) to_occ = i;
        if (to_occ == -1) throw InternalError("link corner does not flank its edge end");
        out[k] = LoopCrossing{x.edge, to_occ == 1 ? 0 : 1, 1, 0};
    }
    int suffix = 1;
    for (int k = len - 1; k >= 0; --k) {
        out[k].sigma = suffix;
        suffix *= b.trans[out[k].edge][out[k].slot].det;
    }
    if (suffix != 1)
        throw InputError("inconsistent cocycle: vertex holonomy reverses orientation");
    // A correction R(c) on edge e acts as +c on slot 0 and -det * c on slot 1.
    for (int k = 0; k < len; ++k) {
        const int d1 = b.trans[out[k].edge][1].det;
        out[k].ccoef = out[k].sigma * (out[k].slot == 0 ? 1 : -d1);
    }
    return out;
}

Rat loop_angle(const DiscreteBundle& b, const std::vector<LoopCrossing>& loop) {
    LiftedOrtho h = LiftedOrtho::identity();
    for (const LoopCrossing& c : loop) h = compose(b.trans[c.edge][c.slot], h);
    return h.a;
}

// Banchoff index of a generic vertex order field at v: 1 - alternations/2,
// where alternations counts the sign changes of neighbor-above/below around
// the link circle. Loop-edge ends compare by end to keep the order generic.
long long banchoff_index(const CombSurface& m, int v,
                         const std::vector<std::pair<long long, long long>>& value) {
    const auto& link = m.links[v];
    const int len = static_cast<int>(link.size());
    std::vector<int> above(len);
    for (int k = 0; k < len; ++k) {
        const EdgeEnd x = link[k].crossed;
        const int u = m.edge_vertex(x.edge, 1 - x.end);
        if (u == v)
            above[k] = x.end == 1 ? 1 : 0;  // loop edge: one end up, one down
        else
            above[k] = value[u] > value[v] ? 1 : 0;
    }
    long long alt = 0;
    for (int k = 0; k < len; ++k) alt += above[k] != above[(k + 1) % len] ? 1 : 0;
    if (alt % 2 != 0) throw InternalError("odd alternation count around a vertex");
    return 1 - alt / 2;
}

// Set the lifted holonomy around every vertex to the prescribed exact
// value by adjusting winding lifts on crossings private to each vertex.
// Each target must agree with the current holonomy modulo whole turns.
void normalize_defects(DiscreteBundle& b, const std::vector<Rat>& target) {
    const CombSurface& m = *b.base;
    for (int pass = 0; pass < m.V + 2; ++pass) {
        bool dirty = false;
        for (int v = 0; v < m.V; ++v) {
            auto loop = loop_crossings(m, b, v);
            const Rat delta = loop_angle(b, loop) - target[v];
            if (delta == Rat(0)) continue;
            {
                const Rat half(delta.num, 2 * delta.den);
                if (!half.is_integer())
                    throw InternalError("defect target differs by a non-turn");
            }
            dirty = true;
            const LoopCrossing* knob = nullptr;
            for (const LoopCrossing& lc : loop) {
                const int u0 = m.edge_vertex(lc.edge, 0);
                const int u1 = m.edge_vertex(lc.edge, 1);
                const int u = (u0 == v) ? u1 : u0;
                if (u == v) continue;
                bool shared = false;
                for (const LoopCrossing& lo : loop_crossings(m, b, u))
                    if (lo.edge == lc.edge && lo.slot == lc.slot) shared = true;
                if (!shared) {
                    knob = &lc;
                    break;
                }
            }
            if (knob == nullptr) knob = &loop[0];
            b.trans[knob->edge][knob->slot].a =
                b.trans[knob->edge][knob->slot].a - Rat(knob->sigma) * delta;
        }
        if (!dirty) return;
    }
    throw InternalError("defect normalization did not stabilize");
}

void check_pair(const DiscreteBundle& b, int e) {
    // The matrices must be mutual inverses; the lifts may differ by whole
    // turns, which is how full-turn regluings are recorded.
    if (!b.trans[e][0].inverse().same_matrix(b.trans[e][1]))
        throw InternalError("transition pair is not matrix-inverse");
}

long long round_half(const Rat& x) {  // nearest integer to x, ties toward -inf
    return Rat(2 * x.num + x.den, 2 * x.den).floor();
}

// Exact holonomy targets for the tangent bundle, possibly modified along
// C. Interior vertices carry the principal cone defect plus the Banchoff
// index of the distance-to-C order field (so each cut side's interior
// indices sum to its Euler characteristic); curve vertices carry the
// geometric side-split residue. Sides whose interior cannot hold their
// index content (no interior vertices, or rounding at the boundary) get
// the deficit as whole extra turns on a boundary vertex, signed by the
// side its seed face lies on.
std::vector<Rat> tangent_targets(const SurfacePtr& mp, const Multicurve* curve,
                                 const std::vector<CuspSpec>* cusps = nullptr) {
    const CombSurface& m = *mp;
    std::vector<char> curve_edge(m.E, 0);
    std::vector<char> curve_vertex(m.V, 0);
    if (curve) {
        for (const Walk& w : curve->components)
            for (const Step& st : w) {
                curve_edge[st.edge] = 1;
                curve_vertex[m.step_from(st)] = 1;
            }
    }
    // Cut distances: BFS from curve vertices along non-curve edges.
    std::vector<long long> dist(m.V, 0);
    if (curve) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> bfs;
        for (int v = 0; v < m.V; ++v)
            if (curve_vertex[v]) {
                dist[v] = 0;
                bfs.push(v);
            }
        while (!bfs.empty()) {
            const int u = bfs.front();
            bfs.pop();
            for (const LinkEntry& le : m.links[u]) {
                const int e = le.crossed.edge;
                if (curve_edge[e]) continue;
                const int w = m.edge_vertex(e, 1 - le.crossed.end);
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    bfs.push(w);
                }
            }
        }
        for (long long d : dist)
            if (d == -1) throw InternalError("vertex unreachable from the curve");
    }
    std::vector<std::pair<long long, long long>> value(m.V);
    for (int v = 0; v < m.V; ++v) value[v] = {dist[v], v};

    std::vector<Rat> target(m.V);
    for (int v = 0; v < m.V; ++v) {
        if (curve_vertex[v]) {
            Rat side[2] = {Rat(0), Rat(0)};
            int which = 0;
            int ncross = 0;
            for (const LinkEntry& le : m.links[v]) {
                side[which] =
                    side[which] + corner_angle(m, le.corner.face, le.corner.pos);
                if (curve_edge[le.crossed.edge]) {
                    which ^= 1;
                    ++ncross;
                }
            }
            if (ncross != 2)
                throw InternalError("curve does not cross a vertex link twice");
            target[v] = principal_angle(side[0] - side[1]);
        } else {
            target[v] =
                principal_angle(cone_angle(m, v)) + Rat(2 * banchoff_index(m, v, value));
            if (target[v].den == 1 && ((target[v].num % 2) + 2) % 2 == 1)
                throw InputError("ambiguous half-turn cone defect; refine the surface");
        }
    }
    if (!curve) return target;

    // Side accounting: allocate each cut component's missing index content.
    const CutResult cut = cut_along(mp, *curve);
    const std::size_t ncomp = cut.components.size();
    auto quantized = [](const Rat& a) {
        const Rat half(a.num, 2 * a.den);
        return Rat(2 * half.num + half.den, 2 * half.den).floor();
    };
    std::vector<long long> content(ncomp, 0);
    for (int v = 0; v < m.V; ++v) {
        if (curve_vertex[v]) continue;
        const int side = cut.face_component[m.links[v][0].corner.face];
        content[side] += quantized(target[v]);
    }
    // Curve vertices contribute to the side of their seed face.
    std::vector<int> seed_side(m.V, -1);
    for (int v = 0; v < m.V; ++v)
        if (curve_vertex[v]) {
            seed_side[v] = cut.face_component[m.links[v][0].corner.face];
            content[seed_side[v]] += quantized(target[v]);
        }
    // A full-turn regluing near a cusp adds one turn of content to the
    // side of the face its direction points into.
    std::vector<long long> want(ncomp, 0);
    for (std::size_t sidx = 0; sidx < ncomp; ++sidx)
        want[sidx] = cut.components[sidx].chi;
    if (cusps) {
        for (const CuspSpec& p : *cusps) {
            if (p.side_face < 0 || p.side_face >= m.F)
                throw InputError("cusp side face out of range");
            want[cut.face_component[p.side_face]] += 1;
        }
    }
    for (std::size_t sidx = 0; sidx < ncomp; ++sidx) {
        const long long deficit = want[sidx] - content[sidx];
        if (deficit == 0) continue;
        // A curve vertex adjacent to this side; its seed side fixes the sign.
        int pick = -1, sign = 0;
        for (int v = 0; v < m.V && pick == -1; ++v) {
            if (!curve_vertex[v]) continue;
            if (seed_side[v] == static_cast<int>(sidx)) {
                pick = v;
                sign = 1;
            }
        }
        for (int v = 0; v < m.V && pick == -1; ++v) {
            if (!curve_vertex[v]) continue;
            // Any arc of v on this side qualifies.
            for (const LinkEntry& le : m.links[v])
                if (cut.face_component[le.corner.face] == static_cast<int>(sidx)) {
                    pick = v;
                    sign = -1;
                    break;
                }
        }
        if (pick == -1) throw InternalError("cut side has no boundary vertex");
        target[pick] = target[pick] + Rat(2 * sign * deficit);
    }
    return target;
}

}  // namespace

DiscreteBundle trivial_bundle(const SurfacePtr& m) {
    DiscreteBundle b;
    b.base = m;
    b.trans.assign(m->E, {LiftedOrtho::identity(), LiftedOrtho::identity()});
    return b;
}

DiscreteBundle discrete_tangent(const SurfacePtr& mp) {
    const CombSurface& m = *mp;
    if (!m.triangulated()) throw InputError("discrete_tangent requires a triangulated surface");
    const auto phi = side_angle_table(m);
    for (int v = 0; v < m.V; ++v) {
        const Rat cone = cone_angle(m, v);
        if (!(Rat(1) < cone) || !(cone < Rat(3)))
            throw InputError("vertex cone angle out of range; refine the surface");
    }
    DiscreteBundle b;
    b.base = mp;
    b.trans.resize(m.E);
    for (int e = 0; e < m.E; ++e) {
        const EdgeOcc& o0 = m.edge_occs[e][0];
        const EdgeOcc& o1 = m.edge_occs[e][1];
        const Rat f0 = phi[o0.face][o0.pos];
        const Rat f1 = phi[o1.face][o1.pos];
        LiftedOrtho t01;  // occ0 chart -> occ1 chart
        if (m.edge_or[e] == +1) {
            // Opposite traversals: o0's side direction maps to o1's reversed.
            t01 = LiftedOrtho::rotation(f1 + Rat(1) - f0);
        } else {
            // Same traversal: reflection exchanging the two side directions.
            t01 = LiftedOrtho::reflection(f0 + f1);
        }
        b.trans[e][0] = t01.normalized();
        b.trans[e][1] = b.trans[e][0].inverse();
        check_pair(b, e);
    }
    normalize_defects(b, tangent_targets(mp, nullptr));
    return b;
}

DiscreteBundle fold_modify(const DiscreteBundle& b, const Multicurve& c) {
    if (b.base.get() != c.surface.get())
        throw InputError("fold_modify: curve lives on a different surface");
    const CombSurface& m = *b.base;
    const auto phi = side_angle_table(m);
    DiscreteBundle out = b;
    for (const Walk& w : c.components) {
        for (const Step& s : w) {
            const int e = s.edge;
            const EdgeOcc& o1 = m.edge_occs[e][1];
            // The reflection fixing the curve direction, in occ1's chart,
            // composed on both directions of the crossing.
            const LiftedOrtho refl =
                LiftedOrtho::reflection(Rat(2) * phi[o1.face][o1.pos]);
            out.trans[e][0] = compose(refl, out.trans[e][0]);
            out.trans[e][1] = compose(out.trans[e][1], refl);
            check_pair(out, e);
        }
    }
    // Renormalize the winding structure to the regluing's geometry, with
    // each cut side's defects adding up to its Euler characteristic.
    normalize_defects(out, tangent_targets(b.base, &c));
    return out;
}

DiscreteBundle cusp_modify(const DiscreteBundle& b, const Multicurve& c,
                           const std::vector<CuspSpec>& cusps, int variant) {
    if (variant != 1 && variant != 2) throw InputError("cusp variant must be 1 or 2");
    if (b.base.get() != c.surface.get())
        throw InputError("cusp_modify: curve lives on a different surface");
    const CombSurface& m = *b.base;
    // The input must already be reglued along C: the fold flips the
    // determinant of every transition crossing the curve.
    for (const Walk& w : c.components)
        for (const Step& st : w)
            if (b.trans[st.edge][0].det != -m.edge_or[st.edge])
                throw InputError("cusp_modify expects a fold-modified bundle for this curve");
    DiscreteBundle out = b;
    for (const CuspSpec& p : cusps) {
        if (p.component < 0 || p.component >= static_cast<int>(c.components.size()))
            throw InputError("cusp component out of range");
        const Walk& w = c.components[p.component];
        if (p.edge_index < 0 || p.edge_index >= static_cast<int>(w.size()))
            throw InputError("cusp edge index out of range");
        const int e = w[p.edge_index].edge;
        int side_occ = -1;
        for (int k = 0; k < 2; ++k)
            if (m.edge_occs[e][k].face == p.side_face) side_occ = (side_occ == -1) ? k : 0;
        if (side_occ == -1) throw InputError("cusp side face not adjacent to its edge");
        // The full-turn regluing of the disk on the direction side, recorded
        // as a winding lift on the transition into that side. Variant 2 is
        // the half-turn based loop of opposite winding; the renormalization
        // below places the turn of content on the disk's side either way,
        // which is why the two variants yield isomorphic bundles.
        const int slot = (side_occ == 1) ? 0 : 1;
        if (variant == 1)
            out.trans[e][slot].a = out.trans[e][slot].a + Rat(2);
        else
            out.trans[e][1 - slot].a = out.trans[e][1 - slot].a - Rat(2);
        check_pair(out, e);
    }
    normalize_defects(out, tangent_targets(b.base, &c, &cusps));
    return out;
}

namespace {

// Combined-orientation transport sign (Z~_M tensor Z~_E) from face 0 to
// every face, along a deterministic dual spanning tree.
std::vector<int> combined_transport(const DiscreteBundle& b) {
    const CombSurface& m = *b.base;
    std::vector<int> sign(m.F, 0);
    sign[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        const int f = bfs.front();
        bfs.pop();
        for (const SideRef& s : m.faces[f]) {
            const int e = s.edge;
            const int flip = m.edge_or[e] * b.trans[e][0].det;
            for (int k = 0; k < 2; ++k) {
                const int g = m.edge_occs[e][k].face;
                if (sign[g] == 0) {
                    sign[g] = sign[f] * flip;
                    bfs.push(g);
                }
            }
        }
    }
    return sign;
}

}  // namespace

BundleInvariants bundle_invariants(const DiscreteBundle& b, const HomologyBasis& h) {
    const CombSurface& m = *b.base;
    if (h.surface.get() != b.base.get())
        throw InputError("bundle and homology basis live on different surfaces");
    for (int e = 0; e < m.E; ++e) check_pair(b, e);

    BundleInvariants inv;
    inv.w1_on_basis = Z2Class1(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) {
        const FaceWalk fw = pushoff_face_walk(m, h.basis_cycles[i]);
        int det = 1;
        for (const auto& cr : fw.crossings) det *= b.transition(cr.end.edge, cr.to_occ).det;
        inv.w1_on_basis.set(i, det < 0 ? 1 : 0);
    }

    // Twisted Euler number: each vertex disk is filled so that the link
    // holonomy unwinds by the nearest whole number of turns; the Euler
    // number is the signed sum of those winding defects. Quantization makes
    // every contribution an integer, so the mod-2 value needs no transport
    // and the integer value uses the combined-orientation tree transport.
    const std::vector<int> sf = combined_transport(b);
    long long signed_total = 0, plain_total = 0;
    for (int v = 0; v < m.V; ++v) {
        const Rat a = loop_angle(b, loop_crossings(m, b, v));
        const long long d = round_half(Rat(a.num, 2 * a.den));
        signed_total += sf[m.links[v][0].corner.face] > 0 ? d : -d;
        plain_total += d;
    }

    if (inv.w1_on_basis == h.w1_vector) {
        inv.euler = EulerNumber{false, signed_total < 0 ? -signed_total : signed_total};
    } else {
        inv.euler = EulerNumber{true, ((plain_total % 2) + 2) % 2};
    }
    return inv;
}

BundleInvariants bundle_invariants(const DiscreteBundle& b) {
    return bundle_invariants(b, homology(b.base));
}

bool bundles_isomorphic(const DiscreteBundle& b1, const DiscreteBundle& b2) {
    if (b1.base.get() != b2.base.get()) {
        if (b1.base->edge_names != b2.base->edge_names)
            throw InputError("bundles_isomorphic: different base surfaces");
    }
    const HomologyBasis h = homology(b1.base);
    const BundleInvariants i1 = bundle_invariants(b1, h);
    const BundleInvariants i2 = bundle_invariants(b2, h);
    return i1.w1_on_basis == i2.w1_on_basis && i1.euler == i2.euler;
}

}  // namespace foldcusp
