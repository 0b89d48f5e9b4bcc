#include "foldcusp/multicurve.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace foldcusp {

Multicurve embed_multicurve(const SurfacePtr& mp, const std::vector<Walk>& walks) {
    const CombSurface& m = *mp;
    if (walks.empty()) throw InputError("multicurve must be nonempty");
    std::set<int> edges_seen;
    std::set<int> verts_seen;
    for (const Walk& w : walks) {
        validate_closed_walk(m, w);
        std::set<int> comp_verts;
        for (const Step& s : w) {
            if (!edges_seen.insert(s.edge).second)
                throw InputError("multicurve repeats edge '" + m.edge_names[s.edge] + "'");
            if (!comp_verts.insert(m.step_from(s)).second)
                throw InputError("multicurve component is not embedded (repeated vertex)");
        }
        for (int v : comp_verts)
            if (!verts_seen.insert(v).second)
                throw InputError("multicurve components are not disjoint");
    }
    return Multicurve{mp, walks};
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void merge(int a, int b) { p[find(a)] = find(b); }
};

int corner_id(const std::vector<int>& base, const Corner& c) {
    return base[c.face] + c.pos;
}

}  // namespace

CutResult cut_along(const SurfacePtr& mp, const Multicurve& c) {
    const CombSurface& m = *mp;
    std::vector<int> curve_edge(m.E, -1);  // -> component index
    for (std::size_t k = 0; k < c.components.size(); ++k)
        for (const Step& s : c.components[k]) curve_edge[s.edge] = static_cast<int>(k);

    // Face components of the cut complex: faces joined across non-curve edges.
    UnionFind fuf(m.F);
    for (int e = 0; e < m.E; ++e)
        if (curve_edge[e] == -1) fuf.merge(m.edge_occs[e][0].face, m.edge_occs[e][1].face);

    std::vector<int> comp_of_root;
    std::map<int, int> root_to_comp;
    CutResult res;
    res.face_component.resize(m.F);
    for (int f = 0; f < m.F; ++f) {
        const int r = fuf.find(f);
        auto it = root_to_comp.find(r);
        if (it == root_to_comp.end()) {
            it = root_to_comp.insert({r, static_cast<int>(res.components.size())}).first;
            res.components.emplace_back();
        }
        res.face_component[f] = it->second;
        res.components[it->second].faces.push_back(f);
    }

    // Cut vertices: corner classes joined only across non-curve edge ends.
    std::vector<int> corner_base(m.F, 0);
    int ncorners = 0;
    for (int f = 0; f < m.F; ++f) {
        corner_base[f] = ncorners;
        ncorners += m.face_len(f);
    }
    UnionFind cuf(ncorners);
    for (int e = 0; e < m.E; ++e) {
        if (curve_edge[e] != -1) continue;
        for (int end = 0; end < 2; ++end) {
            const Corner a = m.flank_corner(m.edge_occs[e][0], end);
            const Corner b = m.flank_corner(m.edge_occs[e][1], end);
            cuf.merge(corner_id(corner_base, a), corner_id(corner_base, b));
        }
    }
    // Count cut vertices per component.
    std::map<int, int> seen_class;
    std::vector<int> vcount(res.components.size(), 0);
    for (int f = 0; f < m.F; ++f)
        for (int p = 0; p < m.face_len(f); ++p) {
            const int cls = cuf.find(corner_base[f] + p);
            if (seen_class.insert({cls, f}).second) vcount[res.face_component[f]]++;
        }

    // Edge counts: interior edges once, curve edges once per copy.
    std::vector<int> ecount(res.components.size(), 0);
    for (int e = 0; e < m.E; ++e) {
        if (curve_edge[e] == -1) {
            ecount[res.face_component[m.edge_occs[e][0].face]]++;
        } else {
            for (int k = 0; k < 2; ++k) ecount[res.face_component[m.edge_occs[e][k].face]]++;
        }
    }

    for (std::size_t i = 0; i < res.components.size(); ++i) {
        res.components[i].chi = vcount[i] - ecount[i] + static_cast<int>(res.components[i].faces.size());
    }
    int chi_sum = 0;
    for (const auto& comp : res.components) chi_sum += comp.chi;
    if (chi_sum != m.euler_char) throw InternalError("cut components do not add up to chi(M)");

    // Boundary circles: trace copy-ends through cut vertex classes.
    // key: corner class -> the (edge, occ, end) copy-ends adjacent to it.
    std::map<int, std::vector<std::array<int, 3>>> at_class;
    for (int e = 0; e < m.E; ++e) {
        if (curve_edge[e] == -1) continue;
        for (int k = 0; k < 2; ++k)
            for (int end = 0; end < 2; ++end) {
                const Corner cor = m.flank_corner(m.edge_occs[e][k], end);
                const int cls = cuf.find(corner_id(corner_base, cor));
                at_class[cls].push_back({e, k, end});
            }
    }
    for (const auto& [cls, ends] : at_class)
        if (ends.size() != 2)
            throw InternalError("cut boundary vertex does not have exactly two copy ends");

    std::set<std::pair<int, int>> visited;  // (edge, occ)
    for (int e0 = 0; e0 < m.E; ++e0) {
        if (curve_edge[e0] == -1) continue;
        for (int k0 = 0; k0 < 2; ++k0) {
            if (visited.count({e0, k0})) continue;
            // Trace the circle through copy (e0,k0).
            int e = e0, k = k0, end = 1;
            int length = 0;
            int min_edge = e0, min_occ = k0;
            bool covers_both = false;
            do {
                visited.insert({e, k});
                ++length;
                if (e < min_edge || (e == min_edge && k < min_occ)) {
                    min_edge = e;
                    min_occ = k;
                }
                if (visited.count({e, 1 - k})) covers_both = true;
                const Corner cor = m.flank_corner(m.edge_occs[e][k], end);
                const int cls = cuf.find(corner_id(corner_base, cor));
                const auto& ends = at_class.at(cls);
                std::array<int, 3> self{e, k, end};
                const auto& nxt = (ends[0] == self) ? ends[1] : ends[0];
                e = nxt[0];
                k = nxt[1];
                end = 1 - nxt[2];
            } while (!(e == e0 && k == k0 && end == 1));
            BoundaryCircle circ;
            circ.curve_component = curve_edge[e0];
            circ.length = length;
            const int comp_len =
                static_cast<int>(c.components[circ.curve_component].size());
            circ.side = (length == 2 * comp_len && covers_both) ? -1 : min_occ;
            res.components[res.face_component[m.edge_occs[min_edge][min_occ].face]]
                .boundary.push_back(circ);
            res.total_boundary_circles++;
        }
    }
    return res;
}

bool component_one_sided(const Multicurve& c, int idx) {
    if (idx < 0 || idx >= static_cast<int>(c.components.size()))
        throw InputError("component index out of range");
    return walk_one_sided(*c.surface, c.components[idx]);
}

CurveSummary curve_summary(const HomologyBasis& h, const Multicurve& c,
                           const std::vector<CuspSpec>& cusps) {
    const CombSurface& m = *c.surface;
    if (h.surface.get() != c.surface.get())
        throw InputError("curve and homology basis live on different surfaces");

    CurveSummary s;
    s.chi_M = m.euler_char;
    s.orientable_M = m.orientable;
    s.w2_M = ((m.euler_char % 2) + 2) % 2;
    s.n_components = static_cast<int>(c.components.size());
    s.p_count = static_cast<int>(cusps.size());

    s.c_class = h.class_of(c.components);
    s.c_is_zero = s.c_class.is_zero();
    s.c_equals_w1 = (s.c_class == h.w1_vector);
    s.c_squared = cup(h, s.c_class, s.c_class);

    for (std::size_t i = 0; i < c.components.size(); ++i)
        if (walk_one_sided(m, c.components[i])) s.one_sided_count++;
    if ((s.one_sided_count % 2) != s.c_squared)
        throw InternalError("[C]^2 disagrees with one-sided count parity");

    // Validate cusps and find the side occurrence of each.
    std::vector<int> edge_of_cusp(cusps.size());
    for (std::size_t i = 0; i < cusps.size(); ++i) {
        const CuspSpec& p = cusps[i];
        if (p.component < 0 || p.component >= static_cast<int>(c.components.size()))
            throw InputError("cusp component out of range");
        const Walk& w = c.components[p.component];
        if (p.edge_index < 0 || p.edge_index >= static_cast<int>(w.size()))
            throw InputError("cusp edge index out of range");
        const int e = w[p.edge_index].edge;
        edge_of_cusp[i] = e;
        if (m.edge_occs[e][0].face != p.side_face && m.edge_occs[e][1].face != p.side_face)
            throw InputError("cusp side face is not adjacent to the cusp edge");
    }

    // Two-coloring of the cut components across curve edges.
    const CutResult cut = cut_along(c.surface, c);
    std::vector<int> color(cut.components.size(), 0);
    bool colorable = true;
    {
        std::vector<std::vector<int>> adj(cut.components.size());
        std::vector<int> curve_edge(m.E, -1);
        for (std::size_t k = 0; k < c.components.size(); ++k)
            for (const Step& st : c.components[k]) curve_edge[st.edge] = static_cast<int>(k);
        for (int e = 0; e < m.E; ++e) {
            if (curve_edge[e] == -1) continue;
            const int a = cut.face_component[m.edge_occs[e][0].face];
            const int b = cut.face_component[m.edge_occs[e][1].face];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::queue<int> bfs;
        for (std::size_t i = 0; i < cut.components.size() && colorable; ++i) {
            if (color[i] != 0) continue;
            color[i] = 1;
            bfs.push(static_cast<int>(i));
            while (!bfs.empty() && colorable) {
                const int x = bfs.front();
                bfs.pop();
                for (int y : adj[x]) {
                    if (color[y] == 0) {
                        color[y] = -color[x];
                        bfs.push(y);
                    } else if (color[y] == color[x]) {
                        colorable = false;
                    }
                }
            }
        }
    }
    if (colorable != s.c_is_zero)
        throw InternalError("separation 2-coloring disagrees with [C] = 0");

    if (colorable) {
        SplitData sp;
        sp.plus_label_face = 0;
        const int plus_color = color[cut.face_component[0]];
        for (std::size_t i = 0; i < cut.components.size(); ++i) {
            if (color[i] == plus_color)
                sp.chi_plus += cut.components[i].chi;
            else
                sp.chi_minus += cut.components[i].chi;
        }
        for (std::size_t i = 0; i < cusps.size(); ++i) {
            const int side_comp = cut.face_component[cusps[i].side_face];
            // Positive cusp: direction points into M-.
            if (color[side_comp] == plus_color)
                sp.n_minus++;
            else
                sp.n_plus++;
        }
        s.split = sp;
    }
    return s;
}

}  // namespace foldcusp
