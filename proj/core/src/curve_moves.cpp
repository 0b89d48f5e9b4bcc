#include "foldcusp/curve_moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace foldcusp {

namespace {

using Chain = std::vector<char>;  // edge indicator

Chain chain_of_walks(const CombSurface& m, const std::vector<Walk>& walks) {
    Chain ch(m.E, 0);
    for (const Walk& w : walks)
        for (const Step& s : w) ch[s.edge] ^= 1;
    return ch;
}

// Decompose an even subgraph into closed walks by pairing the ends at each
// vertex adjacently in link order; `phase` rotates the pairing at a vertex.
// Any pairing yields walks with the same total class.
std::vector<Walk> trace_chain(const CombSurface& m, const Chain& ch,
                              const std::vector<int>* phase = nullptr) {
    std::vector<std::vector<int>> ends(m.V);
    for (int v = 0; v < m.V; ++v)
        for (std::size_t k = 0; k < m.links[v].size(); ++k)
            if (ch[m.links[v][k].crossed.edge]) ends[v].push_back(static_cast<int>(k));
    std::vector<std::map<int, int>> partner(m.V);
    for (int v = 0; v < m.V; ++v) {
        const auto& e = ends[v];
        if (e.size() % 2 != 0) throw InternalError("odd chain degree at a vertex");
        const int off = phase ? (((*phase)[v] % 2) + 2) % 2 : 0;
        for (std::size_t i = 0; i < e.size(); i += 2) {
            const int a = e[(i + off) % e.size()];
            const int b = e[(i + 1 + off) % e.size()];
            partner[v][a] = b;
            partner[v][b] = a;
        }
    }
    std::vector<Walk> out;
    std::set<std::pair<int, int>> used;  // (vertex, departing link index)
    for (int v0 = 0; v0 < m.V; ++v0) {
        for (int k0 : ends[v0]) {
            if (used.count({v0, k0})) continue;
            Walk w;
            int v = v0, k = k0;
            do {
                used.insert({v, k});
                const EdgeEnd x = m.links[v][k].crossed;
                w.push_back(Step{x.edge, x.end == 1});
                v = m.edge_vertex(x.edge, 1 - x.end);
                const int arrive = m.link_index_of_end(EdgeEnd{x.edge, 1 - x.end});
                used.insert({v, arrive});  // blocks the mirror traversal
                k = partner[v].at(arrive);
            } while (!(v == v0 && k == k0));
            out.push_back(std::move(w));
        }
    }
    return out;
}

// Connected components of an even subgraph.
std::vector<Chain> chain_components(const CombSurface& m, const Chain& ch) {
    std::vector<int> comp(m.E, -1);
    int n = 0;
    for (int e0 = 0; e0 < m.E; ++e0) {
        if (!ch[e0] || comp[e0] != -1) continue;
        std::queue<int> bfs;
        bfs.push(e0);
        comp[e0] = n;
        while (!bfs.empty()) {
            const int e = bfs.front();
            bfs.pop();
            for (int end = 0; end < 2; ++end) {
                const int v = m.edge_vertex(e, end);
                for (const LinkEntry& le : m.links[v]) {
                    const int e2 = le.crossed.edge;
                    if (ch[e2] && comp[e2] == -1) {
                        comp[e2] = n;
                        bfs.push(e2);
                    }
                }
            }
        }
        ++n;
    }
    std::vector<Chain> parts(n, Chain(m.E, 0));
    for (int e = 0; e < m.E; ++e)
        if (ch[e]) parts[comp[e]][e] = 1;
    return parts;
}

Z2Class1 chain_class(const CombSurface& m, const Chain& ch,
                     const std::vector<Walk>& basis) {
    const std::vector<Walk> walks = trace_chain(m, ch);
    Z2Class1 x(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int bit = 0;
        for (const Walk& w : walks) bit ^= intersection_mod2(m, w, basis[i]);
        x.set(i, bit);
    }
    return x;
}

std::vector<char> chain_vertices(const CombSurface& m, const Chain& ch) {
    std::vector<char> on(m.V, 0);
    for (int e = 0; e < m.E; ++e)
        if (ch[e]) on[m.edge_vertex(e, 0)] = on[m.edge_vertex(e, 1)] = 1;
    return on;
}

// Strip surgery (curve surgery through a corridor of faces): xor the chain
// with the boundaries of a face path running from an edge of `from` to the
// first face touching `target`, avoiding blocked cells and the chain
// itself in between. Returns false when no corridor exists.
bool strip_surgery(const CombSurface& m, Chain& ch, const Chain& from, const Chain& target,
                   const std::vector<char>& blocked_v, const Chain& blocked_e) {
    auto touches = [&](int f, const Chain& set) {
        for (const SideRef& s : m.faces[f])
            if (set[s.edge]) return true;
        return false;
    };
    auto distinct_edges = [&](int f) {
        const auto& w = m.faces[f];
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                if (w[a].edge == w[b].edge) return false;
        return true;
    };
    auto clean_interior = [&](int f) {
        if (!distinct_edges(f)) return false;
        for (const SideRef& s : m.faces[f])
            if (blocked_e[s.edge] || ch[s.edge]) return false;
        for (int i = 0; i < m.face_len(f); ++i)
            if (blocked_v[m.corner_vertex[f][i]]) return false;
        return true;
    };
    auto seed_ok = [&](int f) {
        if (!distinct_edges(f)) return false;
        int attach = 0;
        for (const SideRef& s : m.faces[f]) {
            if (from[s.edge])
                ++attach;
            else if (blocked_e[s.edge] || ch[s.edge])
                return false;
        }
        if (attach != 1) return false;
        for (int i = 0; i < m.face_len(f); ++i) {
            const int v = m.corner_vertex[f][i];
            if (blocked_v[v]) return false;
        }
        return true;
    };
    auto landing_ok = [&](int f) {
        if (!distinct_edges(f)) return false;
        int attach = 0;
        for (const SideRef& s : m.faces[f]) {
            if (target[s.edge])
                ++attach;
            else if (blocked_e[s.edge] || ch[s.edge])
                return false;
        }
        if (attach != 1) return false;
        for (int i = 0; i < m.face_len(f); ++i)
            if (blocked_v[m.corner_vertex[f][i]]) return false;
        return true;
    };

    std::vector<int> parent(m.F, -2);
    std::queue<int> bfs;
    for (int f = 0; f < m.F; ++f)
        if (seed_ok(f)) {
            parent[f] = -1;
            if (landing_ok(f) && touches(f, target)) {
                for (const SideRef& s : m.faces[f]) ch[s.edge] ^= 1;
                return true;
            }
            if (!touches(f, target)) bfs.push(f);
        }
    while (!bfs.empty()) {
        const int f = bfs.front();
        bfs.pop();
        for (const SideRef& s : m.faces[f]) {
            if (ch[s.edge] || blocked_e[s.edge] || from[s.edge] || target[s.edge]) continue;
            for (const EdgeOcc& o : m.edge_occs[s.edge]) {
                const int g = o.face;
                if (parent[g] != -2) continue;
                if (landing_ok(g) && touches(g, target)) {
                    parent[g] = f;
                    int x = g;
                    while (x != -1) {
                        for (const SideRef& t : m.faces[x]) ch[t.edge] ^= 1;
                        x = parent[x];
                    }
                    return true;
                }
                if (clean_interior(g) && !touches(g, from)) {
                    parent[g] = f;
                    bfs.push(g);
                }
            }
        }
    }
    return false;
}

// Lane-system materialization: draw chains of the stage surface into its
// double barycentric subdivision, one private lane per chain edge and one
// corner arc per vertex passage.
struct Materializer {
    SurfacePtr s0;
    Subdivision sub1, sub2;

    explicit Materializer(const SurfacePtr& base) : s0(base) {
        sub1 = subdivide(base);
        sub2 = subdivide(sub1.sub);
    }

    Walk lane(int e, bool rev) const {
        const int ha = sub1.half_a[e], hb = sub1.half_b[e];
        Walk w;
        w.push_back(Step{sub2.half_b[ha], false});  // quarter point -> mid
        w.push_back(Step{sub2.half_a[hb], false});  // mid -> far quarter point
        if (rev) {
            std::reverse(w.begin(), w.end());
            for (Step& s : w) s.rev = !s.rev;
        }
        return w;
    }

    // Arc around stage-vertex v between the quarter points of two chain
    // ends (given as link indices), through the gap free of other ends.
    Walk vertex_arc(int v, int from_idx, int to_idx,
                    const std::vector<char>& is_end) const {
        const CombSurface& m0 = *s0;
        const CombSurface& m1 = *sub1.sub;
        const auto& link0 = m0.links[v];
        const int len = static_cast<int>(link0.size());
        int dir = +1;
        for (int k = (from_idx + 1) % len;; k = (k + 1) % len) {
            if (is_end[k] || k == to_idx) {
                if (k != to_idx) dir = -1;
                break;
            }
        }
        auto half_of = [&](const EdgeEnd& x) {
            return x.end == 0 ? sub1.half_a[x.edge] : sub1.half_b[x.edge];
        };
        auto spoke2 = [&](int tri, int s1edge, bool to_center) {
            int pos = -1;
            for (int i = 0; i < 3; ++i)
                if (m1.faces[tri][i].edge == s1edge) pos = i;
            if (pos == -1) throw InternalError("edge missing from sector triangle");
            return Step{sub2.spoke[tri][pos], !to_center};
        };
        Walk arc;
        int k = from_idx;
        while (k != to_idx) {
            const int knext = (k + dir + len) % len;
            const Corner c0 = dir > 0 ? link0[knext].corner : link0[k].corner;
            const EdgeEnd xk = link0[k].crossed;
            const EdgeEnd xn = link0[knext].crossed;
            const int hk = half_of(xk);
            const int hn = half_of(xn);
            const int radius = sub1.radius[c0.face][c0.pos];
            const int lenf = m0.face_len(c0.face);
            const int t_dep = sub1.tris[c0.face][c0.pos][0];
            const int t_arr = sub1.tris[c0.face][(c0.pos + lenf - 1) % lenf][1];
            auto has = [&](int tri, int e1) {
                for (const SideRef& s : m1.faces[tri])
                    if (s.edge == e1) return true;
                return false;
            };
            int tri_a, tri_b;
            if (has(t_arr, hk) && has(t_dep, hn)) {
                tri_a = t_arr;
                tri_b = t_dep;
            } else if (has(t_dep, hk) && has(t_arr, hn)) {
                tri_a = t_dep;
                tri_b = t_arr;
            } else {
                throw InternalError("sector triangles do not flank the crossing halves");
            }
            arc.push_back(spoke2(tri_a, hk, true));
            arc.push_back(spoke2(tri_a, radius, false));
            arc.push_back(spoke2(tri_b, radius, true));
            arc.push_back(spoke2(tri_b, hn, false));
            k = knext;
        }
        return arc;
    }

    Walk draw_strand(const CombSurface& m, const Chain& ch, const Walk& strand) const {
        Walk drawn;
        for (std::size_t j = 0; j < strand.size(); ++j) {
            const Step& cur = strand[j];
            const Step& nxt = strand[(j + 1) % strand.size()];
            const Walk l = lane(cur.edge, cur.rev);
            drawn.insert(drawn.end(), l.begin(), l.end());
            const int v = m.step_to(cur);
            std::vector<char> is_end(m.links[v].size(), 0);
            for (std::size_t k = 0; k < m.links[v].size(); ++k)
                if (ch[m.links[v][k].crossed.edge]) is_end[k] = 1;
            const int from_idx = m.link_index_of_end(EdgeEnd{cur.edge, cur.rev ? 0 : 1});
            const int to_idx = m.link_index_of_end(EdgeEnd{nxt.edge, nxt.rev ? 1 : 0});
            const Walk arc = vertex_arc(v, from_idx, to_idx, is_end);
            drawn.insert(drawn.end(), arc.begin(), arc.end());
        }
        return drawn;
    }

    Walk carry(const Walk& w) const { return sub2.carry_walk(sub1.carry_walk(w)); }
};

}  // namespace

int crossing_count(const CurveDiagram& d) {
    const CombSurface& m = *d.surface;
    std::vector<std::vector<std::pair<int, int>>> passes(m.V);
    for (const Walk& w : d.walks) {
        validate_closed_walk(m, w);
        for (std::size_t j = 0; j < w.size(); ++j) {
            const Step& cur = w[j];
            const Step& nxt = w[(j + 1) % w.size()];
            const int v = m.step_to(cur);
            const int in = m.link_index_of_end(EdgeEnd{cur.edge, cur.rev ? 0 : 1});
            const int out = m.link_index_of_end(EdgeEnd{nxt.edge, nxt.rev ? 1 : 0});
            passes[v].push_back({in, out});
        }
    }
    int crossings = 0;
    for (int v = 0; v < m.V; ++v) {
        const auto& ps = passes[v];
        const int len = static_cast<int>(m.links[v].size());
        auto between = [&](int x, int lo, int hi) {
            for (int k = (lo + 1) % len; k != hi; k = (k + 1) % len)
                if (k == x) return true;
            return false;
        };
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                const int inside = (between(ps[b].first, ps[a].first, ps[a].second) ? 1 : 0) +
                                   (between(ps[b].second, ps[a].first, ps[a].second) ? 1 : 0);
                if (inside == 1) ++crossings;
            }
    }
    return crossings;
}

RealizedCurves resolve_crossings(const CurveDiagram& d) {
    const CombSurface& m = *d.surface;
    if (d.walks.empty()) throw InputError("empty diagram");
    for (const Walk& w : d.walks) validate_closed_walk(m, w);

    const HomologyBasis h = homology(d.surface);

    bool embedded = true;
    try {
        embed_multicurve(d.surface, d.walks);
    } catch (const InputError&) {
        embedded = false;
    }
    if (embedded) {
        RealizedCurves out;
        out.surface = d.surface;
        out.components = d.walks;
        out.carried_basis = h.basis_cycles;
        return out;
    }

    const Chain ch = chain_of_walks(m, d.walks);
    Materializer mat(d.surface);
    RealizedCurves out;
    out.surface = mat.sub2.sub;
    for (const Walk& b : h.basis_cycles) out.carried_basis.push_back(mat.carry(b));

    // Prefer the orientation-respecting smoothing: at every vertex pair
    // arriving ends with departing ends, greedily matching adjacent pairs.
    // This realizes the crossing resolutions of oriented strands. When the
    // diagram repeats edges or the matching is not gap-adjacent, fall back
    // to the plain chain pairing (still class-preserving).
    std::vector<Walk> strands;
    bool oriented_ok = true;
    {
        std::vector<int> mult(m.E, 0);
        for (const Walk& w : d.walks)
            for (const Step& st : w) mult[st.edge]++;
        for (int e = 0; e < m.E; ++e)
            if (mult[e] > 1) oriented_ok = false;
    }
    if (oriented_ok) {
        std::vector<std::map<int, int>> partner(m.V);
        for (int v = 0; v < m.V && oriented_ok; ++v) {
            // Ends at v with direction: +1 departing, -1 arriving.
            std::vector<std::pair<int, int>> items;  // (link index, dir)
            for (std::size_t k = 0; k < m.links[v].size(); ++k) {
                const EdgeEnd x = m.links[v][k].crossed;
                if (!ch[x.edge]) continue;
                for (const Walk& w : d.walks)
                    for (const Step& st : w) {
                        if (st.edge != x.edge) continue;
                        const int depart_end = st.rev ? 1 : 0;
                        items.push_back({static_cast<int>(k),
                                         x.end == depart_end ? +1 : -1});
                    }
            }
            std::sort(items.begin(), items.end());
            std::vector<char> taken(items.size(), 0);
            std::size_t remaining = items.size();
            while (remaining > 0) {
                bool matched = false;
                for (std::size_t a = 0; a < items.size() && !matched; ++a) {
                    if (taken[a]) continue;
                    std::size_t b = (a + 1) % items.size();
                    while (taken[b]) b = (b + 1) % items.size();
                    if (b == a) break;
                    if (items[a].second != items[b].second) {
                        partner[v][items[a].first] = items[b].first;
                        partner[v][items[b].first] = items[a].first;
                        taken[a] = taken[b] = 1;
                        remaining -= 2;
                        matched = true;
                    }
                }
                if (!matched) {
                    oriented_ok = false;
                    break;
                }
            }
        }
        if (oriented_ok) {
            // Gap-adjacency: every matched pair must have no other end
            // strictly between them on one side.
            for (int v = 0; v < m.V && oriented_ok; ++v) {
                std::vector<char> is_end(m.links[v].size(), 0);
                for (std::size_t k = 0; k < m.links[v].size(); ++k)
                    if (ch[m.links[v][k].crossed.edge]) is_end[k] = 1;
                const int len = static_cast<int>(m.links[v].size());
                for (const auto& [a, b] : partner[v]) {
                    bool clear = true;
                    for (int k = (a + 1) % len; k != b; k = (k + 1) % len)
                        if (is_end[k]) clear = false;
                    bool clear2 = true;
                    for (int k = (b + 1) % len; k != a; k = (k + 1) % len)
                        if (is_end[k]) clear2 = false;
                    if (!clear && !clear2) oriented_ok = false;
                }
            }
        }
        if (oriented_ok) {
            // Trace with the oriented partners.
            std::set<std::pair<int, int>> used;
            for (int v0 = 0; v0 < m.V; ++v0) {
                for (const auto& [k0, ignored] : partner[v0]) {
                    (void)ignored;
                    // Depart only from ends where the strand leaves v0.
                    if (used.count({v0, k0})) continue;
                    Walk w;
                    int v = v0, k = k0;
                    bool good = true;
                    do {
                        used.insert({v, k});
                        const EdgeEnd x = m.links[v][k].crossed;
                        w.push_back(Step{x.edge, x.end == 1});
                        v = m.edge_vertex(x.edge, 1 - x.end);
                        const int arrive =
                            m.link_index_of_end(EdgeEnd{x.edge, 1 - x.end});
                        used.insert({v, arrive});
                        auto it = partner[v].find(arrive);
                        if (it == partner[v].end()) {
                            good = false;
                            break;
                        }
                        k = it->second;
                    } while (!(v == v0 && k == k0));
                    if (!good) {
                        oriented_ok = false;
                        break;
                    }
                    strands.push_back(std::move(w));
                }
                if (!oriented_ok) break;
            }
        }
    }
    if (!oriented_ok) strands = trace_chain(m, ch);
    for (const Walk& strand : strands) out.components.push_back(mat.draw_strand(m, ch, strand));

    embed_multicurve(out.surface, out.components);
    Z2Class1 before(h.rank()), after(h.rank());
    for (const Walk& w : d.walks)
        for (std::size_t i = 0; i < h.rank(); ++i)
            before.set(i, before.get(i) ^ intersection_mod2(m, w, h.basis_cycles[i]));
    for (const Walk& w : out.components)
        for (std::size_t i = 0; i < h.rank(); ++i)
            after.set(i,
                      after.get(i) ^ intersection_mod2(*out.surface, w, out.carried_basis[i]));
    if (!(before == after)) throw InternalError("resolution changed the homology class");
    return out;
}

Multicurve connect_components(const Multicurve& c) {
    const CombSurface& m = *c.surface;
    if (c.components.size() <= 1) return c;
    Chain ch = chain_of_walks(m, c.components);
    const Chain from = chain_of_walks(m, {c.components[0]});
    Chain target(m.E, 0);
    for (std::size_t i = 1; i < c.components.size(); ++i)
        for (const Step& s : c.components[i]) target[s.edge] = 1;
    const std::vector<char> no_block_v(m.V, 0);
    const Chain no_block_e(m.E, 0);
    if (!strip_surgery(m, ch, from, target, no_block_v, no_block_e))
        throw InputError("no connecting corridor exists");
    Multicurve merged = embed_multicurve(c.surface, trace_chain(m, ch));
    if (merged.components.size() != c.components.size() - 1)
        throw InternalError("surgery did not reduce the component count by one");
    return merged;
}

RealizedCurves realize_classes(const SurfacePtr& mp, const std::vector<Z2Class1>& classes) {
    const HomologyBasis h0 = homology(mp);
    for (const Z2Class1& x : classes)
        if (x.size() != h0.rank()) throw InputError("class has wrong dimension");
    {
        Gf2Mat mat;
        for (const Z2Class1& x : classes) mat.add_row(x);
        if (!classes.empty() && mat.rank() != classes.size())
            throw InputError("classes are linearly dependent");
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (cup(h0, classes[i], classes[j]) != 0)
                throw InputError("classes have nonzero pairwise cup product");

    if (classes.empty()) {
        RealizedCurves out;
        out.surface = mp;
        out.carried_basis = h0.basis_cycles;
        return out;
    }

    SurfacePtr stage = mp;
    std::vector<Walk> basis = h0.basis_cycles;
    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt < 4; ++attempt) {
        const Subdivision sub = subdivide(stage);
        stage = sub.sub;
        for (Walk& b : basis) b = sub.carry_walk(b);
        const CombSurface& m = *stage;
        try {
            // Phase 1: vertex-disjoint connected chains, one per class.
            std::vector<Chain> chains;
            std::vector<char> frozen_v(m.V, 0);
            Chain frozen_e(m.E, 0);
            for (const Z2Class1& want : classes) {
                // Spanning forest of the skeleton minus frozen cells.
                std::vector<int> parent(m.V, -1), parent_edge(m.V, -1), depth(m.V, -1);
                for (int v0 = 0; v0 < m.V; ++v0) {
                    if (frozen_v[v0] || depth[v0] != -1) continue;
                    depth[v0] = 0;
                    std::queue<int> bfs;
                    bfs.push(v0);
                    while (!bfs.empty()) {
                        const int u = bfs.front();
                        bfs.pop();
                        for (const LinkEntry& le : m.links[u]) {
                            const int e = le.crossed.edge;
                            if (frozen_e[e]) continue;
                            const int w = m.edge_vertex(e, 1 - le.crossed.end);
                            if (frozen_v[w] || depth[w] != -1) continue;
                            depth[w] = depth[u] + 1;
                            parent[w] = u;
                            parent_edge[w] = e;
                            bfs.push(w);
                        }
                    }
                }
                auto tree_step_up = [&](int v) {
                    const int e = parent_edge[v];
                    return Step{e, m.edge_vertex(e, 0) != v};
                };
                std::vector<Walk> cycles;
                std::vector<Gf2Vec> evals;
                for (int e = 0; e < m.E; ++e) {
                    if (frozen_e[e]) continue;
                    const int u = m.edge_vertex(e, 0), w = m.edge_vertex(e, 1);
                    if (frozen_v[u] || frozen_v[w]) continue;
                    if (parent_edge[u] == e || parent_edge[w] == e) continue;
                    if (depth[u] == -1 || depth[w] == -1) continue;
                    Walk cyc;
                    cyc.push_back(Step{e, false});
                    int x = w, y = u;
                    Walk up_x, up_y;
                    while (depth[x] > depth[y]) {
                        up_x.push_back(tree_step_up(x));
                        x = parent[x];
                    }
                    while (depth[y] > depth[x]) {
                        up_y.push_back(tree_step_up(y));
                        y = parent[y];
                    }
                    while (x != y) {
                        up_x.push_back(tree_step_up(x));
                        up_y.push_back(tree_step_up(y));
                        x = parent[x];
                        y = parent[y];
                    }
                    cyc.insert(cyc.end(), up_x.begin(), up_x.end());
                    for (auto it = up_y.rbegin(); it != up_y.rend(); ++it)
                        cyc.push_back(Step{it->edge, !it->rev});
                    cycles.push_back(cyc);
                    Gf2Vec ev(basis.size());
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        ev.set(i, intersection_mod2(m, cyc, basis[i]));
                    evals.push_back(ev);
                }
                const auto sol = gf2_solve_combination(evals, want);
                if (!sol) throw InputError("no representative avoiding earlier curves");
                Chain z(m.E, 0);
                for (std::size_t i = 0; i < cycles.size(); ++i)
                    if (sol->get(i))
                        for (const Step& s : cycles[i]) z[s.edge] ^= 1;

                // Drop null sub-collections of components.
                for (bool changed = true; changed;) {
                    changed = false;
                    std::vector<Chain> parts = chain_components(m, z);
                    if (parts.size() <= 1) break;
                    std::vector<Gf2Vec> pev;
                    for (const Chain& p : parts) pev.push_back(chain_class(m, p, basis));
                    for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
                        std::vector<Gf2Vec> others;
                        for (std::size_t j = 0; j < parts.size(); ++j)
                            if (j != i) others.push_back(pev[j]);
                        const auto dep = gf2_solve_combination(others, pev[i]);
                        if (!dep) continue;
                        for (int e = 0; e < m.E; ++e)
                            if (parts[i][e]) z[e] ^= 1;
                        std::size_t k = 0;
                        for (std::size_t j = 0; j < parts.size(); ++j) {
                            if (j == i) continue;
                            if (dep->get(k))
                                for (int e = 0; e < m.E; ++e)
                                    if (parts[j][e]) z[e] ^= 1;
                            ++k;
                        }
                        changed = true;
                    }
                }

                // Join the remaining pieces with surgery corridors.
                for (;;) {
                    std::vector<Chain> parts = chain_components(m, z);
                    if (parts.size() <= 1) break;
                    Chain rest(m.E, 0);
                    for (std::size_t j = 1; j < parts.size(); ++j)
                        for (int e = 0; e < m.E; ++e)
                            rest[e] = static_cast<char>(rest[e] | parts[j][e]);
                    if (!strip_surgery(m, z, parts[0], rest, frozen_v, frozen_e))
                        throw InputError("no corridor to connect curve pieces");
                }
                if (!(chain_class(m, z, basis) == want))
                    throw InternalError("realized chain has the wrong class");
                chains.push_back(z);
                const auto on = chain_vertices(m, z);
                for (int v = 0; v < m.V; ++v)
                    frozen_v[v] = static_cast<char>(frozen_v[v] | on[v]);
                for (int e = 0; e < m.E; ++e)
                    frozen_e[e] = static_cast<char>(frozen_e[e] | z[e]);
            }

            // Phase 2: pick pairings that trace each chain as one strand.
            std::vector<std::vector<int>> phases(chains.size());
            for (std::size_t i = 0; i < chains.size(); ++i) {
                std::vector<int> phase(m.V, 0);
                for (int tries = 0; tries < m.V + 8; ++tries) {
                    const auto strands = trace_chain(m, chains[i], &phase);
                    if (strands.size() <= 1) break;
                    bool improved = false;
                    const auto on = chain_vertices(m, chains[i]);
                    for (int v = 0; v < m.V && !improved; ++v) {
                        if (!on[v]) continue;
                        phase[v] ^= 1;
                        if (trace_chain(m, chains[i], &phase).size() < strands.size())
                            improved = true;
                        else
                            phase[v] ^= 1;
                    }
                    if (!improved) throw InputError("could not merge curve strands");
                }
                if (trace_chain(m, chains[i], &phase).size() != 1)
                    throw InputError("could not merge curve strands");
                phases[i] = phase;
            }

            // Phase 3: materialize into the double subdivision.
            Materializer mat(stage);
            RealizedCurves out;
            out.surface = mat.sub2.sub;
            for (const Walk& b : basis) out.carried_basis.push_back(mat.carry(b));
            for (std::size_t i = 0; i < chains.size(); ++i) {
                const Walk strand = trace_chain(m, chains[i], &phases[i])[0];
                out.components.push_back(mat.draw_strand(m, chains[i], strand));
            }
            embed_multicurve(out.surface, out.components);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                Z2Class1 got(h0.rank());
                for (std::size_t k = 0; k < h0.rank(); ++k)
                    got.set(k, intersection_mod2(*out.surface, out.components[i],
                                                 out.carried_basis[k]));
                if (!(got == classes[i]))
                    throw InternalError("realized curve has the wrong class");
            }
            return out;
        } catch (const InputError& err) {
            last_error = err.what();
            continue;
        }
    }
    throw InputError(std::string("realize_classes failed: ") + last_error);
}

std::vector<Z2Class1> crosscap_basis(const HomologyBasis& h) {
    if (h.surface->orientable)
        throw InputError("crosscap basis needs a nonorientable surface");
    const std::size_t r = h.rank();
    std::vector<Z2Class1> space;
    for (std::size_t i = 0; i < r; ++i) space.push_back(h.class_of_basis(i));
    std::vector<Z2Class1> basis;
    while (!space.empty()) {
        int pick = -1;
        for (std::size_t i = 0; i < space.size() && pick < 0; ++i)
            if (cup(h, space[i], space[i]) == 1) pick = static_cast<int>(i);
        if (pick >= 0) {
            const Z2Class1 b = space[static_cast<std::size_t>(pick)];
            space.erase(space.begin() + pick);
            std::vector<Z2Class1> next;
            for (const Z2Class1& u : space) {
                Z2Class1 u2 = u;
                if (cup(h, u, b)) u2 ^= b;
                if (!u2.is_zero()) next.push_back(u2);
            }
            // Keep an independent spanning set of the complement.
            space.clear();
            for (const Z2Class1& u : next) {
                Gf2Mat mt;
                for (const auto& kept : space) mt.add_row(kept);
                mt.add_row(u);
                if (mt.rank() == space.size() + 1) space.push_back(u);
            }
            basis.push_back(b);
            continue;
        }
        // Even remainder: fold a symplectic pair into the last unit vector.
        if (basis.empty()) throw InternalError("no odd vector in a nonorientable form");
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < space.size() && ia == -1; ++i)
            for (std::size_t j = i + 1; j < space.size(); ++j)
                if (cup(h, space[i], space[j]) == 1) {
                    ia = static_cast<int>(i);
                    ib = static_cast<int>(j);
                    break;
                }
        if (ia == -1) throw InternalError("degenerate residual form");
        Z2Class1 b = basis.back();
        basis.pop_back();
        const Z2Class1 a = space[static_cast<std::size_t>(ia)];
        const Z2Class1 c2 = space[static_cast<std::size_t>(ib)];
        space.erase(space.begin() + ib);
        space.erase(space.begin() + ia);
        basis.push_back(b ^ a);
        basis.push_back(b ^ c2);
        basis.push_back(b ^ a ^ c2);
        for (Z2Class1& u : space)
            for (std::size_t t = basis.size() - 3; t < basis.size(); ++t)
                if (cup(h, u, basis[t])) u ^= basis[t];
    }
    if (basis.size() != r) throw InternalError("crosscap basis has wrong size");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (cup(h, basis[i], basis[j]) != (i == j ? 1 : 0))
                throw InternalError("crosscap basis is not orthonormal");
    Z2Class1 sum(r);
    for (const auto& b : basis) sum ^= b;
    if (!(sum == h.w1_vector)) throw InternalError("crosscap basis does not sum to w1");
    return basis;
}

}  // namespace foldcusp
