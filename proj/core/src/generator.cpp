#include "foldcusp/generator.hpp"

#include <algorithm>
#include <queue>

#include "foldcusp/homology.hpp"

namespace foldcusp {

SurfacePtr random_surface(Rng& rng, int max_genus) {
    const bool orientable = rng.coin();
    const int genus = orientable ? static_cast<int>(rng.below(max_genus + 1))
                                 : 1 + static_cast<int>(rng.below(max_genus));
    SurfacePtr m = canonical_surface(SurfaceClass{orientable, genus});
    if (rng.below(3) == 0) m = subdivide(m).sub;
    return m;
}

std::optional<Multicurve> random_curve(Rng& rng, const SurfacePtr& mp, bool separating) {
    const CombSurface& m = *mp;
    if (!separating) {
        // Fundamental cycle of a random non-tree edge over a randomized
        // spanning tree; retried until the class is nonzero.
        const HomologyBasis h = homology(mp);
        for (int attempt = 0; attempt < 24; ++attempt) {
            std::vector<int> parent(m.V, -1), parent_edge(m.V, -1), depth(m.V, -1);
            const int root = static_cast<int>(rng.below(m.V));
            depth[root] = 0;
            std::vector<int> frontier{root};
            while (!frontier.empty()) {
                const std::size_t pick = rng.below(frontier.size());
                std::swap(frontier[pick], frontier.back());
                const int u = frontier.back();
                frontier.pop_back();
                std::vector<std::pair<int, int>> nbrs;
                for (const LinkEntry& le : m.links[u]) {
                    const int e = le.crossed.edge;
                    const int w = m.edge_vertex(e, 1 - le.crossed.end);
                    if (depth[w] == -1) nbrs.push_back({e, w});
                }
                for (auto [e, w] : nbrs) {
                    if (depth[w] != -1) continue;
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    parent_edge[w] = e;
                    frontier.push_back(w);
                }
            }
            std::vector<int> nontree;
            for (int e = 0; e < m.E; ++e) {
                const int u = m.edge_vertex(e, 0), w = m.edge_vertex(e, 1);
                if (parent_edge[u] != e && parent_edge[w] != e) nontree.push_back(e);
            }
            if (nontree.empty()) continue;
            const int e = nontree[rng.below(nontree.size())];
            auto step_up = [&](int v) { return Step{parent_edge[v], m.edge_vertex(parent_edge[v], 0) != v}; };
            Walk cyc;
            cyc.push_back(Step{e, false});
            int x = m.edge_vertex(e, 1), y = m.edge_vertex(e, 0);
            Walk up_x, up_y;
            while (depth[x] > depth[y]) {
                up_x.push_back(step_up(x));
                x = parent[x];
            }
            while (depth[y] > depth[x]) {
                up_y.push_back(step_up(y));
                y = parent[y];
            }
            while (x != y) {
                up_x.push_back(step_up(x));
                up_y.push_back(step_up(y));
                x = parent[x];
                y = parent[y];
            }
            cyc.insert(cyc.end(), up_x.begin(), up_x.end());
            for (auto it = up_y.rbegin(); it != up_y.rend(); ++it)
                cyc.push_back(Step{it->edge, !it->rev});
            if (h.class_of(cyc).is_zero()) continue;
            return embed_multicurve(mp, {cyc});
        }
        return std::nullopt;
    }

    // Separating: boundary of a random connected set of faces, accepted
    // when it is embedded (every vertex meets at most two boundary edges).
    for (int attempt = 0; attempt < 24; ++attempt) {
        const int want = 1 + static_cast<int>(rng.below(std::max(1, m.F / 3)));
        std::vector<char> in(m.F, 0);
        std::vector<int> frontier{static_cast<int>(rng.below(m.F))};
        in[frontier[0]] = 1;
        int size = 1;
        while (size < want && !frontier.empty()) {
            const std::size_t pick = rng.below(frontier.size());
            const int f = frontier[pick];
            std::vector<int> nbrs;
            for (const SideRef& s : m.faces[f])
                for (const EdgeOcc& o : m.edge_occs[s.edge])
                    if (!in[o.face]) nbrs.push_back(o.face);
            if (nbrs.empty()) {
                std::swap(frontier[pick], frontier.back());
                frontier.pop_back();
                continue;
            }
            const int g = nbrs[rng.below(nbrs.size())];
            in[g] = 1;
            frontier.push_back(g);
            ++size;
        }
        std::vector<char> bd(m.E, 0);
        for (int e = 0; e < m.E; ++e) {
            const int a = in[m.edge_occs[e][0].face];
            const int b = in[m.edge_occs[e][1].face];
            if (a != b) bd[e] = 1;
        }
        if (std::none_of(bd.begin(), bd.end(), [](char c) { return c != 0; })) continue;
        // Embeddedness: each vertex carries 0 or 2 boundary ends.
        bool ok = true;
        for (int v = 0; v < m.V && ok; ++v) {
            int deg = 0;
            for (const LinkEntry& le : m.links[v]) deg += bd[le.crossed.edge];
            if (deg != 0 && deg != 2) ok = false;
        }
        if (!ok) continue;
        // Trace boundary cycles through the degree-2 structure.
        std::vector<Walk> comps;
        std::vector<char> used(m.E, 0);
        for (int e0 = 0; e0 < m.E; ++e0) {
            if (!bd[e0] || used[e0]) continue;
            Walk w;
            int e = e0;
            bool rev = false;  // traverse e0 tail -> head
            int v = m.edge_vertex(e0, 1);
            for (;;) {
                used[e] = 1;
                w.push_back(Step{e, rev});
                int enext = -1;
                for (const LinkEntry& le : m.links[v])
                    if (bd[le.crossed.edge] && le.crossed.edge != e)
                        enext = le.crossed.edge;
                if (enext == -1) break;  // single-edge loop component
                rev = m.edge_vertex(enext, 0) != v;
                v = m.edge_vertex(enext, rev ? 0 : 1);
                e = enext;
                if (e == e0) break;
            }
            comps.push_back(w);
        }
        try {
            return embed_multicurve(mp, comps);
        } catch (const InputError&) {
            continue;
        }
    }
    return std::nullopt;
}

std::vector<CuspSpec> random_cusps(Rng& rng, const Multicurve& c, int count) {
    const CombSurface& m = *c.surface;
    std::vector<CuspSpec> out;
    for (int i = 0; i < count; ++i) {
        CuspSpec p;
        p.component = static_cast<int>(rng.below(c.components.size()));
        p.edge_index =
            static_cast<int>(rng.below(c.components[p.component].size()));
        const int e = c.components[p.component][p.edge_index].edge;
        p.side_face = m.edge_occs[e][rng.coin() ? 1 : 0].face;
        out.push_back(p);
    }
    return out;
}

}  // namespace foldcusp
