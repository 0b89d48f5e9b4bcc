#include "foldcusp/homology.hpp"

#include <algorithm>
#include <queue>

namespace foldcusp {

void validate_closed_walk(const CombSurface& m, const Walk& w) {
    if (w.empty()) throw InputError("empty walk");
    for (const Step& s : w)
        if (s.edge < 0 || s.edge >= m.E) throw InputError("walk step references unknown edge");
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Step& cur = w[j];
        const Step& nxt = w[(j + 1) % w.size()];
        if (m.step_to(cur) != m.step_from(nxt))
            throw InputError("walk is not closed: consecutive steps do not share a vertex");
    }
}

namespace {

int arrival_end(const Step& s) { return s.rev ? 0 : 1; }
int departure_end(const Step& s) { return s.rev ? 1 : 0; }

// Index of an occurrence within edge_occs[e].
int occ_index(const CombSurface& m, int e, const Corner& flank, int end) {
    for (int k = 0; k < 2; ++k) {
        const Corner c = m.flank_corner(m.edge_occs[e][k], end);
        if (c == flank) return k;
    }
    throw InternalError("corner does not flank the given edge end");
}

}  // namespace

int intersection_mod2(const CombSurface& m, const Walk& a, const Walk& b) {
    validate_closed_walk(m, a);
    validate_closed_walk(m, b);
    std::vector<uint8_t> mult(m.E, 0);
    for (const Step& s : b) mult[s.edge] ^= 1;

    int total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Step& cur = a[j];
        const Step& nxt = a[(j + 1) % a.size()];
        const int v = m.step_to(cur);
        const Corner out = m.flank_corner(m.edge_occs[cur.edge][0], arrival_end(cur));
        const Corner in = m.flank_corner(m.edge_occs[nxt.edge][0], departure_end(nxt));
        const auto& link = m.links[v];
        const int len = static_cast<int>(link.size());
        int idx = m.link_index_of_corner(out);
        const int target = m.link_index_of_corner(in);
        while (idx != target) {
            total ^= mult[link[idx].crossed.edge];
            idx = (idx + 1) % len;
        }
    }
    return total;
}

FaceWalk pushoff_face_walk(const CombSurface& m, const Walk& w) {
    validate_closed_walk(m, w);
    FaceWalk fw;
    fw.faces.push_back(m.edge_occs[w[0].edge][0].face);
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Step& cur = w[j];
        const Step& nxt = w[(j + 1) % w.size()];
        const int v = m.step_to(cur);
        const Corner out = m.flank_corner(m.edge_occs[cur.edge][0], arrival_end(cur));
        const Corner in = m.flank_corner(m.edge_occs[nxt.edge][0], departure_end(nxt));
        const auto& link = m.links[v];
        const int len = static_cast<int>(link.size());
        int idx = m.link_index_of_corner(out);
        const int target = m.link_index_of_corner(in);
        while (idx != target) {
            const EdgeEnd x = link[idx].crossed;
            const Corner before = link[idx].corner;
            const Corner after = link[(idx + 1) % len].corner;
            FaceWalk::Crossing c;
            c.end = x;
            c.from_occ = occ_index(m, x.edge, before, x.end);
            c.to_occ = occ_index(m, x.edge, after, x.end);
            fw.crossings.push_back(c);
            fw.faces.push_back(after.face);
            idx = (idx + 1) % len;
        }
    }
    if (fw.faces.back() != fw.faces.front())
        throw InternalError("push-off face walk did not close up");
    return fw;
}

bool walk_one_sided(const CombSurface& m, const Walk& w) {
    validate_closed_walk(m, w);
    // Transport a side (an occurrence choice per step) around the walk.
    int occ = 0;  // side of w[0]
    const int occ_start = occ;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Step& cur = w[j];
        const Step& nxt = w[(j + 1) % w.size()];
        const int v = m.step_to(cur);
        const EdgeEnd q1{cur.edge, arrival_end(cur)};
        const EdgeEnd q2{nxt.edge, departure_end(nxt)};
        const Corner gamma = m.flank_corner(m.edge_occs[cur.edge][occ], q1.end);
        const auto& link = m.links[v];
        const int len = static_cast<int>(link.size());
        int idx = m.link_index_of_corner(gamma);
        // Choose the direction that does not cross q1 first.
        const bool q1_after = (link[idx].crossed == q1);
        int dir = q1_after ? -1 : +1;
        // Walk until the next crossing in direction `dir` would be q2;
        // the corner we stand at then flanks q2 on our side.
        int guard = 0;
        while (true) {
            const int cross_idx = (dir == +1) ? idx : (idx - 1 + len) % len;
            const EdgeEnd x = link[cross_idx].crossed;
            if (x == q2) break;
            if (x == q1) throw InternalError("side transport crossed the walk");
            idx = (idx + dir + len) % len;
            if (++guard > len) throw InternalError("side transport did not terminate");
        }
        occ = occ_index(m, nxt.edge, link[idx].corner, q2.end);
    }
    return occ != occ_start;
}

HomologyBasis homology(const SurfacePtr& mp) {
    const CombSurface& m = *mp;
    HomologyBasis h;
    h.surface = mp;
    h.w2_bit = ((m.euler_char % 2) + 2) % 2;

    // Lexicographic BFS spanning tree of the 1-skeleton.
    std::vector<int> parent_edge(m.V, -1);
    std::vector<int> parent(m.V, -1);
    std::vector<int> depth(m.V, -1);
    std::vector<std::vector<std::pair<int, int>>> inc(m.V);  // (edge, other endpoint)
    for (int e = 0; e < m.E; ++e) {
        const int u = m.edge_vertex(e, 0), v = m.edge_vertex(e, 1);
        inc[u].push_back({e, v});
        inc[v].push_back({e, u});
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());
    std::queue<int> bfs;
    bfs.push(0);
    depth[0] = 0;
    std::vector<uint8_t> in_tree(m.E, 0);
    while (!bfs.empty()) {
        const int u = bfs.front();
        bfs.pop();
        for (auto [e, v] : inc[u]) {
            if (depth[v] == -1) {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                parent_edge[v] = e;
                in_tree[e] = 1;
                bfs.push(v);
            }
        }
    }

    auto tree_step_up = [&](int v) -> Step {
        const int e = parent_edge[v];
        // Traversal from v towards parent[v].
        return Step{e, m.edge_vertex(e, 0) != v};
    };
    auto tree_path = [&](int from, int to) -> Walk {
        // Path in the tree from `from` to `to`.
        Walk up_from, up_to;
        int a = from, b = to;
        while (depth[a] > depth[b]) {
            up_from.push_back(tree_step_up(a));
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            up_to.push_back(tree_step_up(b));
            b = parent[b];
        }
        while (a != b) {
            up_from.push_back(tree_step_up(a));
            up_to.push_back(tree_step_up(b));
            a = parent[a];
            b = parent[b];
        }
        Walk path = up_from;
        for (auto it = up_to.rbegin(); it != up_to.rend(); ++it)
            path.push_back(Step{it->edge, !it->rev});
        return path;
    };

    std::vector<int> nontree;
    for (int e = 0; e < m.E; ++e)
        if (!in_tree[e]) nontree.push_back(e);
    std::vector<int> cycle_index(m.E, -1);
    for (std::size_t i = 0; i < nontree.size(); ++i) cycle_index[nontree[i]] = static_cast<int>(i);

    std::vector<Walk> fundamental;
    for (int e : nontree) {
        Walk c;
        c.push_back(Step{e, false});
        Walk back = tree_path(m.edge_vertex(e, 1), m.edge_vertex(e, 0));
        c.insert(c.end(), back.begin(), back.end());
        fundamental.push_back(std::move(c));
    }

    // Face boundaries in fundamental-cycle coordinates: the indicator of the
    // non-tree edges with odd multiplicity on the boundary.
    std::vector<Gf2Vec> brows;
    for (int f = 0; f < m.F; ++f) {
        Gf2Vec row(nontree.size());
        for (const SideRef& s : m.faces[f])
            if (cycle_index[s.edge] != -1) row.flip(cycle_index[s.edge]);
        brows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots = gf2_echelon(brows);

    std::vector<uint8_t> is_pivot(nontree.size(), 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;
    for (std::size_t i = 0; i < nontree.size(); ++i)
        if (!is_pivot[i]) h.basis_cycles.push_back(fundamental[i]);

    const std::size_t r = h.basis_cycles.size();
    if (static_cast<int>(r) != 2 - m.euler_char)
        throw InternalError("homology rank does not match 2 - chi");

    h.cup_matrix = Gf2Mat(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            const int v = intersection_mod2(m, h.basis_cycles[i], h.basis_cycles[j]);
            h.cup_matrix.set(i, j, v);
            h.cup_matrix.set(j, i, v);
        }
    if (r > 0) {
        auto inv = h.cup_matrix.inverse();
        if (!inv) throw InternalError("degenerate intersection form");
        h.cup_inverse = *inv;
    }

    h.w1_vector = Z2Class1(r);
    for (std::size_t i = 0; i < r; ++i)
        h.w1_vector.set(i, walk_one_sided(m, h.basis_cycles[i]) ? 1 : 0);
    return h;
}

Z2Class1 HomologyBasis::class_of(const Walk& w) const {
    Z2Class1 x(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        x.set(i, intersection_mod2(*surface, w, basis_cycles[i]));
    return x;
}

Z2Class1 HomologyBasis::class_of(const std::vector<Walk>& ws) const {
    Z2Class1 x(rank());
    for (const Walk& w : ws) x ^= class_of(w);
    return x;
}

Z2Class1 HomologyBasis::class_of_basis(std::size_t i) const {
    Z2Class1 x(rank());
    for (std::size_t j = 0; j < rank(); ++j) x.set(j, cup_matrix.get(j, i));
    return x;
}

int HomologyBasis::eval_on_basis(const Z2Class1& x, std::size_t i) const {
    return x.get(i);
}

Gf2Vec HomologyBasis::coefficients(const Z2Class1& x) const {
    if (x.size() != rank()) throw InputError("class has wrong dimension");
    if (rank() == 0) return Gf2Vec(0);
    return cup_inverse.mul(x);
}

int cup(const HomologyBasis& h, const Z2Class1& x, const Z2Class1& y) {
    if (x.size() != h.rank() || y.size() != h.rank())
        throw InputError("cup: class dimension mismatch");
    if (h.rank() == 0) return 0;
    return x.dot(h.cup_inverse.mul(y));
}

}  // namespace foldcusp
