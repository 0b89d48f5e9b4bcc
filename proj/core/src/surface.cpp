#include "foldcusp/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace foldcusp {

int CombSurface::edge_id(const std::string& sym) const {
    for (int e = 0; e < E; ++e)
        if (edge_names[e] == sym) return e;
    throw InputError("unknown edge symbol: " + sym);
}

int CombSurface::edge_vertex(int e, int end) const { return end_vertex_[e][end]; }

int CombSurface::side_start_vertex(const EdgeOcc& o) const {
    return edge_vertex(faces[o.face][o.pos].edge, o.rev ? 1 : 0);
}

int CombSurface::side_end_vertex(const EdgeOcc& o) const {
    return edge_vertex(faces[o.face][o.pos].edge, o.rev ? 0 : 1);
}

Corner CombSurface::flank_corner(const EdgeOcc& o, int end) const {
    // Start end of the side -> corner at (face,pos); finish end -> next corner.
    const int start_end = o.rev ? 1 : 0;
    if (end == start_end) return Corner{o.face, o.pos};
    return Corner{o.face, (o.pos + 1) % face_len(o.face)};
}

const EdgeOcc& CombSurface::other_occ(int e, int face, int pos) const {
    const auto& occ = edge_occs[e];
    if (occ[0].face == face && occ[0].pos == pos) return occ[1];
    return occ[0];
}

int CombSurface::link_index_of_corner(const Corner& c) const {
    return corner_link_index_[c.face][c.pos];
}

int CombSurface::link_index_of_end(const EdgeEnd& x) const {
    return end_link_index_[x.edge][x.end];
}

int CombSurface::vertex_of_end(const EdgeEnd& x) const {
    return end_vertex_[x.edge][x.end];
}

bool CombSurface::triangulated() const {
    return std::all_of(faces.begin(), faces.end(),
                       [](const auto& w) { return w.size() == 3; });
}

GluingScheme CombSurface::scheme() const {
    GluingScheme s;
    s.faces.resize(F);
    for (int f = 0; f < F; ++f)
        for (const SideRef& sr : faces[f])
            s.faces[f].push_back(SignedSym{edge_names[sr.edge], sr.rev});
    return s;
}

SurfaceClass classify_by_chi(bool orientable, int chi) {
    if (orientable) {
        if (chi > 2 || (chi % 2) != 0)
            throw InternalError("orientable surface with invalid chi");
        return SurfaceClass{true, (2 - chi) / 2};
    }
    if (chi > 1) throw InternalError("nonorientable surface with invalid chi");
    return SurfaceClass{false, 2 - chi};
}

namespace {

// Flank selector inside the orbit walk.
enum class Flank { P, Q };  // P: end of side pos-1, Q: start of side pos

EdgeEnd flank_end(const CombSurface& m, const Corner& c, Flank fl) {
    const auto& word = m.faces[c.face];
    const int len = static_cast<int>(word.size());
    if (fl == Flank::Q) {
        const SideRef& s = word[c.pos];
        return EdgeEnd{s.edge, s.rev ? 1 : 0};
    }
    const int prev = (c.pos + len - 1) % len;
    const SideRef& s = word[prev];
    return EdgeEnd{s.edge, s.rev ? 0 : 1};
}

int flank_side_pos(const CombSurface& m, const Corner& c, Flank fl) {
    const int len = m.face_len(c.face);
    return fl == Flank::Q ? c.pos : (c.pos + len - 1) % len;
}

}  // namespace

SurfacePtr build_surface(const GluingScheme& scheme) {
    auto surf = std::make_shared<CombSurface>();
    CombSurface& m = *surf;

    if (scheme.faces.empty()) throw InputError("scheme has no faces");

    // Intern edge symbols in order of first appearance.
    std::map<std::string, int> ids;
    for (const auto& word : scheme.faces) {
        if (word.empty()) throw InputError("empty face word");
        for (const auto& ss : word) {
            if (ss.sym.empty()) throw InputError("empty edge symbol");
            if (!ids.count(ss.sym)) {
                ids[ss.sym] = static_cast<int>(m.edge_names.size());
                m.edge_names.push_back(ss.sym);
            }
        }
    }
    m.E = static_cast<int>(m.edge_names.size());
    m.F = static_cast<int>(scheme.faces.size());

    std::vector<std::vector<EdgeOcc>> occs(m.E);
    m.faces.resize(m.F);
    for (int f = 0; f < m.F; ++f) {
        const auto& word = scheme.faces[f];
        for (int p = 0; p < static_cast<int>(word.size()); ++p) {
            const int e = ids[word[p].sym];
            m.faces[f].push_back(SideRef{e, word[p].rev});
            occs[e].push_back(EdgeOcc{f, p, word[p].rev});
        }
    }
    m.edge_occs.resize(m.E);
    for (int e = 0; e < m.E; ++e) {
        if (occs[e].size() != 2)
            throw InputError("edge symbol '" + m.edge_names[e] + "' used " +
                             std::to_string(occs[e].size()) + " times, expected 2");
        m.edge_occs[e] = {occs[e][0], occs[e][1]};
    }

    // Connectivity of the face graph through shared edges.
    {
        std::vector<int> comp(m.F, -1);
        std::queue<int> bfs;
        bfs.push(0);
        comp[0] = 0;
        while (!bfs.empty()) {
            const int f = bfs.front();
            bfs.pop();
            for (const SideRef& s : m.faces[f]) {
                for (const EdgeOcc& o : m.edge_occs[s.edge]) {
                    if (comp[o.face] == -1) {
                        comp[o.face] = 0;
                        bfs.push(o.face);
                    }
                }
            }
        }
        for (int f = 0; f < m.F; ++f)
            if (comp[f] == -1) throw InputError("disconnected surface scheme");
    }

    // Orientation compatibility per edge: +1 when the two occurrences
    // traverse the edge oppositely.
    m.edge_or.resize(m.E);
    for (int e = 0; e < m.E; ++e)
        m.edge_or[e] = (m.edge_occs[e][0].rev != m.edge_occs[e][1].rev) ? +1 : -1;

    // Orientability: consistent 2-coloring of faces across edge gluings.
    {
        std::vector<int> color(m.F, 0);
        color[0] = 1;
        std::queue<int> bfs;
        bfs.push(0);
        bool ok = true;
        while (!bfs.empty() && ok) {
            const int f = bfs.front();
            bfs.pop();
            for (const SideRef& s : m.faces[f]) {
                const auto& oc = m.edge_occs[s.edge];
                const int want = (m.edge_or[s.edge] == +1) ? color[f] : -color[f];
                const int g = (oc[0].face == f && oc[1].face != f)   ? oc[1].face
                              : (oc[1].face == f && oc[0].face != f) ? oc[0].face
                                                                     : -1;
                if (g == -1) {
                    // Both occurrences in the same face.
                    if (m.edge_or[s.edge] == -1) ok = false;
                    continue;
                }
                if (color[g] == 0) {
                    color[g] = want;
                    bfs.push(g);
                } else if (color[g] != want) {
                    ok = false;
                }
            }
        }
        m.orientable = ok;
    }

    // Vertex orbits by corner walking, recording the link of each vertex.
    m.corner_vertex.resize(m.F);
    m.corner_link_index_.resize(m.F);
    for (int f = 0; f < m.F; ++f) {
        m.corner_vertex[f].assign(m.face_len(f), -1);
        m.corner_link_index_[f].assign(m.face_len(f), -1);
    }
    m.end_link_index_.assign(m.E, {-1, -1});
    m.end_vertex_.assign(m.E, {-1, -1});

    for (int f0 = 0; f0 < m.F; ++f0) {
        for (int p0 = 0; p0 < m.face_len(f0); ++p0) {
            if (m.corner_vertex[f0][p0] != -1) continue;
            const int v = static_cast<int>(m.links.size());
            m.links.emplace_back();
            Corner c{f0, p0};
            Flank exit = Flank::Q;
            while (true) {
                if (m.corner_vertex[c.face][c.pos] != -1) break;
                m.corner_vertex[c.face][c.pos] = v;
                const EdgeEnd x = flank_end(m, c, exit);
                const int idx = static_cast<int>(m.links[v].size());
                m.corner_link_index_[c.face][c.pos] = idx;
                if (m.end_link_index_[x.edge][x.end] != -1)
                    throw InternalError("edge end visited twice in link walk");
                m.end_link_index_[x.edge][x.end] = idx;
                m.end_vertex_[x.edge][x.end] = v;
                m.links[v].push_back(LinkEntry{c, x});
                // Cross x to the other occurrence of its edge.
                const int side_pos = flank_side_pos(m, c, exit);
                const EdgeOcc& o2 = m.other_occ(x.edge, c.face, side_pos);
                const int start_end = o2.rev ? 1 : 0;
                if (x.end == start_end) {
                    c = Corner{o2.face, o2.pos};
                    exit = Flank::P;  // entered via Q
                } else {
                    c = Corner{o2.face, (o2.pos + 1) % m.face_len(o2.face)};
                    exit = Flank::Q;  // entered via P
                }
            }
        }
    }
    m.V = static_cast<int>(m.links.size());
    m.euler_char = m.V - m.E + m.F;
    m.surface_class = classify_by_chi(m.orientable, m.euler_char);
    return surf;
}

GluingScheme canonical_scheme(const SurfaceClass& cls) {
    if (!cls.orientable && cls.genus < 1)
        throw InputError("nonorientable genus must be >= 1");
    if (cls.genus < 0) throw InputError("genus must be >= 0");
    GluingScheme s;
    std::vector<SignedSym> w;
    if (cls.orientable) {
        if (cls.genus == 0) {
            w = {{"a", false}, {"a", true}};
        } else {
            for (int i = 0; i < cls.genus; ++i) {
                const std::string a = "a" + std::to_string(i + 1);
                const std::string b = "b" + std::to_string(i + 1);
                w.push_back({a, false});
                w.push_back({b, false});
                w.push_back({a, true});
                w.push_back({b, true});
            }
        }
    } else {
        for (int i = 0; i < cls.genus; ++i) {
            const std::string a = "a" + std::to_string(i + 1);
            w.push_back({a, false});
            w.push_back({a, false});
        }
    }
    s.faces.push_back(w);
    return s;
}

GluingScheme octahedron_scheme() {
    auto w = [](const std::string& a, const std::string& b,
                const std::string& c) -> std::vector<SignedSym> {
        auto sym = [](const std::string& s) {
            return s[0] == '-' ? SignedSym{s.substr(1), true} : SignedSym{s, false};
        };
        return {sym(a), sym(b), sym(c)};
    };
    GluingScheme g;
    g.faces = {w("n2", "e23", "-n3"), w("n3", "e34", "-n4"), w("n4", "e45", "-n5"),
               w("n5", "e52", "-n2"), w("s3", "-e23", "-s2"), w("s4", "-e34", "-s3"),
               w("s5", "-e45", "-s4"), w("s2", "-e52", "-s5")};
    return g;
}

GluingScheme torus_diag_scheme(int n, int m) {
    GluingScheme g;
    auto h = [&](int i, int j) {
        return "h" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m);
    };
    auto v = [&](int i, int j) {
        return "v" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m);
    };
    auto d = [&](int i, int j) {
        return "d" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            g.faces.push_back({SignedSym{h(i, j), false}, SignedSym{v(i + 1, j), false},
                               SignedSym{d(i, j), true}});
            g.faces.push_back({SignedSym{d(i, j), false}, SignedSym{h(i, j + 1), true},
                               SignedSym{v(i, j), true}});
        }
    return g;
}

GluingScheme rp2_six_scheme() {
    // The antipodal quotient of the icosahedron: 6 vertices, 15 edges,
    // 10 faces, every vertex of degree 5.
    const int tris[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                             {2, 5, 3}, {3, 6, 4}, {4, 2, 5}, {5, 3, 6}, {6, 4, 2}};
    // Wait: faces below are the standard RP2_6 list.
    (void)tris;
    const int faces[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                              {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    GluingScheme g;
    auto ename = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return "e" + std::to_string(a) + std::to_string(b);
    };
    for (const auto& f : faces) {
        std::vector<SignedSym> word;
        for (int k = 0; k < 3; ++k) {
            const int a = f[k], b = f[(k + 1) % 3];
            word.push_back(SignedSym{ename(a, b), a > b});
        }
        g.faces.push_back(word);
    }
    return g;
}

SurfacePtr connected_sum(const SurfacePtr& ap, const SurfacePtr& bp) {
    const CombSurface& a = *ap;
    const CombSurface& b = *bp;
    if (!a.triangulated() || !b.triangulated())
        throw InputError("connected_sum requires triangulated surfaces");
    // A face with three distinct vertices and three distinct edges.
    auto pick_face = [](const CombSurface& m) {
        for (int f = 0; f < m.F; ++f) {
            const auto& w = m.faces[f];
            if (w[0].edge == w[1].edge || w[1].edge == w[2].edge || w[0].edge == w[2].edge)
                continue;
            const auto& cv = m.corner_vertex[f];
            if (cv[0] == cv[1] || cv[1] == cv[2] || cv[0] == cv[2]) continue;
            return f;
        }
        throw InputError("connected_sum: no embedded triangle to cut");
    };
    const int fa = pick_face(a);
    const int fb = pick_face(b);

    GluingScheme out;
    for (int f = 0; f < a.F; ++f) {
        if (f == fa) continue;
        std::vector<SignedSym> word;
        for (const SideRef& s : a.faces[f])
            word.push_back(SignedSym{"A." + a.edge_names[s.edge], s.rev});
        out.faces.push_back(word);
    }
    // Identify the boundary of b's removed face with the boundary of a's,
    // reversing the cyclic order so the sphere gluing closes up.
    std::vector<std::pair<std::string, bool>> rename_to(3);  // b-boundary -> a side
    for (int k = 0; k < 3; ++k) {
        const SideRef& sa = a.faces[fa][k];
        const SideRef& sb = b.faces[fb][(3 - k) % 3];
        // b's side traversed along the removed boundary matches a's side
        // traversed oppositely.
        (void)sb;
        rename_to[k] = {"A." + a.edge_names[sa.edge], sa.rev};
    }
    for (int f = 0; f < b.F; ++f) {
        if (f == fb) continue;
        std::vector<SignedSym> word;
        for (const SideRef& s : b.faces[f]) {
            bool mapped = false;
            for (int k = 0; k < 3 && !mapped; ++k) {
                const SideRef& sb = b.faces[fb][(3 - k) % 3];
                if (s.edge == sb.edge) {
                    // Traversal relative to the removed b-face's boundary,
                    // then flipped onto a's boundary.
                    const bool rel = (s.rev != sb.rev);
                    word.push_back(SignedSym{rename_to[k].first, rel == rename_to[k].second});
                    mapped = true;
                }
            }
            if (!mapped) word.push_back(SignedSym{"B." + b.edge_names[s.edge], s.rev});
        }
        out.faces.push_back(word);
    }
    SurfacePtr res = build_surface(out);
    const int chi = a.euler_char + b.euler_char - 2;
    if (res->euler_char != chi) throw InternalError("connected sum chi mismatch");
    return res;
}

SurfacePtr canonical_surface(const SurfaceClass& cls) {
    if (!cls.orientable && cls.genus < 1)
        throw InputError("nonorientable genus must be >= 1");
    if (cls.genus < 0) throw InputError("genus must be >= 0");
    SurfacePtr m;
    if (cls.orientable) {
        m = build_surface(octahedron_scheme());
        for (int i = 0; i < cls.genus; ++i)
            m = connected_sum(m, build_surface(torus_diag_scheme(3, 3)));
    } else {
        m = build_surface(rp2_six_scheme());
        for (int i = 1; i < cls.genus; ++i)
            m = connected_sum(m, build_surface(rp2_six_scheme()));
    }
    if (!(m->surface_class == cls))
        throw InternalError("canonical surface classification mismatch");
    return m;
}

Subdivision subdivide(const SurfacePtr& mp) {
    const CombSurface& m = *mp;
    Subdivision res;
    res.original = mp;

    GluingScheme out;
    res.half_a.resize(m.E);
    res.half_b.resize(m.E);
    res.spoke.resize(m.F);
    res.radius.resize(m.F);
    res.tris.resize(m.F);

    auto half_a_name = [&](int e) { return m.edge_names[e] + ".a"; };
    auto half_b_name = [&](int e) { return m.edge_names[e] + ".b"; };
    auto spoke_name = [&](int f, int i) {
        return "s" + std::to_string(f) + "." + std::to_string(i);
    };
    auto radius_name = [&](int f, int i) {
        return "r" + std::to_string(f) + "." + std::to_string(i);
    };

    for (int f = 0; f < m.F; ++f) {
        const int len = m.face_len(f);
        res.tris[f].assign(len, {-1, -1});
        for (int i = 0; i < len; ++i) {
            const SideRef& s = m.faces[f][i];
            // First half: from corner i to the midpoint of side i.
            // Second half: from the midpoint to corner i+1.
            SignedSym h1, h2;
            if (!s.rev) {
                h1 = {half_a_name(s.edge), false};
                h2 = {half_b_name(s.edge), false};
            } else {
                h1 = {half_b_name(s.edge), true};
                h2 = {half_a_name(s.edge), true};
            }
            const int inext = (i + 1) % len;
            // tri1: corner_i -> mid -> center -> corner_i
            out.faces.push_back({h1,
                                 {spoke_name(f, i), false},
                                 {radius_name(f, i), false}});
            res.tris[f][i][0] = static_cast<int>(out.faces.size()) - 1;
            // tri2: mid -> corner_{i+1} -> center -> mid
            out.faces.push_back({h2,
                                 {radius_name(f, inext), true},
                                 {spoke_name(f, i), true}});
            res.tris[f][i][1] = static_cast<int>(out.faces.size()) - 1;
        }
    }

    res.sub = build_surface(out);
    const CombSurface& n = *res.sub;

    for (int e = 0; e < m.E; ++e) {
        res.half_a[e] = n.edge_id(half_a_name(e));
        res.half_b[e] = n.edge_id(half_b_name(e));
    }
    for (int f = 0; f < m.F; ++f) {
        const int len = m.face_len(f);
        res.spoke[f].resize(len);
        res.radius[f].resize(len);
        for (int i = 0; i < len; ++i) {
            res.spoke[f][i] = n.edge_id(spoke_name(f, i));
            res.radius[f][i] = n.edge_id(radius_name(f, i));
        }
    }
    // Vertex images. tri1(f,i) word = [half1, spoke, radius]; its corners:
    // pos 0 = old corner (f,i), pos 1 = mid of side-i edge, pos 2 = center f.
    res.mid_vertex.assign(m.E, -1);
    res.center_vertex.assign(m.F, -1);
    res.old_vertex.assign(m.V, -1);
    for (int f = 0; f < m.F; ++f) {
        for (int i = 0; i < m.face_len(f); ++i) {
            const int t1 = res.tris[f][i][0];
            res.old_vertex[m.corner_vertex[f][i]] = n.corner_vertex[t1][0];
            res.mid_vertex[m.faces[f][i].edge] = n.corner_vertex[t1][1];
            res.center_vertex[f] = n.corner_vertex[t1][2];
        }
    }

    // Sanity: chi and orientability are preserved.
    if (n.euler_char != m.euler_char || n.orientable != m.orientable)
        throw InternalError("subdivision changed chi or orientability");
    return res;
}

Walk Subdivision::carry_walk(const Walk& w) const {
    Walk out;
    out.reserve(w.size() * 2);
    for (const Step& s : w) {
        if (!s.rev) {
            out.push_back(Step{half_a[s.edge], false});
            out.push_back(Step{half_b[s.edge], false});
        } else {
            out.push_back(Step{half_b[s.edge], true});
            out.push_back(Step{half_a[s.edge], true});
        }
    }
    return out;
}

}  // namespace foldcusp
