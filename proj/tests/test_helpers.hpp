#ifndef FOLDCUSP_TEST_HELPERS_HPP
#define FOLDCUSP_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "foldcusp/homology.hpp"
#include "foldcusp/surface.hpp"

namespace foldcusp::testing {

inline SignedSym sym(const std::string& s) {
    if (!s.empty() && s[0] == '-') return SignedSym{s.substr(1), true};
    return SignedSym{s, false};
}

inline GluingScheme scheme(const std::vector<std::vector<std::string>>& faces) {
    GluingScheme g;
    for (const auto& w : faces) {
        std::vector<SignedSym> word;
        for (const auto& s : w) word.push_back(sym(s));
        g.faces.push_back(word);
    }
    return g;
}

inline GluingScheme torus_square() {
    return scheme({{"a", "b", "-a", "-b"}});
}

inline GluingScheme projective_plane() { return scheme({{"a", "a"}}); }

inline GluingScheme klein_bottle() { return scheme({{"a", "a", "b", "b"}}); }

inline GluingScheme sphere_bigon() { return scheme({{"a", "-a"}}); }

// Octahedron: poles N, S; equator 2,3,4,5. Edges directed away from poles
// and around the equator.
inline GluingScheme octahedron() {
    return scheme({
        {"n2", "e23", "-n3"},
        {"n3", "e34", "-n4"},
        {"n4", "e45", "-n5"},
        {"n5", "e52", "-n2"},
        {"s3", "-e23", "-s2"},
        {"s4", "-e34", "-s3"},
        {"s5", "-e45", "-s4"},
        {"s2", "-e52", "-s5"},
    });
}

// n x m grid torus of square faces. Edges: h{i}_{j} from (i,j) to (i+1,j),
// v{i}_{j} from (i,j) to (i,j+1); indices mod n, m.
inline GluingScheme torus_grid(int n, int m) {
    GluingScheme g;
    auto h = [&](int i, int j) {
        return "h" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m);
    };
    auto v = [&](int i, int j) {
        return "v" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            g.faces.push_back({sym(h(i, j)), sym(v(i + 1, j)), sym("-" + h(i, j + 1)),
                               sym("-" + v(i, j))});
    return g;
}

inline Walk walk_of(const CombSurface& m, const std::vector<std::string>& steps) {
    Walk w;
    for (const auto& s : steps) {
        if (!s.empty() && s[0] == '-')
            w.push_back(Step{m.edge_id(s.substr(1)), true});
        else
            w.push_back(Step{m.edge_id(s), false});
    }
    return w;
}

}  // namespace foldcusp::testing

#endif
