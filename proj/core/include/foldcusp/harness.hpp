#ifndef FOLDCUSP_HARNESS_HPP
#define FOLDCUSP_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace foldcusp {

struct HarnessReport {
    std::string suite;
    int count = 0;
    int passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == count && count > 0; }
};

/// Formula-versus-oracle checks of the fold and cusp modifications on
/// seeded random (M, C, P) instances: w1 naturality, the twisted Euler
/// number against the side-split formulas, and the variant isomorphism.
HarnessReport verify_bundles(uint64_t seed, int count, int parallelism = 1);

/// Exhaustive abstract grid: witness soundness and datum-level necessity
/// of the existence criterion. `count` bounds the number of grid cells
/// (0 = the full grid).
HarnessReport verify_realizability(int max_genus = 3, int chi_bound = 6, int cusp_bound = 4,
                                   int one_sided_bound = 3);

/// Seeded curve realization round trips: realized classes verified by cup
/// pairing, disjointness and embeddedness.
HarnessReport verify_curves(uint64_t seed, int count);

}  // namespace foldcusp

#endif
