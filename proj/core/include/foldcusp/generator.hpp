#ifndef FOLDCUSP_GENERATOR_HPP
#define FOLDCUSP_GENERATOR_HPP

#include <cstdint>

#include "foldcusp/multicurve.hpp"
#include "foldcusp/surface.hpp"

namespace foldcusp {

/// splitmix64: a fixed, platform-independent pseudo-random sequence so that
/// seeded runs are bit-reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform value in [0, n).
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
    bool coin() { return next() & 1; }

private:
    uint64_t state_;
};

/// A random triangulated surface of bounded genus, either orientability,
/// with occasional extra subdivision for size variety.
SurfacePtr random_surface(Rng& rng, int max_genus);

/// A random embedded multicurve; `separating` asks for a null-homologous
/// one (a fattened face-ball boundary), otherwise a fundamental cycle with
/// nonzero class. Returns an empty optional when the draw fails.
std::optional<Multicurve> random_curve(Rng& rng, const SurfacePtr& m, bool separating);

/// Random cusps on the curve (positions and sides).
std::vector<CuspSpec> random_cusps(Rng& rng, const Multicurve& c, int count);

}  // namespace foldcusp

#endif
