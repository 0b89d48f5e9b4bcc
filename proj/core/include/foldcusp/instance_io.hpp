#ifndef FOLDCUSP_INSTANCE_IO_HPP
#define FOLDCUSP_INSTANCE_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "foldcusp/bundles.hpp"
#include "foldcusp/realizability.hpp"

namespace foldcusp {

using Json = nlohmann::json;

/// One parsed instance file; which fields must be present depends on the
/// subcommand consuming it.
struct Instance {
    std::optional<GluingScheme> scheme;
    std::optional<SurfaceClass> surface_class;
    std::vector<std::vector<std::string>> curve;  // signed edge symbols
    std::vector<CuspSpec> cusps;
    std::optional<SurfaceClass> target;
    struct DatumSpec {
        std::vector<int> w1;
        int w2 = 0;
        std::optional<long long> degree;
    };
    std::optional<DatumSpec> datum;
    std::optional<AbstractSummarySpec> summary;
};

Instance parse_instance(const Json& j);
SurfaceClass parse_class(const Json& j);

/// Builds the surface named by the instance (scheme wins over class).
SurfacePtr instance_surface(const Instance& inst);

/// The instance's curve as walks on the given surface.
std::vector<Walk> instance_walks(const CombSurface& m, const Instance& inst);

Json scheme_json(const CombSurface& m);
Json class_json(const SurfaceClass& c);
Json classify_json(const CombSurface& m);
Json verdict_json(const Verdict& v, const std::optional<Witness>& w);
Json witness_json(const Witness& w);
Json euler_json(const BundleInvariants& inv);
Json walks_json(const CombSurface& m, const std::vector<Walk>& walks);
Json class_bits_json(const Z2Class1& x);

Json instance_json(const Instance& inst);

}  // namespace foldcusp

#endif
