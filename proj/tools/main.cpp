// foldcusp: decides when prescribed fold curves and cusp points on a closed
// surface occur as the singular locus of a generic map to another surface,
// with the supporting curve, homology, and bundle machinery exposed as
// subcommands.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "foldcusp/curve_moves.hpp"
#include "foldcusp/generator.hpp"
#include "foldcusp/harness.hpp"
#include "foldcusp/instance_io.hpp"

using namespace foldcusp;

namespace {

Json read_input(const std::string& path) {
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct CurveBundle {
    SurfacePtr surface;
    HomologyBasis basis;
    Multicurve curve;
    CurveSummary summary;
};

CurveBundle load_curve_instance(const Instance& inst) {
    CurveBundle cb;
    cb.surface = instance_surface(inst);
    if (inst.curve.empty()) throw InputError("instance needs a \"curve\"");
    cb.basis = homology(cb.surface);
    cb.curve = embed_multicurve(cb.surface, instance_walks(*cb.surface, inst));
    cb.summary = curve_summary(cb.basis, cb.curve, inst.cusps);
    return cb;
}

int run(int argc, char** argv) {
    CLI::App app{"realizability of prescribed fold and cusp loci on closed surfaces"};
    app.require_subcommand(1);

    std::string in_path = "-";
    uint64_t seed = 1;
    int count = 100;
    int parallel = 1;
    int max_genus = 2;
    std::string suite = "bundles";
    std::string format = "json";
    int variant = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "instance file (default: stdin)");
        cmd->add_option("--format", format, "output format (json)");
    };

    auto* classify = app.add_subcommand("classify", "classify a surface");
    add_input(classify);

    auto* check1 = app.add_subcommand(
        "check1", "homotopy criterion for (surface, curve, cusps, target, datum)");
    add_input(check1);

    auto* check2 =
        app.add_subcommand("check2", "existence criterion for (surface, curve, cusps, target)");
    add_input(check2);

    auto* check2a = app.add_subcommand(
        "check2-abstract", "existence criterion on an abstract summary (class + summary)");
    add_input(check2a);

    auto* witness = app.add_subcommand("witness", "witness datum for a passing instance");
    add_input(witness);

    auto* bundle = app.add_subcommand(
        "bundle-euler", "w1 and twisted Euler number of the (modified) tangent bundle");
    add_input(bundle);
    bundle->add_option("--variant", variant, "cusp regluing variant (1 or 2)");

    auto* realize = app.add_subcommand("realize", "disjoint curves realizing given classes");
    add_input(realize);

    int gen_count = 1;
    auto* gen = app.add_subcommand("gen", "generate a reproducible random instance");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--count", gen_count, "number of instances (array output when > 1)");
    gen->add_option("--genus", max_genus, "genus bound");

    auto* verify = app.add_subcommand("verify", "run a cross-check harness");
    verify->add_option("--suite", suite, "bundles | realizability | curves");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--count", count, "instance count");
    verify->add_option("--parallel", parallel, "worker threads (bundles suite)");
    verify->add_option("--format", format, "output format (json)");
    gen->add_option("--format", format, "output format (json)");

    CLI11_PARSE(app, argc, argv);
    if (format != "json") throw InputError("only json output is supported");

    if (classify->parsed()) {
        const Instance inst = parse_instance(read_input(in_path));
        emit(classify_json(*instance_surface(inst)));
        return 0;
    }

    if (check1->parsed()) {
        const Instance inst = parse_instance(read_input(in_path));
        if (!inst.target) throw InputError("check1 needs a \"target\" class");
        if (!inst.datum) throw InputError("check1 needs a \"datum\"");
        const CurveBundle cb = load_curve_instance(inst);
        HomotopyDatum datum;
        datum.pullback_w1 = Z2Class1(inst.datum->w1.size());
        for (std::size_t i = 0; i < inst.datum->w1.size(); ++i)
            datum.pullback_w1.set(i, inst.datum->w1[i]);
        datum.pullback_w2 = inst.datum->w2;
        datum.degree = inst.datum->degree;
        const Verdict v =
            check_theorem1(context_of(cb.basis), cb.summary, *inst.target, datum);
        emit(verdict_json(v, std::nullopt));
        return v.overall ? 0 : 1;
    }

    if (check2->parsed() || witness->parsed()) {
        const Instance inst = parse_instance(read_input(in_path));
        if (!inst.target) throw InputError("check2 needs a \"target\" class");
        const CurveBundle cb = load_curve_instance(inst);
        const ClassContext ctx = context_of(cb.basis);
        const Verdict v = check_theorem2(ctx, cb.summary, *inst.target);
        std::optional<Witness> w;
        if (v.overall) w = construct_witness(ctx, cb.summary, *inst.target);
        emit(verdict_json(v, w));
        return v.overall ? 0 : 1;
    }

    if (check2a->parsed()) {
        const Instance inst = parse_instance(read_input(in_path));
        if (!inst.surface_class) throw InputError("check2-abstract needs a surface \"class\"");
        if (!inst.summary) throw InputError("check2-abstract needs a \"summary\"");
        if (!inst.target) throw InputError("check2-abstract needs a \"target\" class");
        const CurveSummary s = abstract_summary(*inst.surface_class, *inst.summary);
        const ClassContext ctx = standard_context(*inst.surface_class);
        const Verdict v = check_theorem2(ctx, s, *inst.target);
        std::optional<Witness> w;
        if (v.overall) w = construct_witness(ctx, s, *inst.target);
        emit(verdict_json(v, w));
        return v.overall ? 0 : 1;
    }

    if (bundle->parsed()) {
        const Instance inst = parse_instance(read_input(in_path));
        SurfacePtr m = instance_surface(inst);
        std::vector<Walk> walks = instance_walks(*m, inst);
        std::vector<CuspSpec> cusps = inst.cusps;
        if (!m->triangulated()) {
            // One subdivision triangulates any scheme; carry the curve and
            // keep each cusp on the first half of its edge, with the side
            // face replaced by the subdivided triangle on the same side.
            const Subdivision sub = subdivide(m);
            std::vector<Walk> carried;
            for (const Walk& w : walks) carried.push_back(sub.carry_walk(w));
            for (CuspSpec& p : cusps) {
                if (p.component < 0 || p.component >= static_cast<int>(walks.size()))
                    throw InputError("cusp component out of range");
                const Walk& w0 = walks[p.component];
                if (p.edge_index < 0 || p.edge_index >= static_cast<int>(w0.size()))
                    throw InputError("cusp edge index out of range");
                const Step st = w0[p.edge_index];
                const EdgeOcc* occ = nullptr;
                for (int k = 0; k < 2; ++k)
                    if (m->edge_occs[st.edge][k].face == p.side_face)
                        occ = &m->edge_occs[st.edge][k];
                if (!occ) throw InputError("cusp side face not adjacent to its edge");
                const int half = st.rev ? sub.half_b[st.edge] : sub.half_a[st.edge];
                const int tri1 = sub.tris[occ->face][occ->pos][0];
                const int tri2 = sub.tris[occ->face][occ->pos][1];
                const CombSurface& n = *sub.sub;
                p.side_face =
                    (n.edge_occs[half][0].face == tri1 || n.edge_occs[half][1].face == tri1)
                        ? tri1
                        : tri2;
                p.edge_index = 2 * p.edge_index;
            }
            walks = carried;
            m = sub.sub;
        }
        const HomologyBasis h = homology(m);
        DiscreteBundle b = discrete_tangent(m);
        if (!walks.empty()) {
            const Multicurve c = embed_multicurve(m, walks);
            b = fold_modify(b, c);
            if (!cusps.empty()) b = cusp_modify(b, c, cusps, variant);
        }
        emit(euler_json(bundle_invariants(b, h)));
        return 0;
    }

    if (realize->parsed()) {
        const Json j = read_input(in_path);
        const Instance inst = parse_instance(j);
        SurfacePtr m = instance_surface(inst);
        if (!j.contains("classes")) throw InputError("realize needs \"classes\"");
        std::vector<Z2Class1> classes;
        const HomologyBasis h = homology(m);
        for (const Json& row : j.at("classes")) {
            Z2Class1 x(h.rank());
            if (row.size() != h.rank())
                throw InputError("class vector length must equal the homology rank");
            for (std::size_t i = 0; i < h.rank(); ++i) x.set(i, row[i].get<int>() & 1);
            classes.push_back(x);
        }
        const RealizedCurves res = realize_classes(m, classes);
        Json out{{"surface", scheme_json(*res.surface)},
                 {"curves", walks_json(*res.surface, res.components)},
                 {"verified", true}};
        Json cls = Json::array();
        for (const auto& x : classes) cls.push_back(class_bits_json(x));
        out["classes"] = cls;
        emit(out);
        return 0;
    }

    if (gen->parsed()) {
        auto one = [&](uint64_t k) {
            Rng r(seed * 0x10001ull + k);
            Instance inst;
            for (int attempt = 0; attempt < 64; ++attempt) {
                const SurfacePtr m = random_surface(r, max_genus);
                const auto curve = random_curve(r, m, r.coin());
                if (!curve) continue;
                inst.scheme = m->scheme();
                for (const Walk& w : curve->components) {
                    std::vector<std::string> comp;
                    for (const Step& s : w)
                        comp.push_back((s.rev ? "-" : "") + m->edge_names[s.edge]);
                    inst.curve.push_back(comp);
                }
                inst.cusps = random_cusps(r, *curve, static_cast<int>(r.below(3)));
                const bool orientable = r.coin();
                inst.target = SurfaceClass{
                    orientable, orientable ? static_cast<int>(r.below(max_genus + 1))
                                           : 1 + static_cast<int>(r.below(max_genus))};
                return instance_json(inst);
            }
            throw InternalError("instance generation failed");
        };
        if (gen_count <= 1) {
            emit(one(0));
        } else {
            Json arr = Json::array();
            for (int k = 0; k < gen_count; ++k) arr.push_back(one(k));
            emit(arr);
        }
        return 0;
    }

    if (verify->parsed()) {
        HarnessReport rep;
        if (suite == "bundles") {
            rep = verify_bundles(seed, count, parallel);
        } else if (suite == "realizability") {
            rep = verify_realizability();
        } else if (suite == "curves") {
            rep = verify_curves(seed, count);
        } else {
            throw InputError("unknown suite: " + suite);
        }
        Json out{{"suite", rep.suite},
                 {"count", rep.count},
                 {"passed", rep.passed},
                 {"failures", rep.failures},
                 {"seed", seed}};
        emit(out);
        return rep.ok() ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", std::string("internal: ") + e.what()}}.dump(2) << "\n";
        return 2;
    }
}
