#include "foldcusp/instance_io.hpp"

namespace foldcusp {

namespace {

SignedSym parse_sym(const std::string& s) {
    if (s.empty()) throw InputError("empty edge symbol");
    if (s[0] == '-') {
        if (s.size() == 1) throw InputError("bare '-' is not an edge symbol");
        return SignedSym{s.substr(1), true};
    }
    return SignedSym{s, false};
}

}  // namespace

SurfaceClass parse_class(const Json& j) {
    if (!j.is_object() || !j.contains("orientable") || !j.contains("genus"))
        throw InputError("surface class needs {\"orientable\": bool, \"genus\": int}");
    SurfaceClass c;
    c.orientable = j.at("orientable").get<bool>();
    c.genus = j.at("genus").get<int>();
    if (c.genus < 0 || (!c.orientable && c.genus < 1))
        throw InputError("invalid surface class");
    return c;
}

Instance parse_instance(const Json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    Instance inst;
    const Json& surf = j.contains("surface") ? j.at("surface") : j;
    if (surf.contains("faces")) {
        GluingScheme g;
        for (const Json& face : surf.at("faces")) {
            std::vector<SignedSym> word;
            for (const Json& sym : face) word.push_back(parse_sym(sym.get<std::string>()));
            g.faces.push_back(word);
        }
        inst.scheme = g;
    }
    if (surf.contains("class")) inst.surface_class = parse_class(surf.at("class"));
    if (j.contains("curve")) {
        for (const Json& comp : j.at("curve")) {
            std::vector<std::string> walk;
            for (const Json& sym : comp) walk.push_back(sym.get<std::string>());
            inst.curve.push_back(walk);
        }
    }
    if (j.contains("cusps")) {
        for (const Json& c : j.at("cusps")) {
            CuspSpec p;
            p.component = c.at("component").get<int>();
            p.edge_index = c.at("edge").get<int>();
            p.side_face = c.at("side").get<int>();
            inst.cusps.push_back(p);
        }
    }
    if (j.contains("target")) inst.target = parse_class(j.at("target"));
    if (j.contains("datum")) {
        const Json& d = j.at("datum");
        Instance::DatumSpec ds;
        for (const Json& b : d.at("pullback_w1")) ds.w1.push_back(b.get<int>() & 1);
        ds.w2 = d.at("pullback_w2").get<int>() & 1;
        if (d.contains("degree") && !d.at("degree").is_null())
            ds.degree = d.at("degree").get<long long>();
        inst.datum = ds;
    }
    if (j.contains("summary")) {
        const Json& s = j.at("summary");
        AbstractSummarySpec sp;
        sp.separating = s.at("separating").get<bool>();
        if (s.contains("chi_plus")) sp.chi_plus = s.at("chi_plus").get<int>();
        if (s.contains("chi_minus")) sp.chi_minus = s.at("chi_minus").get<int>();
        if (s.contains("n_plus")) sp.n_plus = s.at("n_plus").get<int>();
        if (s.contains("n_minus")) sp.n_minus = s.at("n_minus").get<int>();
        if (s.contains("components")) sp.n_components = s.at("components").get<int>();
        if (s.contains("one_sided_count"))
            sp.one_sided_count = s.at("one_sided_count").get<int>();
        if (s.contains("c_equals_w1")) sp.c_equals_w1 = s.at("c_equals_w1").get<bool>();
        if (s.contains("p_count")) sp.p_count = s.at("p_count").get<int>();
        inst.summary = sp;
    }
    return inst;
}

SurfacePtr instance_surface(const Instance& inst) {
    if (inst.scheme) return build_surface(*inst.scheme);
    if (inst.surface_class) return canonical_surface(*inst.surface_class);
    throw InputError("instance names no surface (\"faces\" or \"class\")");
}

std::vector<Walk> instance_walks(const CombSurface& m, const Instance& inst) {
    std::vector<Walk> walks;
    for (const auto& comp : inst.curve) {
        Walk w;
        for (const auto& s : comp) {
            const SignedSym sym = parse_sym(s);
            w.push_back(Step{m.edge_id(sym.sym), sym.rev});
        }
        walks.push_back(w);
    }
    return walks;
}

Json scheme_json(const CombSurface& m) {
    Json faces = Json::array();
    for (int f = 0; f < m.F; ++f) {
        Json word = Json::array();
        for (const SideRef& s : m.faces[f])
            word.push_back((s.rev ? "-" : "") + m.edge_names[s.edge]);
        faces.push_back(word);
    }
    return Json{{"faces", faces}};
}

Json class_json(const SurfaceClass& c) {
    return Json{{"orientable", c.orientable}, {"genus", c.genus}};
}

Json classify_json(const CombSurface& m) {
    return Json{{"orientable", m.orientable},
                {"genus", m.surface_class.genus},
                {"chi", m.euler_char},
                {"counts", Json{{"V", m.V}, {"E", m.E}, {"F", m.F}}}};
}

namespace {
std::string cond_str(Cond c) {
    switch (c) {
        case Cond::Pass: return "pass";
        case Cond::Fail: return "fail";
        default: return "n/a";
    }
}
}  // namespace

Json class_bits_json(const Z2Class1& x) {
    Json bits = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i) bits.push_back(x.get(i));
    return bits;
}

Json witness_json(const Witness& w) {
    Json d{{"pullback_w1", class_bits_json(w.datum.pullback_w1)},
           {"pullback_w2", w.datum.pullback_w2}};
    d["degree"] = w.datum.degree ? Json(*w.datum.degree) : Json(nullptr);
    return Json{{"case", w.case_label}, {"datum", d}, {"description", w.description}};
}

Json verdict_json(const Verdict& v, const std::optional<Witness>& w) {
    Json conds = Json::object();
    for (const auto& [key, c] : v.conditions) conds[key] = cond_str(c);
    Json diags = Json::object();
    for (const auto& [key, msg] : v.diagnostics) diags[key] = msg;
    Json out{{"overall", v.overall},
             {"conditions", conds},
             {"flags", v.flags},
             {"diagnostics", diags}};
    out["witness"] = w ? witness_json(*w) : Json(nullptr);
    return out;
}

Json euler_json(const BundleInvariants& inv) {
    Json out{{"w1", class_bits_json(inv.w1_on_basis)}};
    if (inv.euler.is_bit)
        out["euler"] = "bit " + std::to_string(inv.euler.value);
    else
        out["euler"] = inv.euler.value;
    return out;
}

Json walks_json(const CombSurface& m, const std::vector<Walk>& walks) {
    Json out = Json::array();
    for (const Walk& w : walks) {
        Json comp = Json::array();
        for (const Step& s : w) comp.push_back((s.rev ? "-" : "") + m.edge_names[s.edge]);
        out.push_back(comp);
    }
    return out;
}

Json instance_json(const Instance& inst) {
    Json j = Json::object();
    if (inst.scheme) {
        Json faces = Json::array();
        for (const auto& word : inst.scheme->faces) {
            Json w = Json::array();
            for (const auto& s : word) w.push_back((s.rev ? "-" : "") + s.sym);
            faces.push_back(w);
        }
        j["surface"] = Json{{"faces", faces}};
    } else if (inst.surface_class) {
        j["surface"] = Json{{"class", class_json(*inst.surface_class)}};
    }
    if (!inst.curve.empty()) j["curve"] = inst.curve;
    if (!inst.cusps.empty()) {
        Json cs = Json::array();
        for (const CuspSpec& p : inst.cusps)
            cs.push_back(Json{{"component", p.component},
                              {"edge", p.edge_index},
                              {"side", p.side_face}});
        j["cusps"] = cs;
    }
    if (inst.target) j["target"] = class_json(*inst.target);
    if (inst.datum) {
        Json d{{"pullback_w1", inst.datum->w1}, {"pullback_w2", inst.datum->w2}};
        d["degree"] = inst.datum->degree ? Json(*inst.datum->degree) : Json(nullptr);
        j["datum"] = d;
    }
    if (inst.summary) {
        const auto& sp = *inst.summary;
        j["summary"] = Json{{"separating", sp.separating}, {"chi_plus", sp.chi_plus},
                            {"chi_minus", sp.chi_minus},   {"n_plus", sp.n_plus},
                            {"n_minus", sp.n_minus},       {"components", sp.n_components},
                            {"one_sided_count", sp.one_sided_count},
                            {"c_equals_w1", sp.c_equals_w1},
                            {"p_count", sp.p_count}};
    }
    return j;
}

}  // namespace foldcusp
