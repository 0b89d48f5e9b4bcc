#ifndef FOLDCUSP_REALIZABILITY_HPP
#define FOLDCUSP_REALIZABILITY_HPP

#include <map>
#include <optional>
#include <string>

#include "foldcusp/homology.hpp"
#include "foldcusp/multicurve.hpp"

namespace foldcusp {

/// The algebraic invariants of a map f: M -> N that the homotopy-class
/// criterion consumes: the pullbacks of w1 and w2, and |deg f| when the
/// degree is defined (pullback_w1 = w1(M)).
struct HomotopyDatum {
    Z2Class1 pullback_w1;
    int pullback_w2 = 0;
    std::optional<long long> degree;
};

enum class Cond { Pass, Fail, NotApplicable };

struct Verdict {
    bool overall = false;
    std::map<std::string, Cond> conditions;
    std::map<std::string, std::string> diagnostics;
    std::vector<std::string> flags;

    bool passed(const std::string& key) const {
        auto it = conditions.find(key);
        return it != conditions.end() && it->second == Cond::Pass;
    }
    bool failed(const std::string& key) const {
        auto it = conditions.find(key);
        return it != conditions.end() && it->second == Cond::Fail;
    }
};

struct Witness {
    std::string case_label;  // "I".."VI"
    HomotopyDatum datum;
    std::string description;
};

/// Cup-product context of the source surface: w1 and the pairing on
/// evaluation vectors. Derived from a computed homology basis, or from the
/// standard model of a homeomorphism type for abstract instances.
struct ClassContext {
    SurfaceClass m_class;
    Z2Class1 w1;
    Gf2Mat pairing;  // cup(x,y) = x . pairing . y on evaluation vectors

    int cup(const Z2Class1& x, const Z2Class1& y) const;
    std::size_t rank() const { return w1.size(); }
};

ClassContext context_of(const HomologyBasis& h);
ClassContext standard_context(const SurfaceClass& cls);

/// Summary invariants for an abstract instance given by a homeomorphism
/// type and hand-written data; validates the stated invariants.
struct AbstractSummarySpec {
    bool separating = false;
    int chi_plus = 0, chi_minus = 0;
    int n_plus = 0, n_minus = 0;
    int n_components = 1;
    int one_sided_count = 0;
    bool c_equals_w1 = false;
    int p_count = 0;
};
CurveSummary abstract_summary(const SurfaceClass& m_cls, const AbstractSummarySpec& spec);

/// Homotopy-class criterion: is a map with the given datum homotopic to one
/// with fold locus C minus P and cusp locus P?
Verdict check_theorem1(const ClassContext& ctx, const CurveSummary& s,
                       const SurfaceClass& n_cls, const HomotopyDatum& datum);

/// Existence criterion for some generic map realizing (C, P).
Verdict check_theorem2(const ClassContext& ctx, const CurveSummary& s,
                       const SurfaceClass& n_cls);

/// Degree realizability: is there f: M -> N with f*w1(N) = w1(M) and
/// |deg f| = d?
bool degree_realizable(const SurfaceClass& m, const SurfaceClass& n, long long d);

/// A witness datum and named construction for a passing existence check.
Witness construct_witness(const ClassContext& ctx, const CurveSummary& s,
                          const SurfaceClass& n_cls);

/// All homotopy data compatible with the forced invariants, with degrees
/// swept slightly past the divisibility bound.
std::vector<HomotopyDatum> enumerate_data(const ClassContext& ctx, const CurveSummary& s,
                                          const SurfaceClass& n_cls);

}  // namespace foldcusp

#endif
