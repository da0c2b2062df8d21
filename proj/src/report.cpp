#include "ietforge/report.hpp"

namespace ietforge {

using nlohmann::json;

namespace {

json qa_json(const QAlpha& x) { return x.str(); }

json pieces_json(const std::vector<IntervalSet::Piece>& pieces) {
    json arr = json::array();
    for (const auto& [lo, hi] : pieces) arr.push_back({qa_json(lo), qa_json(hi)});
    return arr;
}

const char* oracle_kind_name(AlphaOracle::Kind k) {
    switch (k) {
        case AlphaOracle::Kind::SqrtRational: return "sqrt-of-rational";
        case AlphaOracle::Kind::ContinuedFraction: return "continued-fraction";
        case AlphaOracle::Kind::DecimalEnclosure: return "decimal-enclosure";
        case AlphaOracle::Kind::ExplicitRational: return "explicit-rational";
    }
    return "unknown";
}

json alpha_json(const AlphaOracle& oracle) {
    return {
        {"kind", oracle_kind_name(oracle.kind())},
        {"text", oracle.text()},
        {"certified_irrational", oracle.certified_irrational()},
        {"approx_decimal", oracle.approx()},
        // no concrete alpha is intrinsic to any construction here; the value
        // is a run parameter
        {"provenance", "implementation choice"},
    };
}

json idoc_json(const IdocVerdict& v) {
    json out;
    switch (v.status) {
        case IdocVerdict::Status::PassToDepth:
            out["status"] = "pass-to-depth";
            out["depth"] = v.depth;
            out["note"] = "finite-depth scan refutes only; this is evidence, not a proof";
            break;
        case IdocVerdict::Status::Certified: out["status"] = "certified"; break;
        case IdocVerdict::Status::Fail: out["status"] = "fail"; break;
    }
    if (v.witness) {
        out["witness"] = {
            {"kind", v.witness->periodic ? "periodic-orbit" : "orbit-collision"},
            {"i", v.witness->i},
            {"j", v.witness->j},
            {"l", v.witness->l},
            {"value", qa_json(v.witness->value)},
        };
    }
    if (v.certificate) {
        json checks = json::array();
        for (const auto& c : v.certificate->checks)
            checks.push_back({{"i", c.i},
                              {"j", c.j},
                              {"l", c.l},
                              {"reached", qa_json(c.reached)},
                              {"collided", c.collided}});
        out["certificate"] = {
            {"alpha_coefficient", rational_str(v.certificate->alpha_coefficient)},
            {"residual_checks", checks},
            {"certified", v.certificate->certified},
        };
    }
    return out;
}

json affine_json(const AffineEigenStructure& e, const AlphaOracle& oracle) {
    json p = json::array();
    for (const auto& pi : e.p) p.push_back(pi.str());
    json out = {
        {"r", qa_json(e.r)},
        {"s", qa_json(e.s)},
        {"p", p},
        {"eigenfunction", "exp(2i*pi*x / s)"},
        {"eigenvalue", "exp(2i*pi * r/s)"},
        // the (r, s) pair is one generator of a lattice of witnesses; this
        // normalization (s positive and maximal, p_1 = 0) is a convention
        {"normalization", "s maximal with integer quotients of gcd 1; p_1 = 0"},
    };
    if (auto theta = e.eigenvalue_theta(oracle)) {
        out["eigenvalue_theta_mod1"] = qa_json(*theta);
        out["eigenvalue_theta_decimal"] = qa_to_double(*theta, oracle);
    }
    return out;
}

json cycles_json(const std::vector<IntervalCycle>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) {
        arr.push_back({
            {"period", c.period()},
            {"eigenvalue", "exp(2i*pi * 1/" + std::to_string(c.period()) + ")"},
            {"eigenfunction", "step function: exp(2i*pi * k/" + std::to_string(c.period()) +
                                  ") on piece k (piecewise continuous)"},
            {"pieces", pieces_json(c.pieces)},
        });
    }
    return arr;
}

const char* minimality_verdict_name(MinimalityReport::Verdict v) {
    switch (v) {
        case MinimalityReport::Verdict::MinimalCertified: return "minimal-certified";
        case MinimalityReport::Verdict::MinimalEvidence: return "minimal-evidence";
        case MinimalityReport::Verdict::NonMinimal: return "non-minimal";
        case MinimalityReport::Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

const char* wm_verdict_name(WeakMixingVerdict::Verdict v) {
    switch (v) {
        case WeakMixingVerdict::Verdict::NotTopologicallyWeaklyMixing:
            return "not-topologically-weakly-mixing";
        case WeakMixingVerdict::Verdict::NoContinuousEigenfunctionFound:
            return "no-continuous-eigenfunction-found";
        case WeakMixingVerdict::Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace

json iet_to_json(const Iet& T) {
    json breaks = json::array(), lengths = json::array(), deltas = json::array(),
         image_breaks = json::array();
    for (const auto& a : T.breakpoints()) breaks.push_back(qa_json(a));
    for (const auto& l : T.lengths()) lengths.push_back(qa_json(l));
    for (const auto& d : T.translations()) deltas.push_back(qa_json(d));
    for (const auto& b : T.image_breakpoints()) image_breaks.push_back(qa_json(b));
    return {
        {"m", T.interval_count()},
        {"total_length", qa_json(T.total_length())},
        {"perm", T.permutation().images()},
        {"breakpoints", breaks},
        {"lengths", lengths},
        {"translations", deltas},
        {"image_breakpoints", image_breaks},
        {"translations_note", "derived exactly from (perm, lengths)"},
        {"exactness", "exact"},
    };
}

json orbit_to_json(const Iet& T, const OrbitPoint& orbit) {
    json occ = json::array();
    for (auto n : orbit.occupation) occ.push_back(n);
    return {
        {"steps", orbit.steps},
        {"position", qa_json(orbit.position)},
        {"position_decimal", qa_to_double(orbit.position, T.oracle())},
        {"displacement", qa_json(orbit.displacement)},
        {"displacement_alpha_coefficient", rational_str(orbit.displacement.p)},
        {"occupation", occ},
        {"exactness", "exact"},
    };
}

json return_system_to_json(const ReturnSystem& sys, const AlphaOracle& oracle) {
    json branches = json::array();
    for (const auto& b : sys.branches)
        branches.push_back({
            {"lo", qa_json(b.lo)},
            {"hi", qa_json(b.hi)},
            {"translation", qa_json(b.translation)},
            {"return_time", b.return_time},
        });
    json times = json::array();
    for (auto t : sys.return_times) times.push_back(t);
    (void)oracle;
    return {
        {"base", {qa_json(sys.base_lo), qa_json(sys.base_hi)}},
        {"branches", branches},
        {"induced", iet_to_json(sys.induced)},
        {"return_times", times},
        {"exactness", "exact"},
    };
}

json birkhoff_to_json(const BirkhoffStats& stats) {
    json cells = json::array();
    for (const auto& c : stats.cells)
        cells.push_back({
            {"cell", {qa_json(c.lo), qa_json(c.hi)}},
            {"visits", c.visits},
            {"frequency", c.frequency},
            {"lebesgue", c.lebesgue},
            {"deviation", c.deviation},
        });
    return {
        {"start", qa_json(stats.start)},
        {"steps", stats.steps},
        {"mode", stats.exact ? "exact" : "float"},
        {"cells", cells},
        {"max_deviation", stats.max_deviation},
        {"mean_deviation", stats.mean_deviation},
    };
}

json analyze(const Iet& T, const AnalysisOptions& options) {
    json report;
    report["tool"] = {
        {"name", kToolName},
        {"version", kToolVersion},
        {"exactness_convention",
         "exact values are literal strings; doubles are *_decimal fields or blocks with a "
         "'mode' key"},
    };
    report["alpha"] = alpha_json(T.oracle());
    if (!options.chart_note.empty()) report["chart"] = options.chart_note;
    report["iet"] = iet_to_json(T);
    report["budgets"] = {
        {"idoc_depth", options.budgets.idoc_depth},
        {"cycle_max_period", options.budgets.cycle_max_period == 0
                                 ? 2 * T.interval_count()
                                 : options.budgets.cycle_max_period},
        {"union_max_pieces", options.budgets.union_max_pieces},
        {"union_max_steps", options.budgets.union_max_steps},
    };

    report["irreducible"] = T.permutation().is_irreducible();

    MinimalityReport mini = minimality_report(T, options.budgets);
    report["idoc"] = idoc_json(mini.idoc);
    json mj = {
        {"verdict", minimality_verdict_name(mini.verdict)},
        {"irreducible", mini.irreducible},
    };
    if (mini.witness) {
        json w = json::array();
        for (const auto& [lo, hi] : mini.witness->pieces()) w.push_back({qa_json(lo), qa_json(hi)});
        mj["invariant_union"] = w;
        mj["invariant_union_measure"] = qa_json(mini.witness->measure());
    }
    if (mini.uniquely_ergodic_by_cited_theorems)
        mj["unique_ergodicity"] =
            "uniquely ergodic by Boshernitzan's rank-2 theorem on top of Keane-certified "
            "minimality (external theorems cited; hypotheses machine-checked)";
    if (!mini.notes.empty()) mj["notes"] = mini.notes;
    report["minimality"] = mj;

    WeakMixingVerdict wm = weak_mixing_report(T, options.budgets.cycle_max_period);
    report["affine_eigen"] = wm.affine ? affine_json(*wm.affine, T.oracle()) : json(nullptr);
    report["rational_cycles"] = cycles_json(wm.rational_cycles);
    report["verdict"] = wm_verdict_name(wm.verdict);
    if (!wm.diagnostics.empty()) report["spectral_diagnostics"] = wm.diagnostics;

    if (options.run_birkhoff) {
        std::vector<IntervalSet::Piece> cells = options.birkhoff_cells;
        if (cells.empty())
            for (int i = 1; i <= T.interval_count(); ++i)
                cells.push_back({T.breakpoints()[i - 1], T.breakpoints()[i]});
        BirkhoffStats stats =
            birkhoff_discrepancy(T, options.birkhoff_from, options.birkhoff_steps, cells,
                                 options.budgets.birkhoff_float_threshold);
        report["birkhoff"] = birkhoff_to_json(stats);
    }
    return report;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace ietforge
