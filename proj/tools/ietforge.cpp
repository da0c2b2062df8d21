#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ietforge/families.hpp"
#include "ietforge/report.hpp"
#include "ietforge/spec_parser.hpp"
#include "ietforge/svg.hpp"

using namespace ietforge;

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return 2;
        case ErrorCode::SemanticError:
        case ErrorCode::ParameterOutOfRange:
        case ErrorCode::LengthMismatch:
        case ErrorCode::MixedIrrationals:
        case ErrorCode::NonPositiveLength:
        case ErrorCode::OutOfDomain:
        case ErrorCode::IrrationalityUnknown:
        case ErrorCode::VerificationFailed: return 3;
        case ErrorCode::BudgetExhausted:
        case ErrorCode::PrecisionExhausted:
        case ErrorCode::NoReturnWithinBudget: return 4;
        case ErrorCode::Internal: return 1;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SemanticError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::SemanticError, "cannot write '" + path + "'");
    out << content;
}

struct SourceArgs {
    std::string spec_path;
    std::string family;
    int m = 0, n = 0;
    std::string sigma = "cycle";
    std::string alpha;
    std::string theta;
    std::string h_path;
    std::string rescale;
};

void add_source_options(CLI::App* cmd, SourceArgs& src) {
    cmd->add_option("--spec", src.spec_path, "spec file with alpha + iet/family stanzas");
    cmd->add_option("--family", src.family,
                    "family name: reverse-shift | block-rotation | half-swap | rotation | "
                    "conj-rot");
    cmd->add_option("--m", src.m, "interval count for reverse-shift (m > 3)");
    cmd->add_option("--n", src.n, "cell count for block-rotation");
    cmd->add_option("--sigma", src.sigma, "cell permutation: cycle | reversal | [i1,...]");
    cmd->add_option("--alpha", src.alpha, "alpha value, e.g. sqrt(2)/8 or cf[0;(2)]");
    cmd->add_option("--theta", src.theta, "rotation angle literal, e.g. \"a\" or \"1/3\"");
    cmd->add_option("--h", src.h_path, "spec file of the conjugating exchange (conj-rot)");
    cmd->add_option("--rescale", src.rescale, "rational factor applied to all coordinates");
}

Iet realize_source(const SourceArgs& src, const ParseOptions& options, std::string* chart_note) {
    if (!src.spec_path.empty()) {
        ParsedSpec spec = parse_spec(read_file(src.spec_path), options);
        return realize_spec(spec, options);
    }
    if (src.family.empty())
        throw Error(ErrorCode::SemanticError, "give either --spec or --family");
    ParsedSpec spec;
    if (!src.alpha.empty()) spec.alpha = parse_alpha_expr(src.alpha, options);
    FamilySpec fam;
    fam.name = src.family;
    fam.m = src.m;
    fam.n = src.n;
    fam.sigma = src.sigma;
    fam.theta = src.theta;
    fam.h_path = src.h_path;
    if (!src.rescale.empty()) fam.rescale = parse_rational(src.rescale);
    spec.family = fam;
    if (chart_note) {
        if (src.family == "block-rotation" && !fam.rescale)
            *chart_note = "cell coordinates [0, n)";
        else if (fam.rescale)
            *chart_note = "rescaled by " + rational_str(*fam.rescale);
    }
    return realize_spec(spec, options);
}

std::vector<IntervalSet::Piece> parse_cells(const std::string& text) {
    // "u1,v1;u2,v2;..."
    std::vector<IntervalSet::Piece> cells;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::SyntaxError, "cells must look like \"u,v;u,v\"");
        cells.push_back(
            {parse_qalpha(part.substr(0, comma)), parse_qalpha(part.substr(comma + 1))});
    }
    return cells;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of interval exchange transformations"};
    app.require_subcommand(1);

    bool allow_rational = false;
    int precision_cap = AlphaOracle::kDefaultPrecisionCap;
    if (const char* env = std::getenv("IETFORGE_PRECISION_CAP")) precision_cap = std::atoi(env);
    app.add_flag("--allow-rational", allow_rational,
                 "accept rational alpha values (degenerate experiments)");
    app.add_option("--precision-cap", precision_cap,
                   "enclosure refinement cap (env IETFORGE_PRECISION_CAP)");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "full report: combinatorics, idoc, "
                                                      "minimality, eigen-structure");
    SourceArgs an_src;
    add_source_options(analyze_cmd, an_src);
    Budgets budgets;
    std::string an_out, an_svg, an_cells;
    long long an_birkhoff = 0;
    std::string an_from = "0";
    analyze_cmd->add_option("--idoc-depth", budgets.idoc_depth, "orbit scan depth");
    analyze_cmd->add_option("--max-period", budgets.cycle_max_period,
                            "interval-cycle period bound (0: twice the interval count)");
    analyze_cmd->add_option("--max-pieces", budgets.union_max_pieces,
                            "piece budget for the invariant-union closure");
    analyze_cmd->add_option("--max-steps", budgets.union_max_steps,
                            "step budget for the invariant-union closure");
    analyze_cmd->add_option("--birkhoff", an_birkhoff, "also run N orbit steps of statistics");
    analyze_cmd->add_option("--from", an_from, "statistics start point (value literal)");
    analyze_cmd->add_option("--cells", an_cells, "statistics cells \"u,v;u,v\" "
                                                 "(default: the partition intervals)");
    analyze_cmd->add_option("--out", an_out, "report file (default stdout)");
    analyze_cmd->add_option("--svg", an_svg, "also render the graph");

    // family
    auto* family_cmd = app.add_subcommand("family", "construct a family member and emit its spec");
    SourceArgs fam_src;
    add_source_options(family_cmd, fam_src);
    std::string fam_out, fam_svg;
    family_cmd->add_option("--out", fam_out, "spec file (default stdout)");
    family_cmd->add_option("--svg", fam_svg, "also render the graph");

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a point exactly");
    SourceArgs orb_src;
    add_source_options(orbit_cmd, orb_src);
    std::string orb_from = "0", orb_out;
    long long orb_steps = 1;
    orbit_cmd->add_option("--from", orb_from, "start point (value literal)");
    orbit_cmd->add_option("--steps", orb_steps, "step count (negative iterates the inverse)");
    orbit_cmd->add_option("--out", orb_out, "output file (default stdout)");

    // induce
    auto* induce_cmd = app.add_subcommand("induce", "first-return map on a base interval");
    SourceArgs ind_src;
    add_source_options(induce_cmd, ind_src);
    std::string ind_base = "0,1", ind_out;
    long long ind_budget = 0;
    induce_cmd->add_option("--base", ind_base, "base interval \"u,v\"");
    induce_cmd->add_option("--budget", ind_budget, "per-piece step budget (0: 10^4 * m)");
    induce_cmd->add_option("--out", ind_out, "output file (default stdout)");

    // render
    auto* render_cmd = app.add_subcommand("render", "deterministic SVG of the graph");
    SourceArgs ren_src;
    add_source_options(render_cmd, ren_src);
    std::string ren_svg = "-";
    int ren_size = 540;
    bool ren_no_grid = false;
    render_cmd->add_option("--svg", ren_svg, "output file (default stdout)");
    render_cmd->add_option("--size", ren_size, "plot area side in px");
    render_cmd->add_flag("--no-grid", ren_no_grid, "skip the dashed breakpoint grid");

    // birkhoff
    auto* birk_cmd = app.add_subcommand("birkhoff", "orbit visit frequencies vs Lebesgue");
    SourceArgs birk_src;
    add_source_options(birk_cmd, birk_src);
    std::string birk_from = "0", birk_cells, birk_out;
    long long birk_steps = 100000, birk_threshold = 1000000;
    birk_cmd->add_option("--from", birk_from, "start point (value literal)");
    birk_cmd->add_option("--steps", birk_steps, "orbit length");
    birk_cmd->add_option("--cells", birk_cells, "test cells \"u,v;u,v\" "
                                                "(default: the partition intervals)");
    birk_cmd->add_option("--float-threshold", birk_threshold,
                         "switch to compensated float arithmetic above this step count");
    birk_cmd->add_option("--out", birk_out, "output file (default stdout)");

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "canonical composition outer o inner");
    std::string comp_outer, comp_inner, comp_out;
    compose_cmd->add_option("outer", comp_outer, "spec file of the outer map")->required();
    compose_cmd->add_option("inner", comp_inner, "spec file of the inner map")->required();
    compose_cmd->add_option("--out", comp_out, "spec file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    ParseOptions options{allow_rational, precision_cap};

    try {
        if (*analyze_cmd) {
            std::string chart;
            Iet T = realize_source(an_src, options, &chart);
            AnalysisOptions opts;
            opts.budgets = budgets;
            opts.chart_note = chart;
            if (an_birkhoff > 0) {
                opts.run_birkhoff = true;
                opts.birkhoff_steps = an_birkhoff;
                opts.birkhoff_from = parse_qalpha(an_from).normalized_for(T.oracle());
                if (!an_cells.empty())
                    for (auto& [lo, hi] : parse_cells(an_cells))
                        opts.birkhoff_cells.push_back(
                            {lo.normalized_for(T.oracle()), hi.normalized_for(T.oracle())});
            }
            write_output(an_out, dump_report(analyze(T, opts)));
            if (!an_svg.empty()) write_output(an_svg, render_svg(T));
        } else if (*family_cmd) {
            Iet T = realize_source(fam_src, options, nullptr);
            write_output(fam_out, serialize_iet(T));
            if (!fam_svg.empty()) write_output(fam_svg, render_svg(T));
        } else if (*orbit_cmd) {
            Iet T = realize_source(orb_src, options, nullptr);
            QAlpha x0 = parse_qalpha(orb_from).normalized_for(T.oracle());
            OrbitPoint pt = T.iterate(x0, orb_steps);
            write_output(orb_out, dump_report(orbit_to_json(T, pt)));
        } else if (*induce_cmd) {
            Iet T = realize_source(ind_src, options, nullptr);
            auto comma = ind_base.find(',');
            if (comma == std::string::npos)
                throw Error(ErrorCode::SyntaxError, "--base must look like \"u,v\"");
            QAlpha u = parse_qalpha(ind_base.substr(0, comma)).normalized_for(T.oracle());
            QAlpha v = parse_qalpha(ind_base.substr(comma + 1)).normalized_for(T.oracle());
            ReturnSystem sys = first_return(T, u, v, ind_budget);
            write_output(ind_out, dump_report(return_system_to_json(sys, T.oracle())));
        } else if (*render_cmd) {
            Iet T = realize_source(ren_src, options, nullptr);
            SvgOptions svg_opts;
            svg_opts.plot_size = ren_size;
            svg_opts.grid = !ren_no_grid;
            write_output(ren_svg, render_svg(T, svg_opts));
        } else if (*birk_cmd) {
            Iet T = realize_source(birk_src, options, nullptr);
            QAlpha x0 = parse_qalpha(birk_from).normalized_for(T.oracle());
            std::vector<IntervalSet::Piece> cells;
            if (!birk_cells.empty()) {
                for (auto& [lo, hi] : parse_cells(birk_cells))
                    cells.push_back({lo.normalized_for(T.oracle()), hi.normalized_for(T.oracle())});
            } else {
                for (int i = 1; i <= T.interval_count(); ++i)
                    cells.push_back({T.breakpoints()[i - 1], T.breakpoints()[i]});
            }
            BirkhoffStats stats = birkhoff_discrepancy(T, x0, birk_steps, cells, birk_threshold);
            write_output(birk_out, dump_report(birkhoff_to_json(stats)));
        } else if (*compose_cmd) {
            ParsedSpec outer_spec = parse_spec(read_file(comp_outer), options);
            ParsedSpec inner_spec = parse_spec(read_file(comp_inner), options);
            Iet outer = realize_spec(outer_spec, options);
            Iet inner = realize_spec(inner_spec, options);
            write_output(comp_out, serialize_iet(compose(outer, inner)));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
