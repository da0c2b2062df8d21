#include "ietforge/svg.hpp"

#include <cstdio>
#include <sstream>

namespace ietforge {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Iet& T, const SvgOptions& options) {
    const AlphaOracle& oracle = T.oracle();
    const double r = qa_to_double(T.total_length(), oracle);
    const double S = options.plot_size;
    const double M = options.margin;
    const double W = S + 2 * M;

    auto sx = [&](double x) { return M + x / r * S; };
    auto sy = [&](double y) { return M + S - y / r * S; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
        << fmt(W) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(W) << "\">\n";
    svg << "  <rect x=\"" << fmt(M) << "\" y=\"" << fmt(M) << "\" width=\"" << fmt(S)
        << "\" height=\"" << fmt(S) << "\" fill=\"white\" stroke=\"black\"/>\n";

    if (options.grid) {
        for (int i = 1; i < T.interval_count(); ++i) {
            double x = sx(qa_to_double(T.breakpoints()[i], oracle));
            svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(M) << "\" x2=\"" << fmt(x)
                << "\" y2=\"" << fmt(M + S)
                << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"0.6\"/>\n";
        }
        for (int j = 1; j < T.interval_count(); ++j) {
            double y = sy(qa_to_double(T.image_breakpoints()[j], oracle));
            svg << "  <line x1=\"" << fmt(M) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(M + S)
                << "\" y2=\"" << fmt(y)
                << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"0.6\"/>\n";
        }
    }

    // axis labels: exact literals at the breakpoints
    for (int i = 0; i <= T.interval_count(); ++i) {
        double x = sx(qa_to_double(T.breakpoints()[i], oracle));
        svg << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(M + S + 16)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << T.breakpoints()[i].str()
            << "</text>\n";
    }
    for (int j = 0; j <= T.interval_count(); ++j) {
        double y = sy(qa_to_double(T.image_breakpoints()[j], oracle));
        svg << "  <text x=\"" << fmt(M - 8) << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << T.image_breakpoints()[j].str()
            << "</text>\n";
    }

    for (int i = 1; i <= T.interval_count(); ++i) {
        double x1 = qa_to_double(T.breakpoints()[i - 1], oracle);
        double x2 = qa_to_double(T.breakpoints()[i], oracle);
        double d = qa_to_double(T.translations()[i - 1], oracle);
        svg << "  <line x1=\"" << fmt(sx(x1)) << "\" y1=\"" << fmt(sy(x1 + d)) << "\" x2=\""
            << fmt(sx(x2)) << "\" y2=\"" << fmt(sy(x2 + d))
            << "\" stroke=\"black\" stroke-width=\"1.4\"/>\n";
        svg << "  <circle cx=\"" << fmt(sx(x1)) << "\" cy=\"" << fmt(sy(x1 + d))
            << "\" r=\"2.6\" fill=\"black\"/>\n";
        svg << "  <circle cx=\"" << fmt(sx(x2)) << "\" cy=\"" << fmt(sy(x2 + d))
            << "\" r=\"2.6\" fill=\"white\" stroke=\"black\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ietforge
