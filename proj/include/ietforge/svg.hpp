#pragma once

#include <string>

#include "ietforge/iet.hpp"

namespace ietforge {

struct SvgOptions {
    int plot_size = 540;   // side of the square plot area, px
    int margin = 90;       // room for labels
    bool grid = true;      // dashed lines at breakpoints and image breakpoints
};

/// Graph of the exchange in its square [0,r) x [0,r): one unit-slope segment
/// per interval from (a_{i-1}, a_{i-1}+d_i) to (a_i, a_i+d_i), a filled dot
/// at the attained left endpoint and an open dot at the excluded right one.
/// Labels carry the exact literals; coordinates are rendered to 9
/// significant digits. Output is deterministic: identical input and version
/// give identical bytes.
std::string render_svg(const Iet& T, const SvgOptions& options = {});

}  // namespace ietforge
