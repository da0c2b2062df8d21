#pragma once

#include <json.hpp>

#include "ietforge/dynamics.hpp"
#include "ietforge/spectral.hpp"

namespace ietforge {

inline constexpr const char* kToolName = "ietforge";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
    Budgets budgets;
    bool run_birkhoff = false;
    long long birkhoff_steps = 100000;
    QAlpha birkhoff_from;
    std::vector<IntervalSet::Piece> birkhoff_cells;  // empty: the partition intervals
    std::string chart_note;                          // e.g. "[0,n) cell coordinates"
};

/// Full analysis: combinatorics, then orbit-level dynamics, then the
/// spectral witnesses, assembled into one JSON document. Exact quantities
/// are strings in the value-literal grammar; any double is either suffixed
/// "_decimal" or sits in a block whose "mode" says "float". Output is
/// byte-stable for identical inputs and version.
nlohmann::json analyze(const Iet& T, const AnalysisOptions& options = {});

nlohmann::json iet_to_json(const Iet& T);
nlohmann::json orbit_to_json(const Iet& T, const OrbitPoint& orbit);
nlohmann::json return_system_to_json(const ReturnSystem& sys, const AlphaOracle& oracle);
nlohmann::json birkhoff_to_json(const BirkhoffStats& stats);

std::string dump_report(const nlohmann::json& report);

}  // namespace ietforge
