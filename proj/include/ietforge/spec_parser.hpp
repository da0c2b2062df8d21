#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ietforge/iet.hpp"

namespace ietforge {

struct ParseOptions {
    bool allow_rational = false;
    int precision_cap = AlphaOracle::kDefaultPrecisionCap;
};

struct FamilySpec {
    std::string name;  // reverse-shift | block-rotation | half-swap | conj-rot | rotation
    int m = 0;
    int n = 0;
    std::string sigma;       // "cycle" | "reversal" | "[...]"
    std::string theta;       // rotation angle literal
    std::string h_path;      // conj-rot: spec file of the conjugating exchange
    std::optional<Rational> rescale;
};

struct ParsedSpec {
    std::optional<AlphaOracle> alpha;
    std::optional<Permutation> perm;     // iet stanza
    std::vector<QAlpha> lengths;
    std::optional<FamilySpec> family;

    bool has_iet() const { return perm.has_value(); }
};

/// Parses the stanza grammar:
///   alpha = sqrt(1/2)              (also: 3*sqrt(2)/10, cf[0;1,(2)], 1/3)
///   alpha ~ 0.4142135 +/- 1e-7
///   iet { perm = [3,2,4,1]; lengths = ["1/3","1/3","1/3-a","a"]; }
///   family { name = reverse-shift; m = 5; }
/// Exactly one of iet/family per spec; at most one alpha declaration
/// (a second one is MixedIrrationals).
ParsedSpec parse_spec(std::string_view text, const ParseOptions& options = {});

/// Builds the exchange a parsed spec describes. conj-rot families read the
/// conjugating exchange from their h file.
Iet realize_spec(const ParsedSpec& spec, const ParseOptions& options = {});

/// Canonical re-parseable spec text for an exchange (alpha declaration plus
/// an iet stanza with exact literals).
std::string serialize_iet(const Iet& T);

/// "cycle", "reversal" or an explicit one-line image list.
Permutation parse_sigma(std::string_view text, int n);

/// Oracle declaration as it appears after "alpha =" (or a "~" enclosure when
/// tilde is true, written "c +/- e").
AlphaOracle parse_alpha_expr(std::string_view text, const ParseOptions& options = {});

}  // namespace ietforge
