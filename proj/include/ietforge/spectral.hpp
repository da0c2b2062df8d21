#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ietforge/iet.hpp"
#include "ietforge/interval_set.hpp"

namespace ietforge {

/// Witness that every translation satisfies delta_i = r + p_i * s with
/// integer p_i. It certifies the eigenvalue exp(2*i*pi*r/s) of the
/// composition operator, with the continuous eigenfunction
/// exp(2*i*pi*x/s): on each interval
///   f(T(x)) = exp(2*i*pi*(x + r + p_i s)/s) = exp(2*i*pi*r/s) * f(x).
///
/// Normalization: s is the positive generator of the group generated by the
/// differences delta_i - delta_1 (so the p_i differences have gcd 1), r is
/// delta_1 itself and p_1 = 0. Any refinement (s/k, k*p) is an equally valid
/// witness; this one generates all of them.
struct AffineEigenStructure {
    QAlpha r;
    QAlpha s;
    std::vector<Integer> p;

    /// r/s reduced mod 1, exact, defined whenever s is rational.
    std::optional<QAlpha> eigenvalue_theta(const AlphaOracle& oracle) const;
};

std::optional<AffineEigenStructure> detect_affine_structure(std::span<const QAlpha> deltas,
                                                            const AlphaOracle& oracle);
std::optional<AffineEigenStructure> detect_affine_structure(const Iet& T);

struct AffineEigenCheck {
    int index = 0;     // 1-based interval
    QAlpha delta;
    QAlpha difference; // delta - r
    Integer quotient;  // difference / s
};

/// The machine-checkable residue of the eigen-relation: for every interval,
/// delta_i - r is an exact integer multiple of s and that integer matches
/// E.p[i]. Throws VerificationError with the offending index otherwise.
struct AffineEigenProof {
    AffineEigenStructure structure;
    std::vector<AffineEigenCheck> checks;
};

AffineEigenProof verify_affine_eigen(const Iet& T, const AffineEigenStructure& E);

/// Intervals permuted cyclically by T: T maps each piece onto the next one
/// exactly (as a set; the restriction may use several translation branches).
/// A cycle of period n certifies the rational eigenvalue exp(2*i*pi/n) with
/// the step eigenfunction taking value exp(2*i*pi*k/n) on piece k.
struct IntervalCycle {
    std::vector<IntervalSet::Piece> pieces;
    int period() const { return static_cast<int>(pieces.size()); }
};

struct CycleObstruction {
    IntervalSet::Piece candidate;
    int step = 0;
    std::string reason;  // "split-required" | "overlap"
};

struct CycleSearchResult {
    std::vector<IntervalCycle> cycles;
    std::vector<CycleObstruction> obstructions;
};

/// Follows forward images of every interval delimited by consecutive chosen
/// generators (a subset of the discontinuities). A candidate whose image
/// stops being a single interval is reported as an obstruction, not split.
/// Cycles closing exactly within max_period are reported, deduplicated as
/// sets of pieces.
CycleSearchResult find_interval_cycles(const Iet& T, std::span<const QAlpha> generators,
                                       int max_period);

/// Exact re-check of a reported cycle: pieces pairwise disjoint and
/// T(piece_k) == piece_{k+1 mod n} piece by piece, which is precisely the
/// interval-level statement that the step function with value
/// exp(2*i*pi*k/n) on piece k satisfies phi(T(x)) = exp(2*i*pi/n) phi(x).
bool verify_interval_cycle(const Iet& T, const IntervalCycle& cycle);

struct WeakMixingVerdict {
    enum class Verdict {
        NotTopologicallyWeaklyMixing,    // exact continuous-eigenfunction witness
        NoContinuousEigenfunctionFound,  // bounded search, not a proof
        Inconclusive,
    };
    std::optional<AffineEigenStructure> affine;
    std::vector<IntervalCycle> rational_cycles;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> diagnostics;
};

/// Runs the affine detector plus the interval-cycle search (over all
/// discontinuities, and over the rational-coordinate discontinuities when
/// that is a proper subset) and assembles the verdict. An affine witness
/// means a non-constant continuous eigenfunction exists. Rational cycles
/// carry step eigenfunctions, which are only piecewise continuous, so they
/// are reported separately and do not by themselves settle the verdict.
WeakMixingVerdict weak_mixing_report(const Iet& T, int max_period = 0);

}  // namespace ietforge
