#pragma once

#include <vector>

#include "ietforge/alpha.hpp"
#include "ietforge/permutation.hpp"
#include "ietforge/qalpha.hpp"

namespace ietforge {

struct OrbitPoint {
    QAlpha position;
    long long steps = 0;
    QAlpha displacement;                  // position - start, exact
    std::vector<long long> occupation;    // visits per interval over the walk
};

/// An interval exchange transformation of [0, r): breakpoints
/// a_0 = 0 < a_1 < ... < a_m = r, a permutation of the m intervals and the
/// per-interval translation amounts. All coordinates are exact elements of
/// the session's rank-2 space; intervals are half-open [a, b) everywhere and
/// the right endpoint r is never in the domain.
///
/// Values are immutable after construction and every operation is pure.
class Iet {
public:
    /// Assembles the exchange from the permutation and positive lengths.
    /// translations[i] = (right end of the i-th image interval) - a_i, which
    /// is the classical formula
    ///   delta_i = sum_{j <= pi(i)} lambda_{pi^-1(j)} - sum_{j <= i} lambda_j.
    /// The image intervals are re-derived and checked to tile [0, r) exactly.
    static Iet build(const Permutation& pi, std::vector<QAlpha> lengths, AlphaOracle oracle);

    /// Canonical form of a piecewise translation given by its breakpoints
    /// (a_0 .. a_k, strictly increasing, a_0 = 0) and per-piece translations.
    /// Adjacent pieces with equal translation are merged; the map must be an
    /// exact bijection of [0, r) or SemanticError is thrown.
    static Iet from_pieces(std::vector<QAlpha> breakpoints, std::vector<QAlpha> translations,
                           AlphaOracle oracle);

    int interval_count() const { return static_cast<int>(translations_.size()); }
    const QAlpha& total_length() const { return breakpoints_.back(); }
    const AlphaOracle& oracle() const { return oracle_; }
    const Permutation& permutation() const { return perm_; }

    const std::vector<QAlpha>& breakpoints() const { return breakpoints_; }        // a_0..a_m
    const std::vector<QAlpha>& lengths() const { return lengths_; }                // lambda_1..m
    const std::vector<QAlpha>& translations() const { return translations_; }      // delta_1..m
    const std::vector<QAlpha>& image_breakpoints() const { return image_breaks_; } // b_0..b_m

    /// Interior breakpoints a_1..a_{m-1}, i.e. the potential discontinuities.
    std::vector<QAlpha> discontinuities() const;

    /// 1-based index i with a_{i-1} <= x < a_i; OutOfDomain outside [0, r).
    int locate(const QAlpha& x) const;

    QAlpha apply(const QAlpha& x) const;

    Iet inverse() const;

    /// Merged canonical form (adjacent intervals with identical translation
    /// collapse). Equality of exchanges always compares canonical forms.
    Iet canonical() const;
    bool same_map_as(const Iet& other) const;

    Iet rescaled(const Rational& c) const;

    /// Walks |l| exact steps (backwards through the inverse when l < 0) and
    /// reports the landing point, the exact displacement and the per-interval
    /// occupation counts of the map actually iterated.
    OrbitPoint iterate(const QAlpha& start, long long l) const;

    bool operator==(const Iet&) const = default;

private:
    Iet(AlphaOracle oracle, Permutation perm, std::vector<QAlpha> breaks,
        std::vector<QAlpha> lengths, std::vector<QAlpha> deltas, std::vector<QAlpha> image_breaks)
        : oracle_(std::move(oracle)),
          perm_(std::move(perm)),
          breakpoints_(std::move(breaks)),
          lengths_(std::move(lengths)),
          translations_(std::move(deltas)),
          image_breaks_(std::move(image_breaks)) {}

    AlphaOracle oracle_;
    Permutation perm_;
    std::vector<QAlpha> breakpoints_;
    std::vector<QAlpha> lengths_;
    std::vector<QAlpha> translations_;
    std::vector<QAlpha> image_breaks_;
};

/// S after T, as a canonical exchange. Both maps must live on the same
/// interval and the same oracle; the breakpoints of the result are T's
/// breakpoints refined by the T-preimages of S's breakpoints.
Iet compose(const Iet& S, const Iet& T);

}  // namespace ietforge
