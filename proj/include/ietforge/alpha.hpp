#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietforge/rational.hpp"

namespace ietforge {

/// The session irrational. Every exact value in one analysis lives in the
/// rank-2 space spanned by 1 and the number this oracle designates; the
/// oracle's job is to make order decisions computable.
///
/// Kinds:
///  - SqrtRational: the positive square root of a rational in (0,1). Sign
///    queries reduce to exact rational comparisons (no enclosure needed).
///  - ContinuedFraction: [0; prefix, (period repeating)]. A non-empty period
///    makes the value a certified quadratic irrational; enclosures come from
///    consecutive convergents.
///  - DecimalEnclosure: a fixed interval [lo, hi]. Never certified
///    irrational; sign queries that need to separate a rational inside the
///    interval fail.
///  - ExplicitRational: a plain rational, for degenerate experiments behind
///    the allow-rational switch. Comparisons collapse to exact rational
///    arithmetic.
class AlphaOracle {
public:
    enum class Kind { SqrtRational, ContinuedFraction, DecimalEnclosure, ExplicitRational };

    struct Enclosure {
        Rational lo, hi;
    };

    static constexpr int kDefaultPrecisionCap = 256;

    // value = sqrt(radicand); requires 0 < radicand < 1 and radicand not a
    // square of a rational (a square value is rational and must go through
    // explicit_rational with allow_rational).
    static AlphaOracle sqrt_rational(const Rational& radicand, bool allow_rational = false);

    // value = scale * sqrt(radicand) with scale > 0; folded into sqrt form.
    static AlphaOracle scaled_sqrt(const Rational& scale, const Rational& radicand,
                                   bool allow_rational = false);

    // value = [a0; prefix..., period... repeating]. a0 must be 0. An empty
    // period means a finite expansion, i.e. a rational value, which requires
    // allow_rational.
    static AlphaOracle continued_fraction(const Integer& a0, std::vector<Integer> prefix,
                                          std::vector<Integer> period,
                                          bool allow_rational = false);

    static AlphaOracle decimal_enclosure(const Rational& lo, const Rational& hi,
                                         bool refinable = false);

    static AlphaOracle explicit_rational(const Rational& value, bool allow_rational);

    Kind kind() const { return kind_; }
    bool certified_irrational() const { return certified_irrational_; }
    bool is_rational() const { return kind_ == Kind::ExplicitRational; }
    const Rational& rational_value() const;

    // For SqrtRational: the exact square of the value.
    const std::optional<Rational>& square() const { return square_; }

    bool refinable() const;

    // Nested rationals lo <= alpha <= hi; widths shrink strictly for the
    // refinable kinds as round grows (precision roughly doubles per round).
    Enclosure enclosure(int round) const;

    int precision_cap() const { return precision_cap_; }
    AlphaOracle with_precision_cap(int cap) const;

    // Canonical declaration text, re-parseable by the spec grammar.
    std::string text() const;

    double approx() const;

    bool operator==(const AlphaOracle& other) const;

private:
    AlphaOracle() = default;

    Kind kind_ = Kind::SqrtRational;
    bool certified_irrational_ = false;
    bool decimal_refinable_ = false;
    int precision_cap_ = kDefaultPrecisionCap;
    std::optional<Rational> square_;       // SqrtRational
    std::optional<Rational> rational_;     // ExplicitRational
    Rational lo_, hi_;                     // DecimalEnclosure
    Integer cf_a0_;                        // ContinuedFraction
    std::vector<Integer> cf_prefix_, cf_period_;
};

}  // namespace ietforge
