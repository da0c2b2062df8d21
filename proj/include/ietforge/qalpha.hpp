#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ietforge/alpha.hpp"
#include "ietforge/rational.hpp"

namespace ietforge {

/// An exact element q + p*alpha of the rank-2 space spanned by 1 and the
/// session irrational. Coordinatewise equality is sound exactly when alpha
/// is certified irrational; for the explicit-rational degenerate mode all
/// values are normalized to p = 0 at construction boundaries, so equality
/// stays coordinatewise there too.
struct QAlpha {
    Rational q;  // coefficient of 1
    Rational p;  // coefficient of alpha

    QAlpha() = default;
    QAlpha(Rational q_, Rational p_) : q(std::move(q_)), p(std::move(p_)) {}

    static QAlpha zero() { return QAlpha(Rational(0), Rational(0)); }
    static QAlpha of_rational(Rational v) { return QAlpha(std::move(v), Rational(0)); }
    static QAlpha of_alpha(Rational coef = Rational(1)) {
        return QAlpha(Rational(0), std::move(coef));
    }
    static QAlpha of_int(long v) { return of_rational(Rational(v)); }

    bool is_zero() const { return q == 0 && p == 0; }
    bool is_rational() const { return p == 0; }

    bool operator==(const QAlpha&) const = default;

    QAlpha operator+(const QAlpha& o) const { return QAlpha(q + o.q, p + o.p); }
    QAlpha operator-(const QAlpha& o) const { return QAlpha(q - o.q, p - o.p); }
    QAlpha operator-() const { return QAlpha(-q, -p); }
    QAlpha& operator+=(const QAlpha& o) {
        q += o.q;
        p += o.p;
        return *this;
    }
    QAlpha& operator-=(const QAlpha& o) {
        q -= o.q;
        p -= o.p;
        return *this;
    }

    // Literal form: "1/3", "a", "1/3 - a", "1/2 + 2/3*a", ...
    std::string str() const;

    // Stable key for exact-value dictionaries.
    std::string key() const;

    // Folds p into q when the oracle is an explicit rational; identity
    // otherwise. Applied wherever values enter from outside (parser, family
    // parameters, CLI arguments).
    QAlpha normalized_for(const AlphaOracle& oracle) const;
};

inline QAlpha operator*(const Rational& c, const QAlpha& x) { return QAlpha(c * x.q, c * x.p); }
inline QAlpha operator*(const QAlpha& x, const Rational& c) { return c * x; }

inline QAlpha qa_scale(const QAlpha& x, const Rational& c) { return c * x; }

/// Exact sign of q + p*alpha. Rational values never consult the oracle.
/// Otherwise the candidate -q/p is separated from alpha, algebraically for
/// sqrt oracles, by enclosure refinement for the rest. Throws
/// PrecisionExhausted when a certified oracle hits its refinement cap and
/// IrrationalityUnknown when an uncertified oracle cannot exclude that alpha
/// equals the candidate.
int qa_sign(const QAlpha& x, const AlphaOracle& oracle);

inline int qa_cmp(const QAlpha& x, const QAlpha& y, const AlphaOracle& oracle) {
    return qa_sign(x - y, oracle);
}
inline bool qa_less(const QAlpha& x, const QAlpha& y, const AlphaOracle& oracle) {
    return qa_cmp(x, y, oracle) < 0;
}
inline bool qa_leq(const QAlpha& x, const QAlpha& y, const AlphaOracle& oracle) {
    return qa_cmp(x, y, oracle) <= 0;
}

/// k such that x = k*s exactly with k an integer, decided coordinatewise:
/// the two rational divisibility checks must agree. s must be nonzero.
std::optional<Integer> qa_integer_quotient(const QAlpha& x, const QAlpha& s);

/// Largest integer k with k <= x.
Integer qa_floor(const QAlpha& x, const AlphaOracle& oracle);

double qa_to_double(const QAlpha& x, const AlphaOracle& oracle);

QAlpha parse_qalpha(std::string_view text);

struct QAlphaHash {
    std::size_t operator()(const QAlpha& x) const {
        return std::hash<std::string>{}(x.key());
    }
};

}  // namespace ietforge
