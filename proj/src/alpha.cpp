#include "ietforge/alpha.hpp"

#include <algorithm>
#include <sstream>

namespace ietforge {

namespace {

bool rational_is_square(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Integer n = rat_num(r), d = rat_den(r);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    root = make_rational(sn, sd);
    return true;
}

}  // namespace

AlphaOracle AlphaOracle::sqrt_rational(const Rational& radicand, bool allow_rational) {
    if (radicand <= 0 || radicand >= 1)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "sqrt radicand must lie in (0,1), got " + rational_str(radicand));
    Rational root;
    if (rational_is_square(radicand, root)) {
        if (!allow_rational)
            throw Error(ErrorCode::ParameterOutOfRange,
                        "sqrt(" + rational_str(radicand) +
                            ") is rational; pass --allow-rational for degenerate runs");
        return explicit_rational(root, true);
    }
    AlphaOracle o;
    o.kind_ = Kind::SqrtRational;
    o.certified_irrational_ = true;
    o.square_ = radicand;
    return o;
}

AlphaOracle AlphaOracle::scaled_sqrt(const Rational& scale, const Rational& radicand,
                                     bool allow_rational) {
    if (scale <= 0)
        throw Error(ErrorCode::ParameterOutOfRange, "sqrt scale must be positive");
    if (radicand <= 0)
        throw Error(ErrorCode::ParameterOutOfRange, "sqrt radicand must be positive");
    return sqrt_rational(scale * scale * radicand, allow_rational);
}

AlphaOracle AlphaOracle::continued_fraction(const Integer& a0, std::vector<Integer> prefix,
                                            std::vector<Integer> period, bool allow_rational) {
    if (a0 != 0)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "continued fraction must start with 0 to stay inside (0,1)");
    for (const auto& t : prefix)
        if (t < 1) throw Error(ErrorCode::ParameterOutOfRange, "cf terms must be >= 1");
    for (const auto& t : period)
        if (t < 1) throw Error(ErrorCode::ParameterOutOfRange, "cf terms must be >= 1");
    if (period.empty()) {
        if (prefix.empty())
            throw Error(ErrorCode::ParameterOutOfRange, "empty continued fraction");
        // Finite expansion: a rational number.
        Rational v(0);
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
            v = Rational(1) / (Rational(*it) + v);
        if (!allow_rational)
            throw Error(ErrorCode::ParameterOutOfRange,
                        "finite continued fraction is rational; pass --allow-rational");
        return explicit_rational(v, true);
    }
    AlphaOracle o;
    o.kind_ = Kind::ContinuedFraction;
    o.certified_irrational_ = true;  // eventually periodic and infinite
    o.cf_a0_ = a0;
    o.cf_prefix_ = std::move(prefix);
    o.cf_period_ = std::move(period);
    return o;
}

AlphaOracle AlphaOracle::decimal_enclosure(const Rational& lo, const Rational& hi,
                                           bool refinable) {
    if (!(lo < hi))
        throw Error(ErrorCode::ParameterOutOfRange, "decimal enclosure needs lo < hi");
    if (lo < 0 || hi > 1)
        throw Error(ErrorCode::ParameterOutOfRange, "enclosure must stay within [0,1]");
    AlphaOracle o;
    o.kind_ = Kind::DecimalEnclosure;
    o.certified_irrational_ = false;
    o.decimal_refinable_ = refinable;
    o.lo_ = lo;
    o.hi_ = hi;
    return o;
}

AlphaOracle AlphaOracle::explicit_rational(const Rational& value, bool allow_rational) {
    if (!allow_rational)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "rational alpha requires --allow-rational");
    if (value <= 0 || value >= 1)
        throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie in (0,1)");
    AlphaOracle o;
    o.kind_ = Kind::ExplicitRational;
    o.certified_irrational_ = false;
    o.rational_ = value;
    return o;
}

const Rational& AlphaOracle::rational_value() const {
    if (!rational_)
        throw Error(ErrorCode::Internal, "oracle has no rational value");
    return *rational_;
}

bool AlphaOracle::refinable() const {
    switch (kind_) {
        case Kind::SqrtRational:
        case Kind::ContinuedFraction: return true;
        case Kind::DecimalEnclosure: return decimal_refinable_;
        case Kind::ExplicitRational: return false;
    }
    return false;
}

AlphaOracle AlphaOracle::with_precision_cap(int cap) const {
    if (cap < 1) throw Error(ErrorCode::ParameterOutOfRange, "precision cap must be >= 1");
    AlphaOracle o = *this;
    o.precision_cap_ = cap;
    return o;
}

AlphaOracle::Enclosure AlphaOracle::enclosure(int round) const {
    switch (kind_) {
        case Kind::ExplicitRational: return {*rational_, *rational_};
        case Kind::DecimalEnclosure: return {lo_, hi_};
        case Kind::SqrtRational: {
            // floor(sqrt(value^2 * 4^bits)) brackets the root to ~2^-bits.
            long bits = 16L << std::min(round, 16);  // beyond ~1M bits stop growing
            Integer n = rat_num(*square_), d = rat_den(*square_);
            Integer scale = Integer(1) << (2 * bits);
            Integer scaled = n * scale / d;
            Integer t = boost::multiprecision::sqrt(scaled);
            Integer denom = Integer(1) << bits;
            return {make_rational(t, denom), make_rational(t + 2, denom)};
        }
        case Kind::ContinuedFraction: {
            std::size_t terms = std::size_t(4) << std::min(round, 10);
            // p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1
            Integer pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
            Integer p = cf_a0_, q = 1;
            p = cf_a0_ * pm1 + pm2;
            q = cf_a0_ * qm1 + qm2;
            pm2 = pm1; pm1 = p; qm2 = qm1; qm1 = q;
            Rational prev = make_rational(p, q), cur = prev;
            std::size_t i = 0;
            while (i < terms) {
                const Integer& a = i < cf_prefix_.size()
                                       ? cf_prefix_[i]
                                       : cf_period_[(i - cf_prefix_.size()) % cf_period_.size()];
                p = a * pm1 + pm2;
                q = a * qm1 + qm2;
                pm2 = pm1; pm1 = p; qm2 = qm1; qm1 = q;
                prev = cur;
                cur = make_rational(p, q);
                ++i;
            }
            return {std::min(prev, cur), std::max(prev, cur)};
        }
    }
    throw Error(ErrorCode::Internal, "bad oracle kind");
}

std::string AlphaOracle::text() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::SqrtRational: os << "sqrt(" << rational_str(*square_) << ")"; break;
        case Kind::ExplicitRational: os << rational_str(*rational_); break;
        case Kind::DecimalEnclosure: {
            Rational mid = (lo_ + hi_) / 2, rad = (hi_ - lo_) / 2;
            os << rational_str(mid) << " +/- " << rational_str(rad);
            break;
        }
        case Kind::ContinuedFraction: {
            os << "cf[" << cf_a0_ << ";";
            bool first = true;
            for (const auto& t : cf_prefix_) {
                os << (first ? "" : ",") << t;
                first = false;
            }
            if (!first) os << ",";
            os << "(";
            first = true;
            for (const auto& t : cf_period_) {
                os << (first ? "" : ",") << t;
                first = false;
            }
            os << ")]";
            break;
        }
    }
    return os.str();
}

double AlphaOracle::approx() const {
    Enclosure e = enclosure(2);
    return to_double((e.lo + e.hi) / 2);
}

bool AlphaOracle::operator==(const AlphaOracle& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::SqrtRational: return square_ == other.square_;
        case Kind::ExplicitRational: return rational_ == other.rational_;
        case Kind::DecimalEnclosure: return lo_ == other.lo_ && hi_ == other.hi_;
        case Kind::ContinuedFraction:
            return cf_a0_ == other.cf_a0_ && cf_prefix_ == other.cf_prefix_ &&
                   cf_period_ == other.cf_period_;
    }
    return false;
}

}  // namespace ietforge
