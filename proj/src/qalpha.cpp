#include "ietforge/qalpha.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ietforge {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (!is_integer(r)) os << "/" << rat_den(r);
    return os.str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "bad rational literal '" + s + "'");
    }
}

Rational parse_decimal(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty numeric literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    Integer mantissa = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            break;
        } else {
            throw Error(ErrorCode::SyntaxError, "bad numeric literal '" + s + "'");
        }
    }
    long exp10 = 0;
    if (i < s.size()) {  // exponent part
        try {
            exp10 = std::stol(s.substr(i + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::SyntaxError, "bad exponent in '" + s + "'");
        }
    }
    if (!seen_digit) throw Error(ErrorCode::SyntaxError, "bad numeric literal '" + s + "'");
    Rational v(mantissa);
    long e = exp10 - frac_digits;
    Integer pow10 = 1;
    for (long k = 0; k < std::abs(e); ++k) pow10 *= 10;
    if (e >= 0)
        v *= Rational(pow10);
    else
        v /= Rational(pow10);
    return neg ? -v : v;
}

std::string QAlpha::str() const {
    if (p == 0) return rational_str(q);
    std::ostringstream os;
    auto alpha_term = [](const Rational& coef) -> std::string {
        if (coef == 1) return "a";
        return rational_str(coef) + "*a";
    };
    if (q == 0) {
        if (p < 0) return "-" + alpha_term(-p);
        return alpha_term(p);
    }
    os << rational_str(q) << (p > 0 ? " + " : " - ") << alpha_term(boost::multiprecision::abs(p));
    return os.str();
}

std::string QAlpha::key() const { return rational_str(q) + "|" + rational_str(p); }

QAlpha QAlpha::normalized_for(const AlphaOracle& oracle) const {
    if (oracle.is_rational() && p != 0)
        return QAlpha(q + p * oracle.rational_value(), Rational(0));
    return *this;
}

QAlpha parse_qalpha(std::string_view text) {
    // term := rational ['*' 'a'] | 'a' ; expr := ['-'] term {('+'|'-') term}
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty value literal");

    QAlpha acc = QAlpha::zero();
    std::size_t i = 0;
    int pending_sign = 1;
    if (s[0] == '-') {
        pending_sign = -1;
        i = 1;
    } else if (s[0] == '+') {
        i = 1;
    }
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw Error(ErrorCode::SyntaxError, "dangling sign in '" + s + "'");
        Rational coef;
        bool is_alpha = false;
        if (term == "a") {
            is_alpha = true;
            coef = 1;
        } else if (term.size() > 2 && term.substr(term.size() - 2) == "*a") {
            is_alpha = true;
            coef = parse_rational(term.substr(0, term.size() - 2));
        } else {
            coef = parse_rational(term);
        }
        if (is_alpha)
            acc += QAlpha::of_alpha(pending_sign * coef);
        else
            acc += QAlpha::of_rational(pending_sign * coef);
        if (j < s.size()) {
            pending_sign = s[j] == '-' ? -1 : 1;
            i = j + 1;
            if (i >= s.size())
                throw Error(ErrorCode::SyntaxError, "dangling sign in '" + s + "'");
        } else {
            i = j;
        }
    }
    return acc;
}

namespace {

int sign_against_sqrt(const QAlpha& x, const Rational& square) {
    // alpha = sqrt(square) > 0, x.p != 0
    int sq = sign_of(x.q), sp = sign_of(x.p);
    if (sq == 0) return sp;
    if (sq == sp) return sq;
    // opposite signs: compare q^2 with p^2 * square
    Rational lhs = x.q * x.q, rhs = x.p * x.p * square;
    if (lhs > rhs) return sq;
    if (lhs < rhs) return sp;
    throw Error(ErrorCode::Internal, "certified-irrational sqrt oracle hit an exact tie");
}

}  // namespace

int qa_sign(const QAlpha& x, const AlphaOracle& oracle) {
    if (x.p == 0) return sign_of(x.q);
    if (oracle.is_rational())
        return sign_of(x.q + x.p * oracle.rational_value());
    if (oracle.kind() == AlphaOracle::Kind::SqrtRational)
        return sign_against_sqrt(x, *oracle.square());

    // q + p*alpha <> 0  <=>  alpha <> -q/p (direction depends on sign of p).
    Rational candidate = -x.q / x.p;
    int sp = sign_of(x.p);
    AlphaOracle::Enclosure prev{Rational(0), Rational(0)};
    for (int round = 0; round < oracle.precision_cap(); ++round) {
        auto e = oracle.enclosure(round);
        if (oracle.certified_irrational()) {
            // alpha != candidate, so touching an endpoint already decides.
            if (candidate <= e.lo) return sp;       // alpha > candidate
            if (candidate >= e.hi) return -sp;      // alpha < candidate
        } else {
            if (candidate < e.lo) return sp;
            if (candidate > e.hi) return -sp;
        }
        if (round > 0 && !(e.hi - e.lo < prev.hi - prev.lo)) {
            // no progress; a fixed interval cannot separate
            break;
        }
        prev = e;
    }
    if (oracle.certified_irrational())
        throw Error(ErrorCode::PrecisionExhausted,
                    "sign of " + x.str() + " undecided after refinement cap");
    throw Error(ErrorCode::IrrationalityUnknown,
                "cannot exclude alpha = " + rational_str(candidate) +
                    " for an uncertified oracle");
}

std::optional<Integer> qa_integer_quotient(const QAlpha& x, const QAlpha& s) {
    if (s.is_zero())
        throw Error(ErrorCode::ParameterOutOfRange, "integer quotient by zero");
    auto ratio_int = [](const Rational& a, const Rational& b) -> std::optional<Integer> {
        Rational r = a / b;
        if (!is_integer(r)) return std::nullopt;
        return rat_num(r);
    };
    if (s.q != 0 && s.p != 0) {
        auto kq = ratio_int(x.q, s.q);
        auto kp = ratio_int(x.p, s.p);
        if (kq && kp && *kq == *kp) return kq;
        return std::nullopt;
    }
    if (s.q != 0) {  // s.p == 0: need x.p == 0
        if (x.p != 0) return std::nullopt;
        return ratio_int(x.q, s.q);
    }
    // s.q == 0, s.p != 0: need x.q == 0
    if (x.q != 0) return std::nullopt;
    return ratio_int(x.p, s.p);
}

Integer qa_floor(const QAlpha& x, const AlphaOracle& oracle) {
    if (x.p == 0) return floor_rational(x.q);
    if (oracle.is_rational()) return floor_rational(x.q + x.p * oracle.rational_value());
    // start from a double guess, then fix up exactly
    double guess = qa_to_double(x, oracle);
    Integer k(static_cast<long long>(std::floor(guess)));
    while (qa_sign(x - QAlpha::of_rational(Rational(k)), oracle) < 0) --k;
    while (qa_sign(x - QAlpha::of_rational(Rational(k + 1)), oracle) >= 0) ++k;
    return k;
}

double qa_to_double(const QAlpha& x, const AlphaOracle& oracle) {
    if (x.p == 0) return to_double(x.q);
    if (oracle.is_rational()) return to_double(x.q + x.p * oracle.rational_value());
    auto e = oracle.enclosure(3);
    Rational mid = (e.lo + e.hi) / 2;
    return to_double(x.q + x.p * mid);
}

}  // namespace ietforge
