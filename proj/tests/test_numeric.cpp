#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ietforge/qalpha.hpp"

using namespace ietforge;

namespace {

Rational rat(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

QAlpha qa(long qn, long qd, long pn = 0, long pd = 1) {
    return QAlpha(rat(qn, qd), rat(pn, pd));
}

AlphaOracle sqrt_half() { return AlphaOracle::sqrt_rational(rat(1, 2)); }  // sqrt(2)/2

QAlpha random_qalpha(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return qa(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("arithmetic is exact and coordinatewise") {
    CHECK(qa(1, 3, 1, 1) + qa(0, 1, -1, 1) == qa(1, 3));            // cancellation
    CHECK(qa_scale(qa(1, 4, 1, 1), rat(4)) == qa(1, 1, 4, 1));      // linearity
    CHECK(qa(1, 1, -1, 1) - qa(2, 3) == qa(1, 3, -1, 1));
}

TEST_CASE("sign of rational values never consults the oracle") {
    auto oracle = AlphaOracle::decimal_enclosure(rat(41, 100), rat(42, 100));
    CHECK(qa_sign(QAlpha::zero(), oracle) == 0);
    CHECK(qa_sign(qa(-3, 7), oracle) == -1);
    CHECK(qa_sign(qa(5, 9), oracle) == 1);
}

TEST_CASE("sign against sqrt oracles is algebraic") {
    auto oracle = sqrt_half();
    CHECK(qa_sign(qa(1, 2, -1, 1), oracle) == -1);  // 1/2 < sqrt(2)/2
    // sqrt(2)/6 fits below 1/3
    auto small = AlphaOracle::sqrt_rational(rat(1, 18));
    CHECK(qa_sign(qa(1, 3, -1, 1), small) == 1);
    CHECK(qa_sign(qa(0, 1, 3, 1), oracle) == 1);
    CHECK(qa_sign(qa(0, 1, -3, 1), oracle) == -1);
    CHECK(qa_sign(qa(-7, 10, 1, 1), oracle) == 1);   // alpha ~ 0.7071 > 7/10
    CHECK(qa_sign(qa(-71, 100, 1, 1), oracle) == -1);
}

TEST_CASE("sign by enclosure refinement for continued fractions") {
    // [0;(2)] = sqrt(2) - 1
    auto cf = AlphaOracle::continued_fraction(Integer(0), {}, {Integer(2)});
    CHECK(cf.certified_irrational());
    CHECK(qa_sign(qa(-2, 5, 1, 1), cf) == 1);    // 0.4142... > 2/5
    CHECK(qa_sign(qa(-5, 12, 1, 1), cf) == -1);  // < 5/12
    // agreement with the sqrt form of the same number on random inputs
    auto sq = AlphaOracle::sqrt_rational(rat(1, 2));
    auto cf_same = AlphaOracle::continued_fraction(Integer(0), {Integer(1)}, {Integer(2)});
    // [0;1,(2)] = 1/(1+sqrt(2)-1) = sqrt(2)/2
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        QAlpha x = random_qalpha(rng);
        CHECK(qa_sign(x, sq) == qa_sign(x, cf_same));
    }
}

TEST_CASE("enclosures shrink strictly for refinable oracles") {
    auto cf = AlphaOracle::continued_fraction(Integer(0), {}, {Integer(1), Integer(2)});
    auto sq = sqrt_half();
    for (const AlphaOracle& o : {cf, sq}) {
        Rational prev_width(-1);
        for (int round = 0; round < 4; ++round) {
            auto e = o.enclosure(round);
            Rational width = e.hi - e.lo;
            CHECK(width > 0);
            if (round > 0) CHECK(width < prev_width);
            prev_width = width;
        }
    }
}

TEST_CASE("uncertified oracles fail soundly") {
    auto oracle = AlphaOracle::decimal_enclosure(rat(41, 100), rat(42, 100));
    // candidate 415/1000 sits inside the interval: alpha could equal it
    CHECK_THROWS_AS(qa_sign(qa(-415, 1000, 1, 1), oracle), Error);
    try {
        qa_sign(qa(-415, 1000, 1, 1), oracle);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IrrationalityUnknown);
    }
    // candidates outside the interval are decidable regardless
    CHECK(qa_sign(qa(-1, 3, 1, 1), oracle) == 1);
    CHECK(qa_sign(qa(-1, 2, 1, 1), oracle) == -1);
}

TEST_CASE("precision cap reports exhaustion on certified oracles") {
    // sqrt oracles never refine in qa_sign (algebraic path), so exercise the
    // cap through a continued fraction with a hostile candidate: the cap of
    // one round leaves the convergent interval too wide.
    auto cf = AlphaOracle::continued_fraction(Integer(0), {}, {Integer(1), Integer(2)})
                  .with_precision_cap(1);
    // candidate extremely close to the value: needs more than one round
    auto e5 = AlphaOracle::continued_fraction(Integer(0), {}, {Integer(1), Integer(2)})
                  .enclosure(5);
    Rational candidate = (e5.lo + e5.hi) / 2;
    QAlpha x(-candidate, Rational(1));
    CHECK_THROWS_AS(qa_sign(x, cf), Error);
    try {
        qa_sign(x, cf);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionExhausted);
    }
}

TEST_CASE("explicit rational mode collapses to rational arithmetic") {
    auto oracle = AlphaOracle::explicit_rational(rat(1, 3), true);
    QAlpha third = QAlpha::of_alpha().normalized_for(oracle);
    CHECK(third == qa(1, 3));
    CHECK(qa_sign(QAlpha(rat(-1, 3), rat(1)), oracle) == 0);  // un-normalized still exact
}

TEST_CASE("rational alpha requires the explicit escape hatch") {
    CHECK_THROWS_AS(AlphaOracle::sqrt_rational(rat(1, 4)), Error);
    CHECK_THROWS_AS(AlphaOracle::explicit_rational(rat(1, 3), false), Error);
    CHECK(AlphaOracle::sqrt_rational(rat(1, 4), true).is_rational());
}

TEST_CASE("integer quotient decides exact divisibility") {
    CHECK(qa_integer_quotient(qa(2, 3), qa(1, 3)) == Integer(2));
    CHECK(qa_integer_quotient(qa(1, 3, 1, 1) - qa(0, 1, 1, 1), qa(1, 3)) == Integer(1));
    CHECK(!qa_integer_quotient(qa(1, 2, 1, 1), qa(1, 3)));
    CHECK(!qa_integer_quotient(qa(1, 2), qa(1, 3)));
    CHECK(qa_integer_quotient(qa(0, 1, -6, 1), qa(0, 1, 2, 1)) == Integer(-3));
    // mixed s: both coordinates must give the same integer
    CHECK(qa_integer_quotient(qa(2, 1, 4, 1), qa(1, 1, 2, 1)) == Integer(2));
    CHECK(!qa_integer_quotient(qa(2, 1, 3, 1), qa(1, 1, 2, 1)));
    CHECK_THROWS_AS(qa_integer_quotient(qa(1, 1), QAlpha::zero()), Error);
}

TEST_CASE("integer quotient round-trips k*s for large k") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> ks(-1000000, 1000000);
    for (int trial = 0; trial < 2000; ++trial) {
        QAlpha s = random_qalpha(rng);
        if (s.is_zero()) continue;
        Integer k(ks(rng));
        QAlpha x = QAlpha(Rational(k) * s.q, Rational(k) * s.p);
        auto got = qa_integer_quotient(x, s);
        REQUIRE(got.has_value());
        CHECK(*got == k);
    }
}

TEST_CASE("sign induces a total order") {
    auto oracle = sqrt_half();
    std::mt19937_64 rng(3);
    std::vector<QAlpha> values;
    for (int i = 0; i < 250; ++i) values.push_back(random_qalpha(rng));

    std::sort(values.begin(), values.end(),
              [&](const QAlpha& a, const QAlpha& b) { return qa_less(a, b, oracle); });
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        CHECK(qa_cmp(values[i], values[i + 1], oracle) <= 0);

    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const QAlpha &a = values[pick(rng)], &b = values[pick(rng)];
        CHECK(qa_cmp(a, b, oracle) == -qa_cmp(b, a, oracle));  // antisymmetry
    }
}

TEST_CASE("sign never returns zero for genuinely irrational values") {
    auto oracle = sqrt_half();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        QAlpha x = random_qalpha(rng);
        if (x.p == 0) continue;
        CHECK(qa_sign(x, oracle) != 0);
    }
}

TEST_CASE("floor over the rank-2 space") {
    auto oracle = sqrt_half();  // alpha ~ 0.70710678
    CHECK(qa_floor(qa(0, 1, 1, 1), oracle) == 0);
    CHECK(qa_floor(qa(1, 2, 1, 1), oracle) == 1);   // 1.207...
    CHECK(qa_floor(qa(0, 1, -1, 1), oracle) == -1);
    CHECK(qa_floor(qa(3, 1), oracle) == 3);
    CHECK(qa_floor(qa(-1, 2), oracle) == -1);
    CHECK(qa_floor(qa(6, 1, -6, 1), oracle) == 1);  // 6 - 6*alpha ~ 1.757
}

TEST_CASE("literals round-trip through the canonical form") {
    CHECK(parse_qalpha("1/3 - a") == qa(1, 3, -1, 1));
    CHECK(parse_qalpha("1/4+1*a") == qa(1, 4, 1, 1));
    CHECK(parse_qalpha("a") == qa(0, 1, 1, 1));
    CHECK(parse_qalpha("-a") == qa(0, 1, -1, 1));
    CHECK(parse_qalpha("  2/3 *a ") == qa(0, 1, 2, 3));
    CHECK(parse_qalpha("-1/2 - 2*a") == qa(-1, 2, -2, 1));
    CHECK(parse_qalpha("0") == QAlpha::zero());
    CHECK_THROWS_AS(parse_qalpha("1//3"), Error);
    CHECK_THROWS_AS(parse_qalpha("1 + "), Error);
    CHECK_THROWS_AS(parse_qalpha(""), Error);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        QAlpha x = random_qalpha(rng);
        CHECK(parse_qalpha(x.str()) == x);
    }
}

TEST_CASE("decimal literals parse exactly") {
    CHECK(parse_decimal("0.4142135") == rat(4142135, 10000000));
    CHECK(parse_decimal("1e-7") == rat(1, 10000000));
    CHECK(parse_decimal("2.5e2") == rat(250));
    CHECK(parse_decimal("-0.25") == rat(-1, 4));
}
