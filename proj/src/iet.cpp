#include "ietforge/iet.hpp"

#include <algorithm>
#include <numeric>

namespace ietforge {

Iet Iet::build(const Permutation& pi, std::vector<QAlpha> lengths, AlphaOracle oracle) {
    const int m = pi.size();
    if (static_cast<int>(lengths.size()) != m)
        throw Error(ErrorCode::SemanticError,
                    "permutation size " + std::to_string(m) + " does not match " +
                        std::to_string(lengths.size()) + " lengths");
    for (auto& l : lengths) l = l.normalized_for(oracle);
    for (const auto& l : lengths)
        if (qa_sign(l, oracle) <= 0)
            throw Error(ErrorCode::NonPositiveLength, "length " + l.str() + " is not positive");

    std::vector<QAlpha> breaks(m + 1, QAlpha::zero());
    for (int i = 1; i <= m; ++i) breaks[i] = breaks[i - 1] + lengths[i - 1];

    const Permutation inv = pi.inverse();
    std::vector<QAlpha> image_breaks(m + 1, QAlpha::zero());
    for (int j = 1; j <= m; ++j) image_breaks[j] = image_breaks[j - 1] + lengths[inv(j) - 1];

    std::vector<QAlpha> deltas(m);
    for (int i = 1; i <= m; ++i) deltas[i - 1] = image_breaks[pi(i)] - breaks[i];

    // tripwire: T(I_i) must be exactly [b_{pi(i)-1}, b_{pi(i)})
    for (int i = 1; i <= m; ++i) {
        if (breaks[i - 1] + deltas[i - 1] != image_breaks[pi(i) - 1] ||
            breaks[i] + deltas[i - 1] != image_breaks[pi(i)])
            throw Error(ErrorCode::Internal, "image partition check failed");
    }

    return Iet(std::move(oracle), pi, std::move(breaks), std::move(lengths), std::move(deltas),
               std::move(image_breaks));
}

Iet Iet::from_pieces(std::vector<QAlpha> breakpoints, std::vector<QAlpha> translations,
                     AlphaOracle oracle) {
    if (breakpoints.size() != translations.size() + 1 || translations.empty())
        throw Error(ErrorCode::SemanticError, "piece arrays are inconsistent");
    if (!breakpoints.front().is_zero())
        throw Error(ErrorCode::SemanticError, "domain must start at 0");

    // merge adjacent pieces carrying the same translation
    std::vector<QAlpha> breaks{breakpoints.front()};
    std::vector<QAlpha> deltas;
    for (std::size_t i = 0; i < translations.size(); ++i) {
        if (!deltas.empty() && deltas.back() == translations[i]) {
            breaks.back() = breakpoints[i + 1];
        } else {
            deltas.push_back(translations[i]);
            breaks.push_back(breakpoints[i + 1]);
        }
    }

    const int m = static_cast<int>(deltas.size());
    for (int i = 0; i < m; ++i)
        if (qa_sign(breaks[i + 1] - breaks[i], oracle) <= 0)
            throw Error(ErrorCode::NonPositiveLength, "pieces must be strictly increasing");

    std::vector<QAlpha> lengths(m);
    for (int i = 0; i < m; ++i) lengths[i] = breaks[i + 1] - breaks[i];

    // sort images and check they tile [0, r)
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<QAlpha> image_lo(m);
    for (int i = 0; i < m; ++i) image_lo[i] = breaks[i] + deltas[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return qa_less(image_lo[a], image_lo[b], oracle);
    });

    const QAlpha& r = breaks.back();
    std::vector<QAlpha> image_breaks(m + 1);
    QAlpha cursor = QAlpha::zero();
    std::vector<int> images(m);  // pi(i)
    for (int rank = 0; rank < m; ++rank) {
        int i = order[rank];
        if (image_lo[i] != cursor)
            throw Error(ErrorCode::SemanticError, "pieces do not form a bijection of [0, r)");
        image_breaks[rank] = cursor;
        cursor = breaks[i + 1] + deltas[i];
        images[i] = rank + 1;
    }
    if (cursor != r)
        throw Error(ErrorCode::SemanticError, "pieces do not form a bijection of [0, r)");
    image_breaks[m] = cursor;

    return Iet(std::move(oracle), Permutation(std::move(images)), std::move(breaks),
               std::move(lengths), std::move(deltas), std::move(image_breaks));
}

std::vector<QAlpha> Iet::discontinuities() const {
    return {breakpoints_.begin() + 1, breakpoints_.end() - 1};
}

int Iet::locate(const QAlpha& x) const {
    if (qa_sign(x, oracle_) < 0 || qa_cmp(x, total_length(), oracle_) >= 0)
        throw Error(ErrorCode::OutOfDomain, x.str() + " is outside [0, r)");
    // binary search: largest i with a_{i-1} <= x
    int lo = 1, hi = interval_count();
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (qa_cmp(x, breakpoints_[mid - 1], oracle_) >= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

QAlpha Iet::apply(const QAlpha& x) const { return x + translations_[locate(x) - 1]; }

Iet Iet::inverse() const {
    const int m = interval_count();
    const Permutation inv = perm_.inverse();
    std::vector<QAlpha> deltas(m);
    for (int j = 1; j <= m; ++j) deltas[j - 1] = -translations_[inv(j) - 1];
    return from_pieces(image_breaks_, std::move(deltas), oracle_);
}

Iet Iet::canonical() const { return from_pieces(breakpoints_, translations_, oracle_); }

bool Iet::same_map_as(const Iet& other) const {
    Iet a = canonical(), b = other.canonical();
    return a.breakpoints_ == b.breakpoints_ && a.translations_ == b.translations_ &&
           a.oracle_ == b.oracle_;
}

Iet Iet::rescaled(const Rational& c) const {
    if (c <= 0) throw Error(ErrorCode::ParameterOutOfRange, "scale must be positive");
    auto scale_all = [&](const std::vector<QAlpha>& v) {
        std::vector<QAlpha> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(c * x);
        return out;
    };
    return Iet(oracle_, perm_, scale_all(breakpoints_), scale_all(lengths_),
               scale_all(translations_), scale_all(image_breaks_));
}

OrbitPoint Iet::iterate(const QAlpha& start, long long l) const {
    if (l < 0) return inverse().iterate(start, -l);
    OrbitPoint out;
    out.occupation.assign(interval_count(), 0);
    QAlpha x = start;
    if (qa_sign(x, oracle_) < 0 || qa_cmp(x, total_length(), oracle_) >= 0)
        throw Error(ErrorCode::OutOfDomain, start.str() + " is outside [0, r)");
    for (long long k = 0; k < l; ++k) {
        int i = locate(x);
        ++out.occupation[i - 1];
        x += translations_[i - 1];
    }
    out.position = x;
    out.steps = l;
    out.displacement = x - start;
    return out;
}

Iet compose(const Iet& S, const Iet& T) {
    if (!(S.oracle() == T.oracle()))
        throw Error(ErrorCode::MixedIrrationals, "composing maps over different irrationals");
    if (S.total_length() != T.total_length())
        throw Error(ErrorCode::LengthMismatch, "composing maps of different total length");

    const AlphaOracle& oracle = T.oracle();
    Iet T_inv = T.inverse();

    std::vector<QAlpha> cuts(T.breakpoints().begin(), T.breakpoints().end() - 1);
    for (std::size_t j = 1; j + 1 < S.breakpoints().size(); ++j)
        cuts.push_back(T_inv.apply(S.breakpoints()[j]));
    std::sort(cuts.begin(), cuts.end(),
              [&](const QAlpha& a, const QAlpha& b) { return qa_less(a, b, oracle); });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(T.total_length());

    std::vector<QAlpha> deltas;
    deltas.reserve(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const QAlpha& u = cuts[i];
        QAlpha t1 = T.translations()[T.locate(u) - 1];
        QAlpha mid = u + t1;
        QAlpha t2 = S.translations()[S.locate(mid) - 1];
        deltas.push_back(t1 + t2);
    }
    return Iet::from_pieces(std::move(cuts), std::move(deltas), oracle);
}

}  // namespace ietforge
