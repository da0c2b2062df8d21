#include "ietforge/interval_set.hpp"

#include <algorithm>

namespace ietforge {

IntervalSet IntervalSet::single(QAlpha lo, QAlpha hi) {
    IntervalSet s;
    s.pieces_.emplace_back(std::move(lo), std::move(hi));
    return s;
}

QAlpha IntervalSet::measure() const {
    QAlpha total = QAlpha::zero();
    for (const auto& [lo, hi] : pieces_) total += hi - lo;
    return total;
}

void IntervalSet::add(QAlpha lo, QAlpha hi, const AlphaOracle& oracle) {
    if (qa_cmp(lo, hi, oracle) >= 0)
        throw Error(ErrorCode::Internal, "degenerate interval in union");
    // find first piece ending at or after lo
    std::size_t i = 0;
    while (i < pieces_.size() && qa_less(pieces_[i].second, lo, oracle)) ++i;
    // swallow every piece overlapping or touching [lo, hi)
    QAlpha new_lo = std::move(lo), new_hi = std::move(hi);
    std::size_t j = i;
    while (j < pieces_.size() && qa_leq(pieces_[j].first, new_hi, oracle)) {
        if (qa_less(pieces_[j].first, new_lo, oracle)) new_lo = pieces_[j].first;
        if (qa_less(new_hi, pieces_[j].second, oracle)) new_hi = pieces_[j].second;
        ++j;
    }
    pieces_.erase(pieces_.begin() + i, pieces_.begin() + j);
    pieces_.insert(pieces_.begin() + i, {std::move(new_lo), std::move(new_hi)});
}

void IntervalSet::add_set(const IntervalSet& other, const AlphaOracle& oracle) {
    for (const auto& [lo, hi] : other.pieces_) add(lo, hi, oracle);
}

bool IntervalSet::contains_point(const QAlpha& x, const AlphaOracle& oracle) const {
    for (const auto& [lo, hi] : pieces_)
        if (qa_cmp(lo, x, oracle) <= 0 && qa_cmp(x, hi, oracle) < 0) return true;
    return false;
}

IntervalSet IntervalSet::image_under(const Iet& T) const {
    const AlphaOracle& oracle = T.oracle();
    IntervalSet out;
    for (const auto& [lo, hi] : pieces_) {
        QAlpha cur = lo;
        int i = T.locate(cur);
        while (qa_less(cur, hi, oracle)) {
            const QAlpha& right = T.breakpoints()[i];
            QAlpha seg_hi = qa_less(right, hi, oracle) ? right : hi;
            const QAlpha& d = T.translations()[i - 1];
            out.add(cur + d, seg_hi + d, oracle);
            cur = seg_hi;
            ++i;
        }
    }
    return out;
}

}  // namespace ietforge
