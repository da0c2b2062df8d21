#pragma once

#include <utility>
#include <vector>

#include "ietforge/iet.hpp"

namespace ietforge {

/// A finite union of disjoint half-open intervals with exact endpoints,
/// kept sorted and coalesced (no piece touches the next one).
class IntervalSet {
public:
    using Piece = std::pair<QAlpha, QAlpha>;  // [lo, hi)

    IntervalSet() = default;
    static IntervalSet single(QAlpha lo, QAlpha hi);

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }

    QAlpha measure() const;

    void add(QAlpha lo, QAlpha hi, const AlphaOracle& oracle);
    void add_set(const IntervalSet& other, const AlphaOracle& oracle);

    bool contains_point(const QAlpha& x, const AlphaOracle& oracle) const;

    /// Exact forward image: every piece is split on the breakpoints of T and
    /// the sub-pieces are translated, then re-normalized.
    IntervalSet image_under(const Iet& T) const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Piece> pieces_;
};

}  // namespace ietforge
