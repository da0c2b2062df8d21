#include "ietforge/families.hpp"

namespace ietforge {

Iet reverse_shift_family(int m, const AlphaOracle& alpha) {
    if (m <= 3)
        throw Error(ErrorCode::ParameterOutOfRange, "family needs m > 3 intervals");
    const Rational step = make_rational(1, m - 1);
    QAlpha a = QAlpha::of_alpha().normalized_for(alpha);
    if (qa_sign(a, alpha) <= 0 || qa_sign(QAlpha::of_rational(step) - a, alpha) <= 0)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "alpha must lie strictly inside (0, 1/" + std::to_string(m - 1) + ")");

    std::vector<int> images(m);
    for (int i = 1; i <= m - 2; ++i) images[i - 1] = m - i;
    images[m - 2] = m;
    images[m - 1] = 1;

    std::vector<QAlpha> lengths;
    lengths.reserve(m);
    for (int i = 0; i < m - 2; ++i) lengths.push_back(QAlpha::of_rational(step));
    lengths.push_back(QAlpha::of_rational(step) - a);
    lengths.push_back(a);

    return Iet::build(Permutation(std::move(images)), std::move(lengths), alpha);
}

Iet block_rotation_family(int n, const Permutation& sigma, const AlphaOracle& alpha) {
    if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "need at least one cell");
    if (sigma.size() != n)
        throw Error(ErrorCode::SemanticError, "cell permutation size does not match n");
    QAlpha a = QAlpha::of_alpha().normalized_for(alpha);
    if (qa_sign(a, alpha) <= 0 || qa_sign(QAlpha::of_int(1) - a, alpha) <= 0)
        throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie strictly inside (0, 1)");

    // interval 2i-1 is the left part of cell i and lands right of the image
    // cell's left part, so it occupies image slot 2*sigma(i); interval 2i
    // occupies slot 2*sigma(i) - 1
    std::vector<int> images(2 * n);
    for (int i = 1; i <= n; ++i) {
        images[2 * i - 2] = 2 * sigma(i);
        images[2 * i - 1] = 2 * sigma(i) - 1;
    }

    std::vector<QAlpha> lengths;
    lengths.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        lengths.push_back(a);
        lengths.push_back(QAlpha::of_int(1) - a);
    }

    return Iet::build(Permutation(std::move(images)), std::move(lengths), alpha);
}

Iet half_swap_family(const AlphaOracle& alpha) {
    QAlpha a = QAlpha::of_alpha().normalized_for(alpha);
    QAlpha half = QAlpha::of_rational(make_rational(1, 2));
    if (qa_sign(a, alpha) <= 0 || qa_sign(half - a, alpha) <= 0)
        throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie strictly inside (0, 1/2)");
    std::vector<QAlpha> lengths{a, half - a, a, half - a};
    return Iet::build(Permutation({4, 3, 2, 1}), std::move(lengths), alpha);
}

Iet rotation(const QAlpha& theta, const AlphaOracle& oracle) {
    QAlpha t = theta.normalized_for(oracle);
    if (qa_sign(t, oracle) < 0 || qa_cmp(t, QAlpha::of_int(1), oracle) >= 0)
        throw Error(ErrorCode::ParameterOutOfRange, "rotation angle must lie in [0, 1)");
    if (t.is_zero())
        return Iet::build(Permutation::identity(1), {QAlpha::of_int(1)}, oracle);
    std::vector<QAlpha> lengths{QAlpha::of_int(1) - t, t};
    return Iet::build(Permutation({2, 1}), std::move(lengths), oracle);
}

Iet conjugated_rotation(const AlphaOracle& alpha, const Iet& h) {
    if (alpha.is_rational())
        throw Error(ErrorCode::ParameterOutOfRange, "conjugated rotation needs irrational alpha");
    if (!(h.oracle() == alpha))
        throw Error(ErrorCode::MixedIrrationals, "h must live over the same alpha");
    if (h.total_length() != QAlpha::of_int(1))
        throw Error(ErrorCode::LengthMismatch, "h must be an exchange of [0, 1)");
    Iet rot = rotation(QAlpha::of_alpha(), alpha);
    return compose(h, compose(rot, h.inverse()));
}

}  // namespace ietforge
