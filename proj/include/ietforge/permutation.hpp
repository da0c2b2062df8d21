#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ietforge/errors.hpp"

namespace ietforge {

/// A bijection of {1..m}, 1-indexed throughout.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    static Permutation cycle(int n);     // (2 3 ... n 1)
    static Permutation reversal(int n);  // (n n-1 ... 1)

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    // No proper prefix {1..k}, k < m, is invariant.
    bool is_irreducible() const;

    // Disjoint cycles covering {1..m}; each cycle starts at its minimal
    // element and cycles are ordered by minimal element.
    std::vector<std::vector<int>> cycles() const;

    bool is_n_cycle() const;

    bool operator==(const Permutation&) const = default;

    std::string str() const;  // "[3,2,4,1]"
    static Permutation parse(std::string_view text);

private:
    std::vector<int> images_;
};

}  // namespace ietforge
