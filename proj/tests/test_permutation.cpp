#include <doctest.h>

#include <numeric>
#include <random>

#include "ietforge/permutation.hpp"

using namespace ietforge;

namespace {

// reference implementation: try every proper prefix
bool irreducible_brute(const Permutation& pi) {
    for (int k = 1; k < pi.size(); ++k) {
        bool invariant = true;
        for (int i = 1; i <= k; ++i)
            if (pi(i) > k) invariant = false;
        if (invariant) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("irreducibility examples") {
    CHECK(Permutation({3, 2, 4, 1}).is_irreducible());
    CHECK_FALSE(Permutation::identity(4).is_irreducible());
    CHECK_FALSE(Permutation({2, 1, 4, 3}).is_irreducible());  // block at k=2
}

TEST_CASE("irreducibility matches the brute-force check for every size <= 7") {
    for (int m = 1; m <= 7; ++m) {
        std::vector<int> images(m);
        std::iota(images.begin(), images.end(), 1);
        do {
            Permutation pi(images);
            CHECK(pi.is_irreducible() == irreducible_brute(pi));
        } while (std::next_permutation(images.begin(), images.end()));
    }
}

TEST_CASE("cycle decomposition") {
    auto cyc = Permutation::cycle(5);
    CHECK(cyc.is_n_cycle());
    CHECK(cyc.cycles() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});

    auto rev = Permutation::reversal(4);
    CHECK_FALSE(rev.is_n_cycle());
    CHECK(rev.cycles() == std::vector<std::vector<int>>{{1, 4}, {2, 3}});

    auto id = Permutation::identity(3);
    CHECK(id.cycles() == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK_FALSE(id.is_n_cycle());
    CHECK(Permutation({1}).is_n_cycle());  // the 1-cycle on one element
}

TEST_CASE("cycles partition the ground set and give orders") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 9);
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        Permutation sigma(images);

        std::vector<bool> covered(n, false);
        for (const auto& cyc : sigma.cycles()) {
            for (int v : cyc) {
                CHECK_FALSE(covered[v - 1]);
                covered[v - 1] = true;
            }
            // applying sigma k times returns to the start iff len | k
            for (int v : cyc) {
                int w = v;
                for (std::size_t k = 1; k <= 2 * cyc.size(); ++k) {
                    w = sigma(w);
                    bool back = w == v;
                    CHECK(back == (k % cyc.size() == 0));
                }
            }
        }
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("inverse and validation") {
    Permutation pi({3, 1, 2});
    CHECK(pi.inverse() == Permutation({2, 3, 1}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
    CHECK_THROWS_AS(Permutation({0, 2, 1}), Error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), Error);
}

TEST_CASE("one-line notation parses and prints") {
    CHECK(Permutation::parse("[3,2,4,1]") == Permutation({3, 2, 4, 1}));
    CHECK(Permutation::parse(" [ 2, 1 ] ") == Permutation({2, 1}));
    CHECK(Permutation({3, 2, 4, 1}).str() == "[3,2,4,1]");
    CHECK_THROWS_AS(Permutation::parse("3,2,1"), Error);
    CHECK_THROWS_AS(Permutation::parse("[3,x,1]"), Error);
}
