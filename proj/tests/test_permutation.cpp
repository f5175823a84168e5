#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "permext/permutation.hpp"

using namespace permext;

TEST_CASE("permutation construction validates bijections", "[perm]") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), ValidationError);
    CHECK(Permutation::identity(4).is_identity());
    CHECK(Permutation({1, 0}).to_string() == "[1,0]");
}

TEST_CASE("compose evaluates right-to-left", "[perm]") {
    auto id = Permutation::identity(3);
    auto swap01 = transposition(3, 0, 1);
    CHECK(compose(id, swap01) == swap01);
    CHECK(compose(swap01, swap01) == Permutation::identity(3));

    // (0 1) after (1 2) is the 3-cycle [1,2,0]
    CHECK(compose(transposition(3, 0, 1), transposition(3, 1, 2)) == Permutation({1, 2, 0}));
    CHECK_THROWS_AS(compose(id, Permutation::identity(4)), DimensionError);
}

TEST_CASE("transposition fixtures", "[perm]") {
    CHECK(transposition(3, 0, 1) == Permutation({1, 0, 2}));
    CHECK(transposition(4, 0, 3) == Permutation({3, 1, 2, 0}));
    CHECK(transposition(2, 0, 1) == Permutation({1, 0}));
    CHECK_THROWS_AS(transposition(3, 1, 1), ValidationError);
    CHECK_THROWS_AS(transposition(3, 0, 3), ValidationError);
}

TEST_CASE("adjacent transpositions", "[perm]") {
    CHECK(adjacent_transpositions(2) == std::vector<Permutation>{transposition(2, 0, 1)});
    CHECK(adjacent_transpositions(3) ==
          std::vector<Permutation>{transposition(3, 0, 1), transposition(3, 1, 2)});
    CHECK(adjacent_transpositions(5).size() == 4);
    CHECK_THROWS_AS(adjacent_transpositions(1), ValidationError);
}

TEST_CASE("all_permutations is exhaustive and lexicographic", "[perm]") {
    CHECK(all_permutations(1).size() == 1);
    auto p3 = all_permutations(3);
    CHECK(p3.size() == 6);
    CHECK(p3.front().is_identity());
    for (std::size_t i = 1; i < p3.size(); ++i) CHECK(p3[i - 1] < p3[i]);
    CHECK(all_permutations(4).size() == 24);
    CHECK_THROWS_WITH(all_permutations(9), Catch::Contains("cap 8"));
}

TEST_CASE("composition is associative and inverses cancel", "[perm][property]") {
    std::mt19937 rng(31337);
    auto random_perm = [&rng](std::size_t k) {
        auto im = Permutation::identity(k).images();
        std::shuffle(im.begin(), im.end(), rng);
        return Permutation(im);
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t k = 1 + iter % 6;
        auto a = random_perm(k), b = random_perm(k), c = random_perm(k);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, a.inverse()) == Permutation::identity(k));
        CHECK(compose(a.inverse(), a) == Permutation::identity(k));
    }
}

TEST_CASE("adjacent transpositions generate the full symmetric group", "[perm][property]") {
    for (std::size_t k = 2; k <= 6; ++k) {
        std::set<Permutation> closure;
        for (const auto& g : adjacent_transpositions(k)) closure.insert(g);
        closure.insert(Permutation::identity(k));
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<Permutation> next = closure;
            for (const auto& a : closure)
                for (const auto& b : closure)
                    if (next.insert(compose(a, b)).second) grew = true;
            closure = std::move(next);
        }
        std::size_t factorial = 1;
        for (std::size_t i = 2; i <= k; ++i) factorial *= i;
        CHECK(closure.size() == factorial);
    }
}
