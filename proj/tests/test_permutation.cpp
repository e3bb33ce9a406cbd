#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vincyc/permutation.hpp"

using namespace vincyc;

TEST_CASE("parse accepts digit strings and comma lists") {
    CHECK(Permutation::parse("2341").word() == std::vector<int>{2, 3, 4, 1});
    CHECK(Permutation::parse("2,3,4,1") == Permutation::parse("2341"));
    CHECK(Permutation::parse("1").size() == 1);

    Permutation big = Permutation::parse("6,14,1,2,3,4,5,7,8,15,9,10,11,12,13");
    CHECK(big.size() == 15);
    CHECK(big(2) == 14);
    CHECK(big.str() == "6,14,1,2,3,4,5,7,8,15,9,10,11,12,13");
}

TEST_CASE("str uses digits up to size 9 and commas beyond") {
    CHECK(Permutation::parse("964572813").str() == "964572813");
    CHECK(Permutation::identity(10).str() == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("parse rejects junk") {
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("13"), std::invalid_argument);  // gap
    CHECK_THROWS_AS(Permutation::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{2}), std::invalid_argument);
}

TEST_CASE("indexing is 1-based") {
    Permutation p = Permutation::parse("2341");
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    CHECK(Permutation::identity(5)(3) == 3);
}

TEST_CASE("cycle decomposition in standard form") {
    // Each cycle leads with its maximum; cycles sorted by that maximum.
    auto cycles = cycle_decomposition(Permutation::parse("321"));
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == Cycle{2});
    CHECK(cycles[1] == Cycle{3, 1});

    auto one = cycle_decomposition(Permutation::parse("2341"));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Cycle{4, 1, 2, 3});

    CHECK(cycle_count(Permutation::parse("321")) == 2);
    CHECK(cycle_count(Permutation::identity(4)) == 4);
}

TEST_CASE("cyclicity") {
    CHECK(is_cyclic(Permutation::parse("2341")));
    CHECK(is_cyclic(Permutation::parse("21")));
    CHECK(is_cyclic(Permutation::parse("1")));  // size 1 counts
    CHECK_FALSE(is_cyclic(Permutation::parse("321")));
    CHECK_FALSE(is_cyclic(Permutation::parse("12")));
}

TEST_CASE("theta on known words") {
    CHECK(theta(Permutation::parse("964572813")) == Permutation::parse("629345781"));
    CHECK(theta(Permutation::parse("2341")) == Permutation::parse("4123"));
    CHECK(theta(Permutation::parse("321")) == Permutation::parse("231"));
    CHECK(theta(Permutation::parse("3421")) == Permutation::parse("4132"));
    CHECK(theta(Permutation::parse("1")) == Permutation::parse("1"));
}

TEST_CASE("theta_inv on known words") {
    CHECK(theta_inv(Permutation::parse("321")) == Permutation::parse("312"));
    CHECK(theta_inv(Permutation::parse("629345781")) == Permutation::parse("964572813"));
}

TEST_CASE("theta and theta_inv invert each other on all of S_5") {
    std::vector<int> word(5);
    std::iota(word.begin(), word.end(), 1);
    do {
        Permutation p(word);
        CHECK(theta_inv(theta(p)) == p);
        CHECK(theta(theta_inv(p)) == p);
        // p is cyclic exactly when theta(p) leads with n.
        CHECK(is_cyclic(p) == (theta(p)(1) == 5));
    } while (std::next_permutation(word.begin(), word.end()));
}

TEST_CASE("statistics") {
    Permutation p = Permutation::parse("3421");
    CHECK(depth(p) == 4);
    CHECK(inversions(p) == 5);
    CHECK(reflection_length(p) == 3);  // one 4-cycle

    CHECK(depth(Permutation::parse("321")) == 2);
    CHECK(inversions(Permutation::parse("321")) == 3);
    CHECK(depth(Permutation::identity(6)) == 0);
    CHECK(inversions(Permutation::identity(6)) == 0);
    CHECK(reflection_length(Permutation::identity(6)) == 0);
    CHECK(depth(Permutation::parse("21")) == 1);
    CHECK(inversions(Permutation::parse("21")) == 1);
}

TEST_CASE("reverse and inverse") {
    CHECK(reverse(Permutation::parse("123")) == Permutation::parse("321"));
    CHECK(reverse(Permutation::parse("2413")) == Permutation::parse("3142"));
    CHECK(inverse(Permutation::parse("2341")) == Permutation::parse("4123"));
    CHECK(inverse(Permutation::parse("312")) == Permutation::parse("231"));
}

TEST_CASE("sums") {
    CHECK(direct_sum(Permutation::parse("21"), Permutation::parse("21")) ==
          Permutation::parse("2143"));
    CHECK(skew_sum(Permutation::parse("1"), Permutation::parse("213")) ==
          Permutation::parse("4213"));
    CHECK(skew_sum(Permutation::parse("21"), Permutation::parse("12")) ==
          Permutation::parse("4312"));
}

TEST_CASE("inflate_at") {
    CHECK(inflate_at(Permutation::parse("213"), 1, Permutation::parse("1342")) ==
          Permutation::parse("513426"));
    CHECK(inflate_at(Permutation::parse("4132"), 3, Permutation::parse("321")) ==
          Permutation::parse("615432"));
    CHECK(inflate_at_one(Permutation::parse("21"), Permutation::parse("21")) ==
          Permutation::parse("321"));
    // Inflating by a singleton changes nothing.
    CHECK(inflate_at(Permutation::parse("2413"), 2, Permutation::parse("1")) ==
          Permutation::parse("2413"));

    CHECK_THROWS_AS(inflate_at(Permutation::parse("213"), 4, Permutation::parse("12")),
                    std::domain_error);
    CHECK_THROWS_AS(inflate_at(Permutation::parse("213"), 0, Permutation::parse("12")),
                    std::domain_error);
}

TEST_CASE("reduce relabels order-isomorphically") {
    CHECK(reduce({9, 4, 6}) == Permutation::parse("312"));
    CHECK(reduce({5}) == Permutation::parse("1"));
    CHECK(reduce({2, 4, 1, 3}) == Permutation::parse("2413"));
}

TEST_CASE("ordering supports sorted containers") {
    CHECK(Permutation::parse("123") < Permutation::parse("132"));
    CHECK(Permutation::parse("12") < Permutation::parse("123"));
}
