#include "doctest.h"

#include "agr/semigroup.hpp"

using agr::NumericalSemigroup;

TEST_CASE("basic invariants of <4,9,10>") {
    NumericalSemigroup s({4, 9, 10});
    CHECK(s.frobenius() == 15);
    CHECK(s.conductor() == 16);
    CHECK(s.min_generator() == 4);
    CHECK(s.max_generator() == 10);
    CHECK(s.contains(0));
    CHECK(s.contains(8));
    CHECK(!s.contains(5));
    CHECK(!s.contains(15));
    CHECK(s.contains(16));
    CHECK(s.contains(1000000));
    CHECK(!s.contains(-3));
    // symmetric: gap count is (frobenius + 1) / 2
    CHECK(s.gaps().size() == 8);
    CHECK(s.symmetric());
}

TEST_CASE("symmetry across the corpus rings") {
    CHECK(NumericalSemigroup({4, 5, 6}).symmetric());
    CHECK(NumericalSemigroup({5, 6, 9}).symmetric());
    CHECK(NumericalSemigroup({5, 6, 7, 8}).symmetric());
    CHECK(!NumericalSemigroup({3, 4, 5}).symmetric());
    CHECK(!NumericalSemigroup({3, 7, 11}).symmetric());
    // the semigroup of all nonnegative integers
    NumericalSemigroup n({1});
    CHECK(n.conductor() == 0);
    CHECK(n.gaps().empty());
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(NumericalSemigroup({}), agr::EmptyGenerators);
    CHECK_THROWS_AS(NumericalSemigroup({4, 6}), agr::GcdNotOne);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), agr::Error);
}

TEST_CASE("elements_below lists members in order") {
    NumericalSemigroup s({3, 7, 11});
    CHECK(s.elements_below(10) == std::vector<int>{0, 3, 6, 7, 9});
    CHECK(s.elements_below(0).empty());
}

TEST_CASE("gap sets") {
    NumericalSemigroup s({4, 5, 6});
    CHECK(s.gaps() == std::vector<int>{1, 2, 3, 7});
    CHECK(s.frobenius() == 7);
}
