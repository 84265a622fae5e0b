#include "doctest.h"

#include "agr/presentation.hpp"
#include "agr/scalar.hpp"

using namespace agr;

using B = SemigroupPresentationBackend<Rational>;

namespace {
B make_backend(std::vector<int> gens) {
    return B{SemigroupOps<Rational>{SemigroupRing<Rational>(NumericalSemigroup(std::move(gens)))}};
}
}  // namespace

TEST_CASE("defining ideal of G for <4,9,10> is a complete intersection") {
    B bk = make_backend({4, 9, 10});
    auto& R = bk.ops.ring;
    std::vector<Series<Rational>> g = {R.monomial(8), R.monomial(9), R.monomial(10)};
    auto I = echelonize(R, g);
    GradedPresentation p = present_G(bk, I, g, 5);
    CHECK(p.generator_degrees() == std::vector<int>{2, 2});
    CHECK(p.degrees[2].representatives ==
          std::vector<std::string>{"w*X^2 - Z^2", "X*Z - Y^2"});
    CHECK(p.relation_type_lower_bound == 2);
    CHECK(p.hilbert_match);
    CHECK(p.hf_true[0] == 2);
    CHECK(p.hf_true[2] == 8);
    CHECK(ci_assess(p, 1) == CiVerdict::CompleteIntersection);

    GradedPresentation f = present_F(bk, I, g, 5);
    CHECK(f.generator_degrees() == std::vector<int>{2, 2});
    CHECK(f.hilbert_match);
    CHECK(ci_assess(f, 1) == CiVerdict::CompleteIntersection);
}

TEST_CASE("defining ideals for <3,7,11> separate G from F") {
    B bk = make_backend({3, 7, 11});
    auto& R = bk.ops.ring;
    std::vector<Series<Rational>> g = {R.monomial(6), R.monomial(7), R.monomial(11)};
    auto I = echelonize(R, g);
    GradedPresentation p = present_G(bk, I, g, 5);
    CHECK(p.generator_degrees() == std::vector<int>{1, 2, 2, 2, 3});
    CHECK(p.degrees[1].representatives == std::vector<std::string>{"w*Z"});
    CHECK(p.degrees[3].representatives == std::vector<std::string>{"w*X^3 - Y^3"});
    CHECK(p.hilbert_match);
    CHECK(ci_assess(p, 1) == CiVerdict::NotCompleteIntersection);

    GradedPresentation f = present_F(bk, I, g, 5);
    CHECK(f.generator_degrees() == std::vector<int>{2, 2, 2, 3});
    CHECK(f.degrees[2].representatives == std::vector<std::string>{"X*Z", "Y*Z", "Z^2"});
    CHECK(f.degrees[3].representatives == std::vector<std::string>{"Y^3"});
    CHECK(ci_assess(f, 1) == CiVerdict::NotCompleteIntersection);
}

TEST_CASE("torsion relations for <3,4,5>") {
    B bk = make_backend({3, 4, 5});
    auto& R = bk.ops.ring;
    std::vector<Series<Rational>> g = {R.monomial(3), R.monomial(4)};
    auto I = echelonize(R, g);
    GradedPresentation p = present_G(bk, I, g, 6);
    CHECK(p.generator_degrees() == std::vector<int>{1, 1, 3});
    CHECK(ci_assess(p, 1) == CiVerdict::NotCompleteIntersection);
    GradedPresentation f = present_F(bk, I, g, 6);
    CHECK(f.generator_degrees() == std::vector<int>{3});
    CHECK(f.degrees[3].representatives == std::vector<std::string>{"Y^3"});
    CHECK(ci_assess(f, 1) == CiVerdict::CompleteIntersection);
}

TEST_CASE("monomial backend presentations") {
    MonomialPresentationBackend bk{MonomialOps{
        MonomialQuotientRing({"x", "y"}, MonomialIdeal(2, {{2, 1}, {0, 3}}))}};
    auto I = bk.ops.ring.lift(MonomialIdeal(2, {{1, 0}}));
    std::vector<Exponents> g = {{1, 0}};
    GradedPresentation p = present_G(bk, I, g, 6, {"U"});
    CHECK(p.generator_degrees() == std::vector<int>{2});
    CHECK(p.degrees[2].representatives == std::vector<std::string>{"y*U^2"});
    CHECK(p.hilbert_match);
    GradedPresentation f = present_F(bk, I, g, 6, {"U"});
    CHECK(f.generator_degrees().empty());
    CHECK(f.hilbert_match);
    CHECK_THROWS_AS(ci_assess(f, 0), InconclusiveAtBound);
    CHECK(ci_assess(f, 1) == CiVerdict::CompleteIntersection);
}

TEST_CASE("generators must be minimal") {
    B bk = make_backend({4, 9, 10});
    auto& R = bk.ops.ring;
    std::vector<Series<Rational>> g = {R.monomial(8), R.monomial(9), R.monomial(10)};
    auto I = echelonize(R, g);
    std::vector<Series<Rational>> redundant = g;
    redundant.push_back(R.monomial(17));
    CHECK_THROWS_AS(present_G(bk, I, redundant, 4), NotMinimalGenerators);
    std::vector<Series<Rational>> wrong = {R.monomial(8), R.monomial(9)};
    CHECK_THROWS_AS(present_G(bk, I, wrong, 4), NotMinimalGenerators);
}

TEST_CASE("lex enumeration of power products") {
    auto ms = monomials_of_degree(3, 2);
    CHECK(ms.size() == 6);
    CHECK(ms.front() == Exponents{2, 0, 0});
    CHECK(ms.back() == Exponents{0, 0, 2});
}
