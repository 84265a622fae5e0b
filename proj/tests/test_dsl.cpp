#include "doctest.h"

#include "agr/corpus.hpp"
#include "agr/dsl.hpp"
#include "agr/scalar.hpp"

using namespace agr;

TEST_CASE("script parsing") {
    AnalysisScript sc = parse_script(
        "# comment\n"
        "ring semigroup 4 9 10\n"
        "ideal I = t^8, t^9, t^10\n"
        "ideal J = t^8\n"
        "check gorenstein-G I J\n");
    CHECK(sc.semigroup_ring);
    CHECK(sc.generators == std::vector<int>{4, 9, 10});
    CHECK(sc.ideals.size() == 2);
    CHECK(sc.ideals[0].name == "I");
    CHECK(sc.ideals[0].elems.size() == 3);
    CHECK(sc.commands.size() == 1);
    CHECK(sc.commands[0].kind == ScriptCommand::Kind::CheckGorensteinG);

    AnalysisScript mq = parse_script(
        "ring quotient x y mod x^2*y, y^3\n"
        "ideal I = x\n"
        "present F I\n");
    CHECK(!mq.semigroup_ring);
    CHECK(mq.variables == std::vector<std::string>{"x", "y"});
    CHECK(mq.relations.size() == 2);
}

TEST_CASE("parse diagnostics carry positions") {
    try {
        parse_script("ideal I = t^2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("1:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_script("ring semigroup\n"), ParseError);
    CHECK_THROWS_AS(parse_script("ring quotient x y\n"), ParseError);
    CHECK_THROWS_AS(parse_script("ring semigroup 4 6\n"), GcdNotOne);
    CHECK_THROWS_AS(parse_script("ring semigroup 2 3\nideal I = t^2\nideal I = t^3\n"), ParseError);
    CHECK_THROWS_AS(parse_script("ring semigroup 2 3\ncheck gorenstein-G I J\n"), UnknownName);
    CHECK_THROWS_AS(parse_script("ring semigroup 2 3\npresent Q I\n"), ParseError);
    CHECK_THROWS_AS(parse_script("ring semigroup 2 3\nfrobnicate I\n"), ParseError);
}

TEST_CASE("element parsers") {
    Rational one(1);
    Series<Rational> f = parse_series_element("2*t^3 - 1/2*t^7 + 1", one);
    CHECK(f.coeff(3) == Rational(2));
    CHECK(f.coeff(7) == Rational(-1, 2));
    CHECK(f.coeff(0) == one);
    CHECK(parse_series_element("t", one).valuation() == 1);
    CHECK(parse_series_element("-t^5", one).coeff(5) == Rational(-1));
    CHECK_THROWS_AS(parse_series_element("t^", one), ParseError);
    CHECK_THROWS_AS(parse_series_element("3*", one), ParseError);
    CHECK_THROWS_AS(parse_series_element("1/0", one), ParseError);

    std::vector<std::string> names = {"x", "y"};
    CHECK(parse_monomial_element("x^2*y", names) == Exponents{2, 1});
    CHECK(parse_monomial_element("1", names) == Exponents{0, 0});
    CHECK_THROWS_AS(parse_monomial_element("x*q", names), ParseError);
}

TEST_CASE("structured and text reports agree field for field") {
    AnalysisScript sc = parse_script(
        "ring semigroup 4 9 10\n"
        "ideal I = t^8, t^9, t^10\n"
        "ideal J = t^8\n"
        "check gorenstein-G I J\n"
        "analyze filtration I J\n");
    Json report = run_script_semigroup(sc, Rational(1), RunOptions{});
    std::string text = render_text(report);
    // every verdict name/value and every invariant appears in the rendering
    for (const Json& res : report["results"]) {
        for (const Json& v : res["verdicts"]) {
            std::string line = v["name"].get<std::string>() + ": " +
                               (v["value"].get<bool>() ? "yes" : "no");
            CHECK(text.find(line) != std::string::npos);
        }
        for (const auto& [k, val] : res["invariants"].items())
            CHECK(text.find(k + " = ") != std::string::npos);
        for (const auto& [k, val] : res["tables"].items())
            CHECK(text.find(k + ": " + val.dump()) != std::string::npos);
    }
    CHECK(text.find("conductor 16") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    AnalysisScript sc = parse_script(
        "ring semigroup 3 7 11\n"
        "ideal I = t^6, t^7, t^11\n"
        "analyze filtration I\n"
        "present G I\n");
    Json a = run_script_semigroup(sc, Rational(1), RunOptions{});
    Json b = run_script_semigroup(sc, Rational(1), RunOptions{});
    CHECK(a == b);
}

TEST_CASE("prime fields give the same verdicts on the corpus rings") {
    AnalysisScript sc = parse_script(
        "ring semigroup 4 9 10\n"
        "ideal I = t^8, t^9, t^10\n"
        "ideal J = t^8\n"
        "check gorenstein-G I J\n"
        "check quasi-gorenstein I J\n");
    Json q = run_script_semigroup(sc, Rational(1), RunOptions{});
    Json p7 = run_script_semigroup(sc, PrimeField(7, 1), RunOptions{});
    CHECK(q["results"][0]["verdicts"] == p7["results"][0]["verdicts"]);
    CHECK(q["results"][1]["invariants"] == p7["results"][1]["invariants"]);
    CHECK(p7["ring"]["field"] == "gf");
}

TEST_CASE("elements outside the ring are rejected at run time") {
    AnalysisScript sc = parse_script(
        "ring semigroup 4 9 10\n"
        "ideal I = t^3\n"
        "analyze filtration I\n");
    CHECK_THROWS_AS(run_script_semigroup(sc, Rational(1), RunOptions{}), NotInRing);
}

TEST_CASE("corpus self test detects perturbed expectations") { CHECK_NOTHROW(corpus_self_test()); }

TEST_CASE("corpus filter selects by substring") {
    auto out = run_corpus("quotient-");
    CHECK(out.size() == 2);
    for (const auto& o : out) CHECK(o.ok);
    CHECK_THROWS_AS(run_corpus("no-such-case"), UnknownName);
}
