#include <random>

#include "doctest.h"

#include "agr/ideal.hpp"
#include "agr/scalar.hpp"

using namespace agr;

using R = SemigroupRing<Rational>;
using I = RingIdeal<Rational>;

TEST_CASE("echelon form of (t^8,t^9,t^10) in k[[t^4,t^9,t^10]]") {
    R ring(NumericalSemigroup({4, 9, 10}));
    I a = echelonize(ring, {ring.monomial(8), ring.monomial(9), ring.monomial(10)});
    CHECK(a.colength() == 2);
    CHECK(a.residue_exponents() == std::vector<int>{0, 4});
    CHECK(a.tail() == 16);
    // membership by pivot, monomial ideal case
    CHECK(a.has_pivot(8));
    CHECK(a.has_pivot(13));
    CHECK(!a.has_pivot(4));
    CHECK(!a.has_pivot(0));
    // canonical generators reproduce the same ideal
    CHECK(echelonize(ring, a.canonical_generators()) == a);
}

TEST_CASE("colength of a principal non-monomial ideal equals the valuation") {
    R ring(NumericalSemigroup({4, 5, 6}));
    I a = principal_ideal(ring, ring.monomial(4) - ring.monomial(5));
    CHECK(a.colength() == 4);
    I b = principal_ideal(ring, ring.monomial(4));
    CHECK(b.colength() == 4);
    CHECK(!(a == b));
}

TEST_CASE("echelonization is stable under extra precision") {
    R ring(NumericalSemigroup({3, 7, 11}));
    std::vector<Series<Rational>> gens = {ring.monomial(6), ring.monomial(7), ring.monomial(11)};
    I a = echelonize(ring, gens);
    I b = echelonize(ring, gens, 4 * ring.working_precision());
    CHECK(a == b);
    CHECK(a.residue_exponents() == b.residue_exponents());
    CHECK(a.tail() == b.tail());
}

TEST_CASE("degenerate inputs") {
    R ring(NumericalSemigroup({4, 9, 10}));
    CHECK_THROWS_AS(echelonize(ring, {Series<Rational>()}), PrecisionExhausted);
    CHECK_THROWS_AS(echelonize(ring, {ring.monomial(2, 0)}), PrecisionExhausted);
    Series<Rational> fuzzy = ring.monomial(8).truncated(12);
    CHECK_THROWS_AS(echelonize(ring, {fuzzy}), Error);
    CHECK(unit_ideal(ring).colength() == 0);
    CHECK(maximal_ideal(ring).colength() == 1);
}

TEST_CASE("colon adjunction and associativity") {
    R ring(NumericalSemigroup({5, 6, 9}));
    I a = echelonize(ring, {ring.monomial(10), ring.monomial(11)});
    I b = echelonize(ring, {ring.monomial(5), ring.monomial(6)});
    I c = echelonize(ring, {ring.monomial(9)});
    I q = ideal_colon(a, b);
    CHECK(a.contains(ideal_product(q, b)));
    CHECK(ideal_colon(ideal_product(a, b), b).contains(a));
    CHECK(ideal_colon(ideal_colon(a, b), c) == ideal_colon(a, ideal_product(b, c)));
    CHECK(ideal_colon(a, unit_ideal(ring)) == a);
}

TEST_CASE("length telescoping along powers") {
    R ring(NumericalSemigroup({5, 6, 7, 8}));
    I a = echelonize(ring, {ring.monomial(5), ring.monomial(6), ring.monomial(7)});
    long total = 0;
    I p = unit_ideal(ring);
    for (int i = 0; i < 4; ++i) {
        I next = ideal_product(p, a);
        total += length_between(next, p);
        p = next;
    }
    CHECK(total == p.colength());
    CHECK(length_between(ideal_power(a, 2), a) == ideal_power(a, 2).colength() - a.colength());
}

// Monomial ideals of k[[t^S]] mirror set arithmetic on their valuation sets;
// this independent model cross-checks sum, product, intersection, colon, and
// colength on randomized inputs.
namespace {

struct ValuationModel {
    const NumericalSemigroup& S;
    int bound;
    std::vector<char> in;  // in[e] = 1 when t^e lies in the ideal

    ValuationModel(const NumericalSemigroup& s, int b, const std::vector<int>& gens)
        : S(s), bound(b), in(static_cast<size_t>(b), 0) {
        for (int a : gens)
            for (int e = a; e < b; ++e)
                if (S.contains(e - a) && S.contains(e)) in[static_cast<size_t>(e)] = 1;
    }
    ValuationModel(const NumericalSemigroup& s, int b) : S(s), bound(b), in(static_cast<size_t>(b), 0) {}

    static ValuationModel sum(const ValuationModel& x, const ValuationModel& y) {
        ValuationModel r(x.S, x.bound);
        for (int e = 0; e < x.bound; ++e) r.in[e] = x.in[e] | y.in[e];
        return r;
    }
    static ValuationModel intersect(const ValuationModel& x, const ValuationModel& y) {
        ValuationModel r(x.S, x.bound);
        for (int e = 0; e < x.bound; ++e) r.in[e] = x.in[e] & y.in[e];
        return r;
    }
    static ValuationModel product(const ValuationModel& x, const ValuationModel& y) {
        ValuationModel r(x.S, x.bound);
        for (int i = 0; i < x.bound; ++i)
            if (x.in[i])
                for (int j = 0; i + j < x.bound; ++j)
                    if (y.in[j]) r.in[i + j] = 1;
        return r;
    }
    // x : (t^b1, ..., t^bk) computed from the generator exponents of y
    static ValuationModel colon(const ValuationModel& x, const std::vector<int>& ygens) {
        ValuationModel r(x.S, x.bound);
        for (int e = 0; e < x.bound; ++e) {
            if (!x.S.contains(e)) continue;
            bool ok = true;
            for (int b : ygens)
                if (e + b < x.bound && !x.in[e + b]) { ok = false; break; }
            r.in[e] = ok ? 1 : 0;
        }
        return r;
    }
    long colength() const {
        long n = 0;
        for (int e = 0; e < bound; ++e)
            if (S.contains(e) && !in[e]) ++n;
        return n;
    }
    bool matches(const I& ideal) const {
        // only compare below the certified tail plus a margin; beyond the
        // model bound the ideal is authoritative
        int hi = std::min(bound, ideal.tail() + 2 * S.conductor());
        for (int e = 0; e < hi; ++e) {
            bool model = in[static_cast<size_t>(e)] != 0;
            bool real = S.contains(e) && ideal.has_pivot(e);
            if (model != real) return false;
        }
        return colength() == ideal.colength();
    }
};

}  // namespace

TEST_CASE("randomized cross-check against the valuation-set model") {
    std::mt19937 rng(2024);
    const std::vector<std::vector<int>> semis = {
        {4, 9, 10}, {3, 4, 5}, {5, 6, 9}, {4, 5, 6}, {3, 7, 11}, {5, 6, 7, 8}, {2, 3}};
    for (int trial = 0; trial < 60; ++trial) {
        const auto& gens = semis[trial % semis.size()];
        NumericalSemigroup S(gens);
        R ring(S);
        const int bound = 6 * S.conductor() + 120;

        auto random_monomial_ideal = [&](std::vector<int>& exps) {
            std::uniform_int_distribution<int> count(1, 3), pick(1, 3 * S.conductor() + 6);
            exps.clear();
            int n = count(rng);
            std::vector<Series<Rational>> g;
            while (static_cast<int>(exps.size()) < n) {
                int e = pick(rng);
                if (!S.contains(e)) continue;
                exps.push_back(e);
                g.push_back(ring.monomial(e));
            }
            return echelonize(ring, g);
        };

        std::vector<int> ea, eb;
        I a = random_monomial_ideal(ea);
        I b = random_monomial_ideal(eb);
        ValuationModel ma(S, bound, ea), mb(S, bound, eb);

        CHECK(ma.matches(a));
        CHECK(ValuationModel::sum(ma, mb).matches(ideal_sum(a, b)));
        CHECK(ValuationModel::product(ma, mb).matches(ideal_product(a, b)));
        CHECK(ValuationModel::intersect(ma, mb).matches(ideal_intersect(a, b)));
        CHECK(ValuationModel::colon(ma, eb).matches(ideal_colon(a, b)));
    }
}

TEST_CASE("minimal generator counts") {
    R ring(NumericalSemigroup({4, 9, 10}));
    I a = echelonize(ring, {ring.monomial(8), ring.monomial(9), ring.monomial(10)});
    CHECK(min_generators(a) == 3);
    CHECK(min_generators(maximal_ideal(ring)) == 3);
    CHECK(min_generators(principal_ideal(ring, ring.monomial(8))) == 1);
}
