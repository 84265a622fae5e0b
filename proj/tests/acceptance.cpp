// End-to-end acceptance checks. Each numbered check prints exactly one
// PASS/FAIL line; the process exits nonzero when any check fails.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "agr/corpus.hpp"
#include "agr/gorenstein.hpp"
#include "agr/presentation.hpp"
#include "agr/scalar.hpp"

using namespace agr;

using Ops = SemigroupOps<Rational>;
using B = SemigroupPresentationBackend<Rational>;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS  " << n << ": " << what << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL  " << n << ": " << what << "  [" << e.what() << "]\n";
    }
}

struct Check : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Check(msg);
}

B make_backend(std::vector<int> gens) {
    return B{Ops{SemigroupRing<Rational>(NumericalSemigroup(std::move(gens)))}};
}

// the semigroup corpus instances used by the property suites
struct Instance {
    std::vector<int> gens;
    std::vector<int> ideal_exps;
    int reduction_exp;
};
const std::vector<Instance> kInstances = {
    {{4, 9, 10}, {8, 9, 10}, 8}, {{5, 6, 9}, {5, 6, 9}, 5},  {{4, 5, 6}, {4, 5}, 4},
    {{4, 5, 6}, {4, 5, 6}, 4},   {{5, 6, 7, 8}, {5, 6, 7}, 5}, {{3, 7, 11}, {6, 7, 11}, 6},
    {{3, 4, 5}, {3, 4}, 3},
};

}  // namespace

int main() {
    criterion(1, "t^4,t^9,t^10 ring: reduction number, lengths, presentation of G", [] {
        B bk = make_backend({4, 9, 10});
        auto& R = bk.ops.ring;
        std::vector<Series<Rational>> g = {R.monomial(8), R.monomial(9), R.monomial(10)};
        auto I = echelonize(R, g);
        auto J = principal_ideal(R, R.monomial(8));
        require(reduction_number(bk.ops, J, I) == 2, "r != 2");
        require(I.colength() == 2, "colength != 2");
        HilbertData h = hilbert_functions(bk.ops, I, std::optional(J), 6);
        require(h.e_I == 8, "multiplicity != 8");
        FreenessData f = normal_flatness(bk.ops, I, 3);
        require(f.normally_flat, "not normally flat");
        require(f.ranks == std::vector<long>({1, 3, 4, 4}), "conormal ranks differ");
        GradedPresentation p = present_G(bk, I, g, 5);
        require(p.generator_degrees() == std::vector<int>({2, 2}), "relation degrees differ");
        require(ci_assess(p, 1) == CiVerdict::CompleteIntersection, "not a complete intersection");
        require(graded_gorenstein_check(bk.ops, I, J).gorenstein, "G not Gorenstein");
    });

    criterion(2, "t^3,t^7,t^11 ring: normal flatness failure with matching multiplicities", [] {
        B bk = make_backend({3, 7, 11});
        auto& R = bk.ops.ring;
        std::vector<Series<Rational>> g = {R.monomial(6), R.monomial(7), R.monomial(11)};
        auto I = echelonize(R, g);
        auto J = principal_ideal(R, R.monomial(6));
        require(length_between(ideal_power(I, 2), I) == 5, "lambda(I/I^2) != 5");
        auto I2 = echelonize(R, {R.monomial(12), R.monomial(13), R.monomial(14)});
        require(ideal_power(I, 2) == I2, "I^2 != (t^12,t^13,t^14)");
        FreenessData f = normal_flatness(bk.ops, I, 6);
        require(!f.free_flags[1], "I/I^2 unexpectedly free");
        for (int i = 2; i <= 6; ++i) {
            require(f.free_flags[static_cast<size_t>(i)], "conormal module not free");
            require(f.ranks[static_cast<size_t>(i)] == 3, "conormal rank != 3");
        }
        HilbertData h = hilbert_functions(bk.ops, I, std::optional(J), 7);
        require(h.e_I == 6, "e(G) != 6");
        require(h.e_I == I.colength() * h.e_F, "e(G) != lambda(R/I) * e(F)");
        require(cm_check_G(bk.ops, I, J).value, "G not Cohen-Macaulay");
        require(!fiber_cm_dim1(bk.ops, I, J).value, "F unexpectedly Cohen-Macaulay");
        GradedPresentation p = present_G(bk, I, g, 5);
        require(p.generator_degrees() == std::vector<int>({1, 2, 2, 2, 3}), "relation degrees differ");
    });

    criterion(3, "t^3,t^4,t^5 ring: torsion in G, hypersurface fiber cone", [] {
        B bk = make_backend({3, 4, 5});
        auto& R = bk.ops.ring;
        std::vector<Series<Rational>> g = {R.monomial(3), R.monomial(4)};
        auto I = echelonize(R, g);
        auto J = principal_ideal(R, R.monomial(3));
        require(reduction_number(bk.ops, J, I) == 2, "r != 2");
        require(I.colength() == 2, "colength != 2");
        require(length_between(ideal_power(I, 2), I) == 2, "lambda(I/I^2) != 2");
        HilbertData h = hilbert_functions(bk.ops, I, std::optional(J), 6);
        require(h.e_I == 3, "e != 3");
        GradedPresentation p = present_G(bk, I, g, 6);
        require(p.generator_degrees() == std::vector<int>({1, 1, 3}), "relation degrees differ");
        GradedPresentation f = present_F(bk, I, g, 6);
        require(f.generator_degrees() == std::vector<int>({3}), "fiber relation degrees differ");
        require(f.degrees[3].representatives == std::vector<std::string>({"Y^3"}), "K != (Y^3)");
        require(ci_assess(f, 1) == CiVerdict::CompleteIntersection, "K not CI");
        require(ci_assess(p, 1) == CiVerdict::NotCompleteIntersection, "L unexpectedly CI");
    });

    criterion(4, "t^5,t^6,t^9 ring: Cohen-Macaulay G that is not Gorenstein", [] {
        B bk = make_backend({5, 6, 9});
        auto& R = bk.ops.ring;
        auto M = maximal_ideal(R);
        auto J = principal_ideal(R, R.monomial(5));
        require(reduction_number(bk.ops, J, M) == 3, "r != 3");
        SevenWayResult q = seven_way_check(bk.ops, M, J);
        require(q.graded_lengths == std::vector<long>({1, 2, 1, 1}), "quotient Hilbert function differs");
        require(!q.gorenstein, "unexpectedly Gorenstein (quotient)");
        require(!graded_gorenstein_check(bk.ops, M, J).gorenstein, "unexpectedly Gorenstein (graded)");
        require(cm_check_G(bk.ops, M, J).value, "G not Cohen-Macaulay");
    });

    criterion(5, "t^4,t^5,t^6 ring: reduction-dependent quotients, invariant conductor", [] {
        B bk = make_backend({4, 5, 6});
        auto& R = bk.ops.ring;
        auto I = echelonize(R, {R.monomial(4), R.monomial(5)});
        auto J = principal_ideal(R, R.monomial(4));
        auto Jp = principal_ideal(R, R.monomial(4) - R.monomial(5));
        require(reduction_number(bk.ops, J, I) == 3, "r != 3");
        require(index_of_nilpotency(bk.ops, J, I) == 1, "s_J != 1");
        require(index_of_nilpotency(bk.ops, Jp, I) == 2, "s_J' != 2");
        require(seven_way_check(bk.ops, I, J).gorenstein, "quotient by J not Gorenstein");
        SevenWayResult qp = seven_way_check(bk.ops, I, Jp);
        require(!qp.gorenstein, "quotient by J' unexpectedly Gorenstein");
        require(qp.graded_lengths == std::vector<long>({2, 1, 1}), "quotient Hilbert function differs");
        require(!cm_check_G(bk.ops, I, J).value, "G unexpectedly Cohen-Macaulay");
        check_blowup_conductor_agreement(bk.ops, I, J, Jp);
    });

    criterion(6, "t^5,t^6,t^7,t^8 ring: conductor coincidence without Gorenstein conclusion", [] {
        B bk = make_backend({5, 6, 7, 8});
        auto& R = bk.ops.ring;
        auto I = echelonize(R, {R.monomial(5), R.monomial(6), R.monomial(7)});
        auto J = principal_ideal(R, R.monomial(5));
        auto m = maximal_ideal(R);
        require(reduction_number(bk.ops, J, I) == 2, "r != 2");
        auto cond = blowup_conductor(bk.ops, I, J);
        require(bk.ops.equal(cond, ideal_power(I, 2)), "J^2:I^2 != I^2");
        require(!cm_check_G(bk.ops, I, J).value, "G unexpectedly Cohen-Macaulay");
        require(bk.ops.equal(ratliff_rush(bk.ops, I).closure, m), "closure of I != m");
        CanonicalSliceResult qm = quasi_gorenstein_check(bk.ops, m, J);
        require(qm.quasi_gorenstein && qm.u == 0, "m: expected u = 0 quasi-Gorenstein");
        require(graded_gorenstein_check(bk.ops, m, J).gorenstein, "G(m) not Gorenstein");
        ConductorShiftResult c = conductor_shift_check(bk.ops, I, J);
        require(c.conductor_is_Ir, "conductor shift u' != 0");
        require(!c.all_powers_rr, "powers unexpectedly all Ratliff-Rush");
        require(!c.gorenstein_forced, "Gorenstein wrongly forced for I");
    });

    criterion(7, "t^4,t^5,t^6 ring: Ratliff-Rush power ladder and failed canonical shift", [] {
        B bk = make_backend({4, 5, 6});
        auto& R = bk.ops.ring;
        auto I = echelonize(R, {R.monomial(4), R.monomial(5)});
        auto J = principal_ideal(R, R.monomial(4));
        auto m = maximal_ideal(R);
        for (int i = 1; i <= 5; ++i)
            require(bk.ops.equal(ratliff_rush(bk.ops, ideal_power(I, i)).closure, ideal_power(m, i)),
                    "closure of I^i != m^i");
        auto I3 = ideal_power(I, 3);
        require(bk.ops.equal(I3, ideal_power(m, 3)), "I^3 != m^3");
        for (int i = 1; i <= 6; ++i) {
            require(bk.ops.equal(bk.ops.colon(ideal_power(J, i), I3), ideal_power(m, i - 1)),
                    "J^i : I^3 != m^(i-1)");
            require(bk.ops.equal(bk.ops.colon(ideal_power(J, i), ideal_power(m, 2)), ideal_power(m, i)),
                    "J^i : m^2 != m^i");
        }
        require(!quasi_gorenstein_check(bk.ops, I, J).quasi_gorenstein,
                "unexpected canonical shift for I");
    });

    criterion(8, "monomial quotient rings: relation degrees of G exceed those of F", [] {
        {
            MonomialPresentationBackend bk{MonomialOps{
                MonomialQuotientRing({"x", "y"}, MonomialIdeal(2, {{2, 1}, {0, 3}}))}};
            auto I = bk.ops.ring.lift(MonomialIdeal(2, {{1, 0}}));
            std::vector<Exponents> g = {{1, 0}};
            require(bk.ops.colength(I) == 3, "lambda(R/I) != 3");
            require(bk.ops.colength(bk.ops.power(I, 2)) == 6, "lambda(R/I^2) != 6");
            GradedPresentation p = present_G(bk, I, g, 6, {"U"});
            require(p.degrees[0].new_generators == 0 && p.degrees[1].new_generators == 0,
                    "unexpected low-degree relation");
            require(p.degrees[2].new_generators == 1, "missing degree-2 relation");
            GradedPresentation f = present_F(bk, I, g, 6, {"U"});
            require(f.total_generators == 0, "K != 0 below the degree bound");
        }
        {
            MonomialPresentationBackend bk{MonomialOps{MonomialQuotientRing(
                {"x", "y", "z"}, MonomialIdeal(3, {{2, 0, 0}, {0, 2, 0}, {1, 1, 2}}))}};
            auto I = bk.ops.ring.lift(MonomialIdeal(3, {{0, 1, 0}, {0, 0, 1}}));
            std::vector<Exponents> g = {{0, 1, 0}, {0, 0, 1}};
            long l1 = bk.ops.colength(bk.ops.power(I, 2)) - bk.ops.colength(I);
            long l2 = bk.ops.colength(bk.ops.power(I, 3)) - bk.ops.colength(bk.ops.power(I, 2));
            require(l1 == 4 && l2 == 4, "conormal lengths != 4");
            GradedPresentation f = present_F(bk, I, g, 6, {"U", "V"});
            require(f.generator_degrees() == std::vector<int>({2}), "K not a single quadric");
            GradedPresentation p = present_G(bk, I, g, 6, {"U", "V"});
            require(p.generator_degrees() == std::vector<int>({2, 3}), "L degrees != [2,3]");
        }
    });

    criterion(9, "property suite: seven-way criterion agrees on 200 random instances", [] {
        std::mt19937 rng(314159);
        const std::vector<std::vector<int>> symmetric_semis = {
            {4, 9, 10}, {4, 5, 6}, {5, 6, 9}, {5, 6, 7, 8}, {2, 3}, {3, 4}, {2, 5}, {3, 5}};
        int done = 0;
        while (done < 200) {
            const auto& gens = symmetric_semis[static_cast<size_t>(done) % symmetric_semis.size()];
            Ops ops{SemigroupRing<Rational>(NumericalSemigroup(gens))};
            auto& R = ops.ring;
            const NumericalSemigroup& S = R.semigroup();
            std::uniform_int_distribution<int> pick(1, 3 * S.conductor() + 8), nger(2, 3),
                coin(0, 2);
            std::vector<Series<Rational>> g;
            int n = nger(rng);
            while (static_cast<int>(g.size()) < n) {
                int e = pick(rng);
                if (!S.contains(e)) continue;
                Series<Rational> el = R.monomial(e);
                if (coin(rng) == 0) {
                    int f = pick(rng);
                    if (S.contains(f) && f != e)
                        el = el + R.monomial(f, coin(rng) == 0 ? -1 : 1);
                }
                g.push_back(el);
            }
            auto I = echelonize(R, g);
            auto J = *ops.principal_reduction(I);
            if (ops.equal(I, J)) continue;  // nothing to grade
            // the seven-way check evaluates all conditions independently and raises
            // CriteriaDisagree on any mismatch; socle dims are cross-checked
            SevenWayResult q = seven_way_check(ops, I, J);
            long socle_total = 0;
            for (size_t i = 0; i + 1 < q.socle_dims.size(); ++i) socle_total += q.socle_dims[i];
            require(q.gorenstein == (socle_total == 0), "socle table contradicts the verdict");
            ++done;
        }
    });

    criterion(10, "property suite: corpus reports are identical at doubled precision", [] {
        for (const CorpusCase& c : corpus_cases()) {
            Json base = run_corpus_case(c);
            if (base["precision"]["working"].is_null()) continue;  // monomial backend
            CorpusCase doubled = c;
            doubled.opts.precision = 2 * base["precision"]["working"].get<int>();
            Json again = run_corpus_case(doubled);
            require(diff_corpus_case(c, again).empty(), c.name + ": expectations drifted");
            Json a = base, b = again;
            a.erase("precision");
            b.erase("precision");
            require(a == b, c.name + ": report changed under doubled precision");
        }
    });

    criterion(11, "property suite: colon slices absorb powers of the ideal", [] {
        for (const Instance& inst : kInstances) {
            Ops ops{SemigroupRing<Rational>(NumericalSemigroup(inst.gens))};
            auto& R = ops.ring;
            std::vector<Series<Rational>> g;
            for (int e : inst.ideal_exps) g.push_back(R.monomial(e));
            auto I = echelonize(R, g);
            auto J = principal_ideal(R, R.monomial(inst.reduction_exp));
            int r = reduction_number(ops, J, I);
            auto Ir = ideal_power(I, r);
            for (int i = 0; i <= 4; ++i) {
                auto slice = ops.colon(ideal_power(J, i), Ir);
                for (int n = 0; n <= 4; ++n) {
                    auto target = ops.colon(ideal_power(J, n + i), Ir);
                    require(target.contains(ideal_product(ideal_power(I, n), slice)),
                            "I^n * (J^i : I^r) escapes J^(n+i) : I^r");
                }
            }
        }
    });

    criterion(12, "property suite: colon criterion, depth, and stable powers cohere", [] {
        for (const Instance& inst : kInstances) {
            Ops ops{SemigroupRing<Rational>(NumericalSemigroup(inst.gens))};
            auto& R = ops.ring;
            std::vector<Series<Rational>> g;
            for (int e : inst.ideal_exps) g.push_back(R.monomial(e));
            auto I = echelonize(R, g);
            auto J = principal_ideal(R, R.monomial(inst.reduction_exp));
            bool cm = cm_check_G(ops, I, J).value;
            try {
                if (graded_gorenstein_check(ops, I, J).gorenstein)
                    require(cm, "Gorenstein colon conditions without Cohen-Macaulayness");
            } catch (const HypothesisFailure&) {
                // non-symmetric ring, the colon criterion does not apply
            }
            if (cm) {
                int r = reduction_number(ops, J, I);
                require(index_of_nilpotency(ops, J, I) == r, "s != r on a Cohen-Macaulay instance");
                for (int i = 0; i <= r; ++i)
                    require(ops.equal(ops.colon(ideal_power(I, i + 1), ideal_power(I, i)), I),
                            "I^(i+1) : I^i != I on a Cohen-Macaulay instance");
            }
        }
    });

    std::cout << (failures == 0 ? "all acceptance checks passed"
                                : std::to_string(failures) + " acceptance check(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
