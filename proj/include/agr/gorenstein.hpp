#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "agr/backend.hpp"
#include "agr/errors.hpp"
#include "agr/filtration.hpp"

namespace agr {

// lambda((J:m)/J) = 1, the Gorenstein test for the Artinian ring R/J.
template <class Ops>
bool artinian_gorenstein(const Ops& ops, const typename Ops::Ideal& J) {
    typename Ops::Ideal socle = ops.colon(J, ops.maximal());
    return ops.colength(J) - ops.colength(socle) == 1;
}

// --- the seven-way Artinian criterion --------------------------------------
//
// In Rbar = R/J (Artinian Gorenstein) with Ibar nilpotent of index r, the
// following are equivalent and are all evaluated independently:
//   (1) G(Ibar) is Gorenstein (socle of G concentrated in top degree, dim 1)
//   (2) S_i = 0 for 0 <= i <= r-1
//   (3) 0 : Ibar^(r-i) = Ibar^(i+1) for 0 <= i <= r-1
//   (4) the same for 0 <= i <= floor((r-1)/2)
//   (5) lambda(G_i) = lambda(G_(r-i)) for 0 <= i <= floor((r-1)/2)
//   (6) Ibar^r : Ibar^(r-i) = Ibar^i for 1 <= i <= r-1, and 0 : Ibar = Ibar^r
//   (7) Ibar^(r-i)/Ibar^r faithful over Rbar/Ibar^i for 1 <= i <= r-1, and
//       Ibar faithful over Rbar/Ibar^r
// All ideals of Rbar are carried as ambient ideals containing J, so every
// colon and equality below is an ambient computation.  The conditions are
// equivalent theorems; any disagreement is an internal error.

struct SevenWayResult {
    bool gorenstein = false;
    int r = 0;                    // nilpotency index of Ibar
    std::vector<bool> conditions;  // indexed 1..7 at [0..6]
    std::vector<long> socle_dims;  // lambda(S_i), 0 <= i <= r
    std::vector<long> graded_lengths;  // lambda(G_i), 0 <= i <= r
    std::string witness;          // first failing condition instance, when not Gorenstein
};

template <class Ops>
SevenWayResult seven_way_check(const Ops& ops, const typename Ops::Ideal& I,
                                const typename Ops::Ideal& J, int bound = 64) {
    if (!ops.contains(I, J)) throw NotContained("seven-way criterion: J not contained in I");
    if (!artinian_gorenstein(ops, J))
        throw HypothesisFailure("seven-way criterion: R/J is not Gorenstein");

    SevenWayResult out;
    long top = ops.colength(J);

    // powers of I, summed with J; pw[i] represents Ibar^i
    std::vector<typename Ops::Ideal> pw;
    pw.push_back(ops.unit());
    int r = -1;
    for (int i = 1; i <= bound + 2; ++i) {
        pw.push_back(ops.product(pw.back(), I));
        if (r < 0 && ops.colength(ops.sum(pw.back(), J)) == top) r = i - 1;
        if (r >= 0 && static_cast<int>(pw.size()) > r + 2) break;
    }
    if (r < 0) throw NotArtinian("seven-way criterion: I is not nilpotent modulo J");
    if (r == 0) throw HypothesisFailure("seven-way criterion: Ibar = 0; the criterion needs r >= 1");
    out.r = r;
    auto bar = [&](int i) { return ops.sum(pw[static_cast<size_t>(std::min(std::max(i, 0), r + 2))], J); };

    std::ostringstream first_fail;
    auto note = [&](const std::string& s) {
        if (first_fail.tellp() == 0) first_fail << s;
    };

    // (2) socle components
    out.socle_dims = socle_table(ops, J, I, bound);
    bool c2 = true;
    for (int i = 0; i < r; ++i)
        if (out.socle_dims[static_cast<size_t>(i)] != 0) {
            c2 = false;
            note("socle component S_" + std::to_string(i) + " has dimension " +
                 std::to_string(out.socle_dims[static_cast<size_t>(i)]));
            break;
        }

    // (1) directly: total socle dimension 1
    long socle_total = 0;
    for (long d : out.socle_dims) socle_total += d;
    bool c1 = (socle_total == 1);

    // (3) and (4): 0 : Ibar^(r-i) = Ibar^(i+1), ambiently J : I^(r-i) = I^(i+1) + J
    bool c3 = true, c4 = true;
    int half = (r - 1) / 2;
    for (int i = 0; i <= r - 1; ++i) {
        typename Ops::Ideal lhs = ops.colon(J, pw[static_cast<size_t>(r - i)]);
        bool ok = ops.equal(lhs, bar(i + 1));
        if (!ok) {
            c3 = false;
            if (i <= half) c4 = false;
            note("0 : Ibar^" + std::to_string(r - i) + " != Ibar^" + std::to_string(i + 1) +
                 " (lhs " + ops.describe(lhs) + ")");
        }
    }

    // (5) symmetry of the Hilbert function of G(Ibar)
    for (int i = 0; i <= r; ++i)
        out.graded_lengths.push_back(ops.colength(bar(i + 1)) - ops.colength(bar(i)));
    bool c5 = true;
    for (int i = 0; i <= half; ++i)
        if (out.graded_lengths[static_cast<size_t>(i)] !=
            out.graded_lengths[static_cast<size_t>(r - i)]) {
            c5 = false;
            note("lambda(G_" + std::to_string(i) + ") != lambda(G_" + std::to_string(r - i) + ")");
        }

    // (6) Ibar^r : Ibar^(r-i) = Ibar^i and 0 : Ibar = Ibar^r
    bool c6 = true;
    for (int i = 1; i <= r - 1; ++i) {
        typename Ops::Ideal lhs = ops.colon(bar(r), pw[static_cast<size_t>(r - i)]);
        if (!ops.equal(lhs, bar(i))) {
            c6 = false;
            note("Ibar^r : Ibar^" + std::to_string(r - i) + " != Ibar^" + std::to_string(i));
        }
    }
    if (!ops.equal(ops.colon(J, I), bar(r))) {
        c6 = false;
        note("0 : Ibar != Ibar^r");
    }

    // (7) faithfulness: the annihilators computed in (6) must not exceed the
    // base ideals, i.e. the containments that are not automatic
    bool c7 = true;
    for (int i = 1; i <= r - 1; ++i) {
        typename Ops::Ideal ann = ops.colon(bar(r), pw[static_cast<size_t>(r - i)]);
        if (!ops.contains(bar(i), ann)) {
            c7 = false;
            note("Ibar^" + std::to_string(r - i) + "/Ibar^r is not faithful over Rbar/Ibar^" +
                 std::to_string(i));
        }
    }
    if (!ops.contains(bar(r), ops.colon(J, I))) {
        c7 = false;
        note("Ibar is not faithful over Rbar/Ibar^r");
    }

    out.conditions = {c1, c2, c3, c4, c5, c6, c7};
    for (bool c : out.conditions)
        if (c != c1)
            throw CriteriaDisagree("the seven equivalent Artinian Gorenstein conditions disagree");
    out.gorenstein = c1;
    if (!out.gorenstein) out.witness = first_fail.str();
    return out;
}

// --- Gorensteinness of G(I) via a parameter reduction -----------------------

struct GradedGorensteinResult {
    bool gorenstein = false;
    int r = 0;  // reduction number r_J(I)
    std::string witness;
};

// G(I) is Gorenstein iff J : I^(r-i) = J + I^(i+1) for 0 <= i <= r-1 (with
// the half range 0 <= i <= floor((r-1)/2) already sufficient).  Both ranges
// are evaluated and must agree.  R/J must be Gorenstein.
template <class Ops>
GradedGorensteinResult graded_gorenstein_check(const Ops& ops, const typename Ops::Ideal& I,
                                   const typename Ops::Ideal& J, int reduction_bound = 32) {
    if (!artinian_gorenstein(ops, J))
        throw HypothesisFailure("graded criterion: R/J is not Gorenstein");
    GradedGorensteinResult out;
    out.r = reduction_number(ops, J, I, reduction_bound);
    if (out.r == 0) {  // I = J is generated by a system of parameters
        out.gorenstein = true;
        return out;
    }
    bool full = true, half = true;
    int h = (out.r - 1) / 2;
    std::ostringstream first_fail;
    for (int i = 0; i <= out.r - 1; ++i) {
        typename Ops::Ideal lhs = ops.colon(J, ops.power(I, out.r - i));
        typename Ops::Ideal rhs = ops.sum(J, ops.power(I, i + 1));
        if (!ops.equal(lhs, rhs)) {
            full = false;
            if (i <= h) half = false;
            if (first_fail.tellp() == 0)
                first_fail << "J : I^" << (out.r - i) << " != J + I^" << (i + 1) << " (lhs "
                           << ops.describe(lhs) << ", rhs " << ops.describe(rhs) << ")";
        }
    }
    if (full != half)
        throw CriteriaDisagree("full and half colon ranges disagree (double annihilator broken)");
    out.gorenstein = full;
    if (!full) out.witness = first_fail.str();
    return out;
}

// Lifting: if I^r is not contained in J and G((I+J)/J) is Gorenstein, then
// G(I) is Gorenstein.  Returns the hypothesis flag, the quotient verdict and
// the lifted verdict; the implication itself is asserted.
struct LiftingResult {
    bool applicable = false;      // I^r not contained in J
    bool quotient_gorenstein = false;
    bool lifted_gorenstein = false;
};

template <class Ops>
LiftingResult lifting_check(const Ops& ops, const typename Ops::Ideal& I,
                          const typename Ops::Ideal& J, int reduction_bound = 32) {
    LiftingResult out;
    int r = reduction_number(ops, J, I, reduction_bound);
    out.applicable = !ops.contains(J, ops.power(I, r));
    out.quotient_gorenstein = seven_way_check(ops, I, J).gorenstein;
    out.lifted_gorenstein = graded_gorenstein_check(ops, I, J, reduction_bound).gorenstein;
    if (out.applicable && out.quotient_gorenstein && !out.lifted_gorenstein)
        throw CriteriaDisagree("quotient Gorensteinness failed to lift");
    return out;
}

// --- quasi-Gorensteinness of the extended Rees algebra ----------------------
//
// The graded canonical module of B = R[It, 1/t] has degree-i component
// J^(i+r) : I^r (height one, principal reduction J, r = r_J(I)).  B is
// quasi-Gorenstein iff some u >= 0 satisfies J^i : I^r = I^(i-u) for all i;
// then the a-invariant is a = r - u, and w = max{ n : I^r subseteq J^n }
// coincides with u.

struct CanonicalSliceResult {
    bool quasi_gorenstein = false;
    int r = 0;   // reduction number
    int s = 0;   // index of nilpotency min{ i : I^(i+1) subseteq J }
    int w = 0;   // max{ n : I^r subseteq J^n }
    int u = -1;  // shift, when quasi-Gorenstein
    int a = 0;   // a-invariant r - u, when quasi-Gorenstein
    std::string witness;
};

template <class Ops>
CanonicalSliceResult quasi_gorenstein_check(const Ops& ops, const typename Ops::Ideal& I,
                                            const typename Ops::Ideal& J,
                                            int reduction_bound = 32) {
    CanonicalSliceResult out;
    out.r = reduction_number(ops, J, I, reduction_bound);
    out.s = index_of_nilpotency(ops, J, I, reduction_bound);
    typename Ops::Ideal ir = ops.power(I, out.r);
    out.w = 0;
    while (ops.contains(ops.power(J, out.w + 1), ir)) ++out.w;

    // candidate shifts are bounded by r - s >= u >= 0; w = u is forced, so
    // test u = w first and fall back to scanning the full range
    std::vector<int> candidates;
    candidates.push_back(out.w);
    for (int u = 0; u <= out.r; ++u)
        if (u != out.w) candidates.push_back(u);

    std::ostringstream fail;
    for (int u : candidates) {
        // verify J^i : I^r = I^(i-u) on the window 1..W and certify the rest
        // by the propagation rule J * (J^W : I^r) = J^(W+1) : I^r, which
        // keeps the equality marching upward since I^(i+1-u) = J * I^(i-u)
        // once i - u >= r
        int W = u + out.r + 1;
        bool ok = true;
        for (int i = 1; i <= W && ok; ++i) {
            typename Ops::Ideal lhs = ops.colon(ops.power(J, i), ir);
            typename Ops::Ideal rhs = ops.power(I, i - u);
            if (!ops.equal(lhs, rhs)) {
                ok = false;
                if (fail.tellp() == 0)
                    fail << "u=" << u << ": J^" << i << " : I^r != I^" << (i - u);
            }
        }
        if (ok) {
            typename Ops::Ideal top = ops.colon(ops.power(J, W), ir);
            typename Ops::Ideal next = ops.colon(ops.power(J, W + 1), ir);
            if (!ops.equal(ops.product(J, top), next))
                throw CriteriaDisagree("canonical slice propagation failed at the window top");
            out.quasi_gorenstein = true;
            out.u = u;
            out.a = out.r - u;
            break;
        }
    }
    if (!out.quasi_gorenstein) out.witness = fail.str();

    // structural sanity from the shift bound r - s >= u >= 0 and w = u
    if (out.quasi_gorenstein && (out.u > out.r - out.s || out.u != out.w))
        throw CriteriaDisagree("canonical shift violates the nilpotency/containment bounds");
    return out;
}

// J^r : I^r is the conductor of the blowup of I into R, hence independent of
// the principal reduction chosen; computing it from two reductions and
// comparing is a strong cross-check of the colon engine.
template <class Ops>
typename Ops::Ideal blowup_conductor(const Ops& ops, const typename Ops::Ideal& I,
                                     const typename Ops::Ideal& J, int reduction_bound = 32) {
    int r = reduction_number(ops, J, I, reduction_bound);
    return ops.colon(ops.power(J, r), ops.power(I, r));
}

template <class Ops>
void check_blowup_conductor_agreement(const Ops& ops, const typename Ops::Ideal& I,
                                      const typename Ops::Ideal& J1,
                                      const typename Ops::Ideal& J2, int reduction_bound = 32) {
    typename Ops::Ideal c1 = blowup_conductor(ops, I, J1, reduction_bound);
    typename Ops::Ideal c2 = blowup_conductor(ops, I, J2, reduction_bound);
    if (!ops.equal(c1, c2))
        throw ConductorMismatch("blowup conductor differs between reductions: " +
                                ops.describe(c1) + " vs " + ops.describe(c2));
}

// If J^r : I^r = I^(r-u) for some u >= 0 then necessarily u = 0; and when
// additionally all powers of I are Ratliff-Rush, G(I) is Gorenstein.
struct ConductorShiftResult {
    bool conductor_is_Ir = false;   // J^r : I^r = I^r
    bool all_powers_rr = false;
    bool gorenstein_forced = false;  // both of the above hold
};

template <class Ops>
ConductorShiftResult conductor_shift_check(const Ops& ops, const typename Ops::Ideal& I,
                                  const typename Ops::Ideal& J, int reduction_bound = 32) {
    ConductorShiftResult out;
    int r = reduction_number(ops, J, I, reduction_bound);
    typename Ops::Ideal cond = blowup_conductor(ops, I, J, reduction_bound);
    out.conductor_is_Ir = ops.equal(cond, ops.power(I, r));
    // J^r : I^r = I^(r-u) with u > 0 is impossible; verify
    for (int u = 1; u <= r; ++u)
        if (ops.equal(cond, ops.power(I, r - u)))
            throw CriteriaDisagree("blowup conductor equals a proper lower power of I");
    out.all_powers_rr = rr_all_powers(ops, I, std::max(r, 1));
    out.gorenstein_forced = out.conductor_is_Ir && out.all_powers_rr;
    if (out.gorenstein_forced && !graded_gorenstein_check(ops, I, J, reduction_bound).gorenstein)
        throw CriteriaDisagree("forced Gorensteinness contradicts the colon criterion");
    return out;
}

// --- the Ratliff-Rush filtration's extended Rees algebra --------------------
//
// With T_i the Ratliff-Rush closure of I^i (T_i = I^i for i <= 0), find
// k >= 0 with J^j * T_k = T_(j+k) for j >= 0; then C = sum T_i t^i is
// quasi-Gorenstein with a-invariant b iff J^i : T_k = T_(i+b-k) for all i.

struct RrReesResult {
    bool detected = false;        // a valid k was found
    int k = -1;
    bool quasi_gorenstein = false;
    int b = 0;                    // a-invariant, when quasi-Gorenstein
    std::string witness;
};

template <class Ops>
RrReesResult rr_rees_check(const Ops& ops, const typename Ops::Ideal& I,
                            const typename Ops::Ideal& J, int reduction_bound = 32,
                            int margin = 2) {
    RrReesResult out;
    int r = reduction_number(ops, J, I, reduction_bound);
    int K = r + 2;
    std::vector<typename Ops::Ideal> T;  // T[i] = closure of I^i, T[0] = R
    T.push_back(ops.unit());
    for (int i = 1; i <= K + r + 3; ++i)
        T.push_back(ratliff_rush(ops, ops.power(I, i), margin).closure);

    for (int k = 0; k <= K && !out.detected; ++k) {
        bool ok = true;
        for (int j = 1; j <= r + 2 && ok; ++j)
            if (!ops.equal(ops.product(ops.power(J, j), T[static_cast<size_t>(k)]),
                           T[static_cast<size_t>(k + j)]))
                ok = false;
        if (ok) {
            out.detected = true;
            out.k = k;
        }
    }
    if (!out.detected)
        throw HypothesisNotDetected("no k with J^j * T_k = T_(j+k) within the probe window");

    // search the a-invariant b: J^i : T_k = T_(i+b-k) on a window, with the
    // same propagation certificate as the canonical-slice check
    std::ostringstream fail;
    for (int b = 0; b <= out.k + 1 && !out.quasi_gorenstein; ++b) {
        int W = out.k - b + r + 2;
        if (W < 1) W = 1;
        bool ok = true;
        for (int i = 1; i <= W && ok; ++i) {
            typename Ops::Ideal lhs = ops.colon(ops.power(J, i), T[static_cast<size_t>(out.k)]);
            int d = i + b - out.k;
            typename Ops::Ideal rhs =
                d <= 0 ? ops.unit() : T[static_cast<size_t>(d)];
            if (!ops.equal(lhs, rhs)) {
                ok = false;
                if (fail.tellp() == 0)
                    fail << "b=" << b << ": J^" << i << " : T_k != T_" << d;
            }
        }
        if (ok) {
            typename Ops::Ideal top = ops.colon(ops.power(J, W), T[static_cast<size_t>(out.k)]);
            typename Ops::Ideal next =
                ops.colon(ops.power(J, W + 1), T[static_cast<size_t>(out.k)]);
            if (!ops.equal(ops.product(J, top), next))
                throw CriteriaDisagree("Ratliff-Rush slice propagation failed at the window top");
            out.quasi_gorenstein = true;
            out.b = b;
        }
    }
    if (!out.quasi_gorenstein) out.witness = fail.str();
    return out;
}

}  // namespace agr
