#pragma once

#include <optional>
#include <string>

#include "agr/ideal.hpp"
#include "agr/monomial.hpp"

namespace agr {

// Uniform ideal-calculus interface over the two engines, so the filtration
// layer can run unchanged on power-series ideals and on monomial staircases.

template <class K>
struct SemigroupOps {
    using Ideal = RingIdeal<K>;

    SemigroupRing<K> ring;

    Ideal sum(const Ideal& a, const Ideal& b) const { return ideal_sum(a, b); }
    Ideal product(const Ideal& a, const Ideal& b) const { return ideal_product(a, b); }
    Ideal power(const Ideal& a, int n) const { return ideal_power(a, n); }
    Ideal colon(const Ideal& a, const Ideal& b) const { return ideal_colon(a, b); }
    Ideal intersect(const Ideal& a, const Ideal& b) const { return ideal_intersect(a, b); }
    bool equal(const Ideal& a, const Ideal& b) const { return a == b; }
    bool contains(const Ideal& outer, const Ideal& inner) const { return outer.contains(inner); }
    long colength(const Ideal& a) const { return a.colength(); }
    Ideal unit() const { return unit_ideal(ring); }
    Ideal maximal() const { return maximal_ideal(ring); }
    std::string describe(const Ideal& a) const { return a.summary(); }

    // Any element of minimal valuation generates a reduction of an m-primary
    // ideal of k[[t^S]]; the first echelon basis element is one.
    std::optional<Ideal> principal_reduction(const Ideal& a) const {
        // an ideal with no pivots below its tail is (t^tau, ..., t^(tau+m-1)),
        // whose minimal-valuation element is the tail monomial itself
        if (a.basis().empty()) return principal_ideal(ring, ring.monomial(a.tail()));
        return principal_ideal(ring, a.basis().begin()->second.as_exact_polynomial());
    }
};

struct MonomialOps {
    using Ideal = MonomialIdeal;

    MonomialQuotientRing ring;

    Ideal sum(const Ideal& a, const Ideal& b) const { return ring.lift(mono_sum(a, b)); }
    Ideal product(const Ideal& a, const Ideal& b) const { return ring.lift(mono_product(a, b)); }
    Ideal power(const Ideal& a, int n) const {
        if (n <= 0) return unit();
        Ideal r = ring.lift(a);
        Ideal base = a;
        for (int i = 1; i < n; ++i) r = ring.lift(mono_product(r, base));
        return r;
    }
    Ideal colon(const Ideal& a, const Ideal& b) const {
        return ring.lift(mono_colon(ring.lift(a), ring.lift(b)));
    }
    Ideal intersect(const Ideal& a, const Ideal& b) const {
        return ring.lift(mono_intersect(ring.lift(a), ring.lift(b)));
    }
    bool equal(const Ideal& a, const Ideal& b) const { return ring.lift(a) == ring.lift(b); }
    bool contains(const Ideal& outer, const Ideal& inner) const {
        return ring.lift(outer).contains(ring.lift(inner));
    }
    long colength(const Ideal& a) const { return mono_length_or_throw(a, ring); }
    Ideal unit() const { return MonomialIdeal::unit(ring.nvars()); }
    Ideal maximal() const { return ring.maximal(); }
    std::string describe(const Ideal& a) const { return ring.lift(a).str(ring.names()); }

    // No regular-element reduction exists in the Artinian quotient.
    std::optional<Ideal> principal_reduction(const Ideal&) const { return std::nullopt; }
};

// mu(A) = lambda(A/mA), and its quotient-ring variant over R/J, expressed
// through colengths so they work on either backend.
template <class Ops>
long mu_of(const Ops& ops, const typename Ops::Ideal& a) {
    return ops.colength(ops.product(ops.maximal(), a)) - ops.colength(a);
}

template <class Ops>
long mu_mod(const Ops& ops, const typename Ops::Ideal& a, const typename Ops::Ideal& j) {
    return ops.colength(ops.sum(ops.product(ops.maximal(), a), j)) -
           ops.colength(ops.sum(a, j));
}

}  // namespace agr
