#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "agr/errors.hpp"
#include "agr/semigroup.hpp"
#include "agr/series.hpp"

namespace agr {

// The ring R = k[[t^S]] together with the session-level adaptive precision
// registry.  Copies share the session; escalations are serialized.
template <class K>
class SemigroupRing {
public:
    explicit SemigroupRing(NumericalSemigroup s, K one = K(1),
                           int initial_precision = 0, int precision_cap = 1 << 16)
        : semigroup_(std::make_shared<NumericalSemigroup>(std::move(s))),
          one_(std::move(one)),
          session_(std::make_shared<Session>()) {
        const int c = semigroup_->conductor();
        const int floor = std::max({4 * c, 2 * c + 4 * semigroup_->max_generator() + 8, 32});
        session_->working = std::max(initial_precision, floor);
        session_->cap = precision_cap;
    }

    const NumericalSemigroup& semigroup() const { return *semigroup_; }
    int conductor() const { return semigroup_->conductor(); }

    K scalar(long n) const { return one_.make(n); }
    Series<K> monomial(int e, long coeff = 1) const { return Series<K>::monomial(e, scalar(coeff)); }
    Series<K> one() const { return Series<K>::constant(scalar(1)); }

    int working_precision() const {
        std::lock_guard<std::mutex> lk(session_->mu);
        return session_->working;
    }
    int precision_cap() const { return session_->cap; }
    // Raises the session precision to at least `p` (doubling); returns the
    // new working precision or throws once the cap is exceeded.
    int escalate(int p) const {
        std::lock_guard<std::mutex> lk(session_->mu);
        while (session_->working < p) {
            if (2 * session_->working > session_->cap)
                throw PrecisionExhausted("precision cap " + std::to_string(session_->cap) +
                                         " reached; ideal is likely not m-primary");
            session_->working *= 2;
        }
        return session_->working;
    }

    bool same(const SemigroupRing& o) const { return session_ == o.session_; }

private:
    struct Session {
        int working = 0;
        int cap = 0;
        mutable std::mutex mu;
    };
    std::shared_ptr<NumericalSemigroup> semigroup_;
    K one_;
    std::shared_ptr<Session> session_;
};

// An m-primary ideal of R = k[[t^S]] in canonical form: a valuation-echelon
// basis with strictly increasing pivot valuations below the certified tail
// degree tau, each basis element monic at its pivot, reduced at the other
// pivots and truncated at tau, together with the rule that every element of
// R with valuation >= tau lies in the ideal.  This finite data determines
// the ideal exactly; equality is decided on it.
template <class K>
class RingIdeal {
public:
    const SemigroupRing<K>& ring() const { return ring_; }
    int tail() const { return tail_; }
    const std::map<int, Series<K>>& basis() const { return basis_; }
    const std::vector<Series<K>>& input_generators() const { return gens_; }

    bool has_pivot(int v) const {
        if (v >= tail_) return ring_.semigroup().contains(v);
        return basis_.count(v) > 0;
    }

    // k-basis exponents of R/I: members of S below tau that are not pivots.
    std::vector<int> residue_exponents() const {
        std::vector<int> out;
        for (int e : ring_.semigroup().elements_below(tail_))
            if (!basis_.count(e)) out.push_back(e);
        return out;
    }

    long colength() const { return static_cast<long>(residue_exponents().size()); }

    // Canonical reduction of f modulo the ideal: the residue supported on
    // non-pivot S-exponents below tau.  Coefficients at exponents >= tau are
    // in the ideal and are dropped.
    Series<K> reduce(const Series<K>& f) const {
        Series<K> r = f.truncated(std::min(f.precision(), Series<K>::kExact));
        Series<K> out;
        while (!r.is_zero()) {
            int v = *r.valuation();
            if (v >= tail_) break;
            auto it = basis_.find(v);
            if (it != basis_.end()) {
                r.sub_scaled(r.coeff(v), it->second);
            } else {
                if (!ring_.semigroup().contains(v))
                    throw NotInRing("exponent " + std::to_string(v) + " is not in the semigroup");
                out = out + Series<K>::monomial(v, r.coeff(v));
                r.sub_scaled(r.coeff(v), Series<K>::monomial(v, ring_.scalar(1)));
            }
        }
        return out;
    }

    std::vector<K> residue_coords(const Series<K>& f) const {
        Series<K> r = reduce(f);
        std::vector<int> exps = residue_exponents();
        std::vector<K> out(exps.size(), ring_.scalar(0));
        for (size_t i = 0; i < exps.size(); ++i) out[i] = r.coeff(exps[i]);
        return out;
    }

    bool contains(const Series<K>& f) const { return reduce(f).is_zero(); }
    bool contains(const RingIdeal& other) const {
        for (const auto& g : other.canonical_generators())
            if (!contains(g)) return false;
        return true;
    }

    // Module generators recovering the ideal exactly: the truncated basis
    // elements plus the tail monomials t^tau .. t^(tau+min_gen-1).
    std::vector<Series<K>> canonical_generators() const {
        std::vector<Series<K>> out;
        // basis elements are exact members of the ideal: their dropped tails
        // lie above tau and are absorbed by the tail monomials
        for (const auto& [v, b] : basis_) out.push_back(b.as_exact_polynomial());
        for (int v = tail_; v < tail_ + ring_.semigroup().min_generator(); ++v)
            out.push_back(ring_.monomial(v));
        return out;
    }

    friend bool operator==(const RingIdeal& a, const RingIdeal& b) {
        if (!a.ring_.same(b.ring_)) throw Error("comparing ideals of different rings");
        if (a.tail_ != b.tail_) return false;
        if (a.basis_.size() != b.basis_.size()) return false;
        auto it = a.basis_.begin();
        auto jt = b.basis_.begin();
        for (; it != a.basis_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const RingIdeal& a, const RingIdeal& b) { return !(a == b); }

    std::string summary() const {
        std::ostringstream os;
        os << "tau=" << tail_ << " pivots{";
        bool first = true;
        for (const auto& [v, b] : basis_) {
            if (!first) os << ",";
            first = false;
            os << v;
        }
        os << "} basis{";
        first = true;
        for (const auto& [v, b] : basis_) {
            if (!first) os << "; ";
            first = false;
            os << b.str();
        }
        os << "}";
        return os.str();
    }

    template <class K2>
    friend RingIdeal<K2> echelonize(const SemigroupRing<K2>&, std::vector<Series<K2>>, int);

private:
    RingIdeal(SemigroupRing<K> ring, int tail, std::map<int, Series<K>> basis,
              std::vector<Series<K>> gens)
        : ring_(std::move(ring)), tail_(tail), basis_(std::move(basis)), gens_(std::move(gens)) {}

    SemigroupRing<K> ring_;
    int tail_;
    std::map<int, Series<K>> basis_;  // pivot -> monic reduced element, truncated at tail_
    std::vector<Series<K>> gens_;
};

namespace detail {

// Insert f into the echelon map, reducing against existing pivots; returns
// the pivot of the newly inserted element, or -1 if f reduced to zero.
template <class K>
int echelon_insert(std::map<int, Series<K>>& basis, Series<K> f) {
    while (!f.is_zero()) {
        int v = *f.valuation();
        auto it = basis.find(v);
        if (it == basis.end()) {
            // make monic
            K lead = f.coeff(v);
            K one = lead.make(1);
            f = f.scaled(one / lead);
            basis.emplace(v, std::move(f));
            return v;
        }
        f.sub_scaled(f.coeff(v), it->second);
    }
    return -1;
}

}  // namespace detail

// Canonical echelon basis with certified tail.  `min_precision` forces the
// internal horizon (used by the precision-robustness tests); 0 uses the
// session registry.
template <class K>
RingIdeal<K> echelonize(const SemigroupRing<K>& ring, std::vector<Series<K>> generators,
                        int min_precision = 0) {
    const NumericalSemigroup& S = ring.semigroup();
    std::vector<Series<K>> gens;
    int max_val = 0;
    for (const auto& g : generators) {
        if (!g.is_exact())
            throw Error("ideal generators must be exact polynomials (certified coefficients)");
        for (const auto& [e, c] : g.terms())
            if (!S.contains(e))
                throw NotInRing("generator " + g.str() + " has exponent " + std::to_string(e) +
                                " outside the semigroup");
        if (g.is_zero()) continue;
        max_val = std::max(max_val, *g.valuation());
        gens.push_back(g);
    }
    if (gens.empty())
        throw PrecisionExhausted("no nonzero generators: the zero ideal has no certified tail");

    int D = std::max({ring.working_precision(), min_precision,
                      2 * (S.conductor() + max_val) + 8});
    const int m = S.min_generator();

    for (;;) {
        // Worklist closure of the generators under multiplication by t^g for
        // the semigroup generators; spans the ideal's coefficient space
        // below the horizon D.
        std::map<int, Series<K>> basis;
        std::vector<int> work;
        for (const auto& g : gens) {
            int v = detail::echelon_insert(basis, g.truncated(D));
            if (v >= 0) work.push_back(v);
        }
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            auto it = basis.find(v);
            if (it == basis.end()) continue;
            Series<K> b = it->second;
            for (int g : S.generators()) {
                if (v + g >= D) continue;
                int nv = detail::echelon_insert(basis, b.shifted(g).truncated(D));
                if (nv >= 0) work.push_back(nv);
            }
        }

        // Tail certification: tau is the least integer >= conductor with
        // every integer in [tau, tau+m) a pivot; then multiplying the pivot
        // element at v by t^m walks the run over all v >= tau.
        int tau = -1;
        for (int v = S.conductor(); v + m <= D; ++v) {
            bool run = true;
            for (int j = 0; j < m; ++j)
                if (!basis.count(v + j)) { run = false; break; }
            if (run) { tau = v; break; }
        }
        if (tau < 0) {
            D = ring.escalate(2 * D);  // throws PrecisionExhausted at the cap
            continue;
        }

        // Canonicalize below tau: back-substitute so each element is zero at
        // the other pivots, then truncate at tau.
        std::map<int, Series<K>> canon;
        for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
            if (it->first >= tau) continue;
            Series<K> b = it->second;
            for (auto& [pv, pb] : canon)
                b.sub_scaled(b.coeff(pv), pb);
            canon.emplace(it->first, b.truncated(tau));
        }
        // Re-truncate: back-substitution used tau-truncated partners, so all
        // entries are already exact below tau.
        return RingIdeal<K>(ring, tau, std::move(canon), std::move(gens));
    }
}

template <class K>
RingIdeal<K> principal_ideal(const SemigroupRing<K>& ring, const Series<K>& f) {
    return echelonize(ring, std::vector<Series<K>>{f});
}

template <class K>
RingIdeal<K> unit_ideal(const SemigroupRing<K>& ring) {
    return echelonize(ring, std::vector<Series<K>>{ring.one()});
}

template <class K>
RingIdeal<K> maximal_ideal(const SemigroupRing<K>& ring) {
    std::vector<Series<K>> gens;
    for (int g : ring.semigroup().generators()) gens.push_back(ring.monomial(g));
    if (ring.semigroup().min_generator() == 1) gens = {ring.monomial(1)};
    return echelonize(ring, gens);
}

template <class K>
RingIdeal<K> ideal_sum(const RingIdeal<K>& a, const RingIdeal<K>& b) {
    if (!a.ring().same(b.ring())) throw Error("ideal_sum: different rings");
    std::vector<Series<K>> gens = a.canonical_generators();
    for (const auto& g : b.canonical_generators()) gens.push_back(g);
    return echelonize(a.ring(), std::move(gens));
}

template <class K>
RingIdeal<K> ideal_product(const RingIdeal<K>& a, const RingIdeal<K>& b) {
    if (!a.ring().same(b.ring())) throw Error("ideal_product: different rings");
    std::vector<Series<K>> gens;
    for (const auto& f : a.canonical_generators())
        for (const auto& g : b.canonical_generators()) gens.push_back(f * g);
    return echelonize(a.ring(), std::move(gens));
}

// I^n with the convention I^n = R for n <= 0.
template <class K>
RingIdeal<K> ideal_power(const RingIdeal<K>& a, int n) {
    if (n <= 0) return unit_ideal(a.ring());
    RingIdeal<K> r = a;
    for (int i = 1; i < n; ++i) r = ideal_product(r, a);
    return r;
}

// Incrementally extended power table: powers[i] = I^i, powers[0] = R.
template <class K>
class PowerTable {
public:
    explicit PowerTable(RingIdeal<K> base) : base_(std::move(base)) {
        powers_.push_back(unit_ideal(base_.ring()));
        powers_.push_back(base_);
    }
    const RingIdeal<K>& operator[](int n) {
        if (n < 0) n = 0;
        while (static_cast<int>(powers_.size()) <= n)
            powers_.push_back(ideal_product(powers_.back(), base_));
        return powers_[static_cast<size_t>(n)];
    }
    const RingIdeal<K>& base() const { return base_; }

private:
    RingIdeal<K> base_;
    std::vector<RingIdeal<K>> powers_;
};

// A : B = { x in R : x*B subseteq A }.  Every x with valuation >= tau(A)
// qualifies; below tau(A) the membership constraints are an exact linear
// system over k solved by Gaussian elimination.
template <class K>
RingIdeal<K> ideal_colon(const RingIdeal<K>& a, const RingIdeal<K>& b) {
    if (!a.ring().same(b.ring())) throw Error("ideal_colon: different rings");
    const SemigroupRing<K>& ring = a.ring();
    const std::vector<int> unknowns = ring.semigroup().elements_below(a.tail());
    const std::vector<Series<K>> bgens = b.canonical_generators();
    const size_t ncols = unknowns.size();

    // constraint rows: residue coordinates of t^s * b_j modulo A, stacked
    // over all generators b_j of B.
    std::vector<std::vector<K>> matrix;  // row-major: constraints x unknowns
    std::vector<std::vector<K>> cols(ncols);
    for (size_t c = 0; c < ncols; ++c) {
        for (const auto& bj : bgens) {
            std::vector<K> coords = a.residue_coords(bj.shifted(unknowns[c]));
            cols[c].insert(cols[c].end(), coords.begin(), coords.end());
        }
    }
    const size_t nrows = cols.empty() ? 0 : cols[0].size();
    matrix.assign(nrows, std::vector<K>(ncols, ring.scalar(0)));
    for (size_t c = 0; c < ncols; ++c)
        for (size_t r = 0; r < nrows; ++r) matrix[r][c] = cols[c][r];

    // nullspace by column-pivot Gaussian elimination
    std::vector<int> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t p = rank;
        while (p < nrows && matrix[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(matrix[rank], matrix[p]);
        K inv = ring.scalar(1) / matrix[rank][c];
        for (size_t cc = 0; cc < ncols; ++cc) matrix[rank][cc] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            K f = matrix[r][c];
            if (f.is_zero()) continue;
            for (size_t cc = 0; cc < ncols; ++cc) matrix[r][cc] -= f * matrix[rank][cc];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<Series<K>> gens;
    for (size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;  // pivot column: dependent unknown
        // free column c: x_c = 1, pivot columns solve to -matrix[pivot][c]
        Series<K> x = ring.monomial(unknowns[c]);
        for (size_t cc = 0; cc < ncols; ++cc) {
            if (pivot_of_col[cc] < 0) continue;
            K v = matrix[static_cast<size_t>(pivot_of_col[cc])][c];
            if (!v.is_zero()) x = x + Series<K>::monomial(unknowns[cc], -v);
        }
        gens.push_back(x);
    }
    // the tail of A is always contained in the colon
    for (int v = a.tail(); v < a.tail() + ring.semigroup().min_generator(); ++v)
        gens.push_back(ring.monomial(v));
    return echelonize(ring, std::move(gens));
}

// Vector-space intersection of the two coefficient spaces below the common
// horizon max(tau(A), tau(B)); the intersection polynomials are exact
// elements of both ideals.
template <class K>
RingIdeal<K> ideal_intersect(const RingIdeal<K>& a, const RingIdeal<K>& b) {
    if (!a.ring().same(b.ring())) throw Error("ideal_intersect: different rings");
    const SemigroupRing<K>& ring = a.ring();
    const int H = std::max(a.tail(), b.tail());
    const std::vector<int> coords = ring.semigroup().elements_below(H);
    std::map<int, size_t> coord_index;
    for (size_t i = 0; i < coords.size(); ++i) coord_index[coords[i]] = i;

    auto space_basis = [&](const RingIdeal<K>& ideal) {
        std::vector<Series<K>> out;
        for (const auto& [v, e] : ideal.basis()) out.push_back(e.as_exact_polynomial());
        for (int v = ideal.tail(); v < H; ++v)
            if (ring.semigroup().contains(v)) out.push_back(ring.monomial(v));
        return out;
    };
    std::vector<Series<K>> va = space_basis(a);
    std::vector<Series<K>> vb = space_basis(b);

    // Solve sum alpha_i va_i - sum beta_j vb_j = 0; intersection vectors are
    // the alpha-parts of the nullspace.
    const size_t na = va.size(), nb = vb.size();
    const size_t ncols = na + nb;
    std::vector<std::vector<K>> matrix(coords.size(), std::vector<K>(ncols, ring.scalar(0)));
    for (size_t j = 0; j < na; ++j)
        for (const auto& [e, c] : va[j].terms()) matrix[coord_index.at(e)][j] = c;
    for (size_t j = 0; j < nb; ++j)
        for (const auto& [e, c] : vb[j].terms()) matrix[coord_index.at(e)][na + j] = -c;

    std::vector<int> pivot_of_col(ncols, -1);
    size_t rank = 0;
    const size_t nrows = matrix.size();
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t p = rank;
        while (p < nrows && matrix[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(matrix[rank], matrix[p]);
        K inv = ring.scalar(1) / matrix[rank][c];
        for (size_t cc = 0; cc < ncols; ++cc) matrix[rank][cc] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            K f = matrix[r][c];
            if (f.is_zero()) continue;
            for (size_t cc = 0; cc < ncols; ++cc) matrix[r][cc] -= f * matrix[rank][cc];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<Series<K>> gens;
    for (size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<K> alpha(na, ring.scalar(0));
        auto set = [&](size_t idx, const K& v) {
            if (idx < na) alpha[idx] = v;
        };
        set(c, ring.scalar(1));
        for (size_t cc = 0; cc < ncols; ++cc) {
            if (pivot_of_col[cc] < 0) continue;
            set(cc, -matrix[static_cast<size_t>(pivot_of_col[cc])][c]);
        }
        Series<K> x;
        for (size_t j = 0; j < na; ++j)
            if (!alpha[j].is_zero()) x = x + va[j].scaled(alpha[j]);
        if (!x.is_zero()) gens.push_back(x);
    }
    for (int v = H; v < H + ring.semigroup().min_generator(); ++v) gens.push_back(ring.monomial(v));
    return echelonize(ring, std::move(gens));
}

// lambda(B/A) for A subseteq B (containment verified).
template <class K>
long length_between(const RingIdeal<K>& a, const RingIdeal<K>& b) {
    if (!b.contains(a)) throw NotContained("length_between: first ideal not contained in second");
    return a.colength() - b.colength();
}

// mu(A) = lambda(A/mA).
template <class K>
long min_generators(const RingIdeal<K>& a) {
    RingIdeal<K> ma = ideal_product(maximal_ideal(a.ring()), a);
    return ma.colength() - a.colength();
}

// mu of (A+J)/J as a module over R/J: lambda(A+J / (mA+J)).
template <class K>
long min_generators_mod(const RingIdeal<K>& a, const RingIdeal<K>& j) {
    RingIdeal<K> num = ideal_sum(a, j);
    RingIdeal<K> den = ideal_sum(ideal_product(maximal_ideal(a.ring()), a), j);
    return den.colength() - num.colength();
}

}  // namespace agr
