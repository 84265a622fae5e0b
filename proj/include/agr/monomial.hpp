#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "agr/errors.hpp"

namespace agr {

using Exponents = std::vector<int>;

inline bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_sum(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// A monomial ideal in k[x_1..x_n] given by its minimal generators (an
// antichain under componentwise divisibility).
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Exponents> generators) : n_(nvars) {
        for (const auto& g : generators)
            if (static_cast<int>(g.size()) != n_) throw Error("monomial exponent arity mismatch");
        gens_ = minimalize(std::move(generators));
    }
    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
    static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Exponents(static_cast<size_t>(nvars), 0)}); }

    int nvars() const { return n_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const {
        return gens_.size() == 1 &&
               std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
    }

    bool contains(const Exponents& m) const {
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }
    bool contains(const MonomialIdeal& o) const {
        for (const auto& g : o.gens_)
            if (!contains(g)) return false;
        return true;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && std::set<Exponents>(a.gens_.begin(), a.gens_.end()) ==
                                   std::set<Exponents>(b.gens_.begin(), b.gens_.end());
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

    friend MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
        std::vector<Exponents> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return MonomialIdeal(a.n_, std::move(g));
    }
    friend MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
        std::vector<Exponents> g;
        for (const auto& x : a.gens_)
            for (const auto& y : b.gens_) g.push_back(exp_sum(x, y));
        return MonomialIdeal(a.n_, std::move(g));
    }
    friend MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
        std::vector<Exponents> g;
        for (const auto& x : a.gens_)
            for (const auto& y : b.gens_) g.push_back(exp_lcm(x, y));
        return MonomialIdeal(a.n_, std::move(g));
    }
    // A : b for a single monomial b, then A : B = intersection over gens(B).
    friend MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
        if (b.is_zero()) return MonomialIdeal::unit(a.n_);
        std::optional<MonomialIdeal> acc;
        for (const auto& y : b.gens_) {
            std::vector<Exponents> g;
            for (const auto& x : a.gens_) {
                Exponents l = exp_lcm(x, y);
                for (size_t i = 0; i < l.size(); ++i) l[i] -= y[i];
                g.push_back(std::move(l));
            }
            MonomialIdeal part(a.n_, std::move(g));
            acc = acc ? mono_intersect(*acc, part) : part;
        }
        return *acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (gens_.empty()) return "(0)";
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) os << ", ";
            os << monomial_str(gens_[i], names);
        }
        os << ")";
        return os.str();
    }
    static std::string monomial_str(const Exponents& m, const std::vector<std::string>& names) {
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        return any ? os.str() : "1";
    }

private:
    static std::vector<Exponents> minimalize(std::vector<Exponents> g) {
        // descending lex keeps the leading variable first, so str() prints
        // (x^2, y^3) rather than an input-order accident
        std::sort(g.begin(), g.end(), std::greater<>());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        std::vector<Exponents> out;
        for (size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < g.size() && !redundant; ++j)
                if (j != i && divides(g[j], g[i]) && !(g[j] == g[i] && j > i)) redundant = true;
            if (!redundant) out.push_back(g[i]);
        }
        return out;
    }

    int n_;
    std::vector<Exponents> gens_;
};

// k[x_1..x_n]/H for a monomial ideal H.  Ideals of the quotient are carried
// as ambient monomial ideals containing H; all calculus happens on A+H in
// the ambient polynomial ring.
class MonomialQuotientRing {
public:
    MonomialQuotientRing(std::vector<std::string> names, MonomialIdeal relations)
        : names_(std::move(names)), h_(std::move(relations)) {
        if (static_cast<int>(names_.size()) != h_.nvars())
            throw Error("variable count does not match relation ideal");
    }
    static MonomialQuotientRing polynomial_ring(std::vector<std::string> names) {
        int n = static_cast<int>(names.size());
        return MonomialQuotientRing(std::move(names), MonomialIdeal::zero(n));
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const MonomialIdeal& relations() const { return h_; }

    // Canonical representative of an ideal of the quotient: A + H.
    MonomialIdeal lift(const MonomialIdeal& a) const { return mono_sum(a, h_); }

    MonomialIdeal maximal() const {
        std::vector<Exponents> g;
        for (int i = 0; i < nvars(); ++i) {
            Exponents e(static_cast<size_t>(nvars()), 0);
            e[static_cast<size_t>(i)] = 1;
            g.push_back(std::move(e));
        }
        return lift(MonomialIdeal(nvars(), std::move(g)));
    }

private:
    std::vector<std::string> names_;
    MonomialIdeal h_;
};

// Standard monomials outside A+H, i.e. lambda(R/(A+H)/H...) = length of the
// quotient (R/H)/((A+H)/H); nullopt when the staircase complement is
// unbounded (Infinite is a first-class result, not an error).
inline std::optional<long> mono_length(const MonomialIdeal& a, const MonomialQuotientRing& ring) {
    MonomialIdeal lifted = ring.lift(a);
    const int n = ring.nvars();
    // finite complement iff every variable has a pure power in the ideal
    std::vector<int> box(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (const auto& g : lifted.generators()) {
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i && g[static_cast<size_t>(j)] > 0) { pure = false; break; }
            if (pure) {
                int e = g[static_cast<size_t>(i)];
                if (box[static_cast<size_t>(i)] < 0 || e < box[static_cast<size_t>(i)])
                    box[static_cast<size_t>(i)] = e;
            }
        }
        if (box[static_cast<size_t>(i)] < 0) return std::nullopt;
    }
    long count = 0;
    Exponents m(static_cast<size_t>(n), 0);
    // enumerate the box [0,box_1) x ... x [0,box_n)
    for (;;) {
        if (!lifted.contains(m)) ++count;
        int i = 0;
        while (i < n) {
            if (++m[static_cast<size_t>(i)] < box[static_cast<size_t>(i)]) break;
            m[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

inline long mono_length_or_throw(const MonomialIdeal& a, const MonomialQuotientRing& ring) {
    auto l = mono_length(a, ring);
    if (!l) throw InfiniteLength("staircase complement is unbounded");
    return *l;
}

// Minimal generators of (A+H)/H: generators of A+H outside H and outside
// m*(A+H) + H.
inline std::vector<Exponents> mono_min_generator_list(const MonomialIdeal& a,
                                                      const MonomialQuotientRing& ring) {
    MonomialIdeal lifted = ring.lift(a);
    MonomialIdeal frame = mono_sum(mono_product(ring.maximal(), lifted), ring.relations());
    std::vector<Exponents> out;
    for (const auto& g : lifted.generators()) {
        if (ring.relations().contains(g)) continue;
        if (frame.contains(g)) continue;
        out.push_back(g);
    }
    return out;
}

inline long mono_min_generators(const MonomialIdeal& a, const MonomialQuotientRing& ring) {
    return static_cast<long>(mono_min_generator_list(a, ring).size());
}

}  // namespace agr
