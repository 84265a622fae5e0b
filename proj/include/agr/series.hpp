#pragma once

#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "agr/errors.hpp"

namespace agr {

// A power series in t with exact coefficients, known up to a precision
// horizon: coefficients of t^e for e >= precision() are unknown.  A series
// with precision kExact is an exact polynomial.  Zero coefficients are never
// stored.  Values are immutable in spirit: all operations return new series.
template <class K>
class Series {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    Series() = default;
    explicit Series(int precision) : prec_(precision) {}

    static Series monomial(int exponent, K coeff, int precision = kExact) {
        Series s(precision);
        if (!coeff.is_zero() && exponent < precision) s.terms_.emplace(exponent, std::move(coeff));
        return s;
    }
    static Series constant(K coeff) { return monomial(0, std::move(coeff)); }

    int precision() const { return prec_; }
    const std::map<int, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }  // zero within precision
    bool is_exact() const { return prec_ >= kExact; }

    // Least exponent with nonzero coefficient; nullopt when zero within
    // precision.
    std::optional<int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    // Valuation lower bound used by the precision calculus: a series that is
    // zero within precision is only known to have valuation >= precision.
    int valuation_floor() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

    K coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    Series truncated(int precision) const {
        Series r(std::min(prec_, precision));
        for (const auto& [e, c] : terms_)
            if (e < r.prec_) r.terms_.emplace(e, c);
        return r;
    }

    // Reinterprets the stored terms as an exact polynomial.  Only valid when
    // the dropped tail is known to be irrelevant (e.g. a canonical basis
    // element truncated at the certified tail degree).
    Series as_exact_polynomial() const {
        Series r(kExact);
        r.terms_ = terms_;
        return r;
    }

    Series operator-() const {
        Series r(prec_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.prec_, b.prec_));
        r.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        r.drop_beyond();
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        long p = std::min<long>(static_cast<long>(a.prec_) + b.valuation_floor(),
                                static_cast<long>(b.prec_) + a.valuation_floor());
        Series r(static_cast<int>(std::min<long>(p, kExact)));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb >= r.prec_) continue;
                r.add_term(ea + eb, ca * cb);
            }
        return r;
    }

    Series scaled(const K& c) const {
        Series r(prec_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    Series shifted(int d) const {  // multiply by t^d
        Series r(prec_ >= kExact ? kExact : prec_ + d);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + d, c);
        return r;
    }

    // this -= c * other, in place; precision tightened to the common horizon.
    void sub_scaled(const K& c, const Series& other) {
        prec_ = std::min(prec_, other.prec_);
        if (!c.is_zero())
            for (const auto& [e, k] : other.terms_) add_term(e, -(c * k));
        drop_beyond();
    }

    // Equality compares coefficients below the common precision horizon only
    // when both are exact; exact polynomials compare exactly.
    friend bool operator==(const Series& a, const Series& b) {
        return a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    std::string str(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (e == 0) {
                os << cs;
            } else {
                if (cs != "1") os << cs << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(int e, K c) {
        if (e >= prec_ || c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void drop_beyond() {
        terms_.erase(terms_.lower_bound(prec_), terms_.end());
    }

    std::map<int, K> terms_;
    int prec_ = kExact;
};

}  // namespace agr
