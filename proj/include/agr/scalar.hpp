#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "agr/errors.hpp"

namespace agr {

// Exact rational scalar. The default coefficient field.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(rep(num) / den) {}
    explicit Rational(rep v) : v_(std::move(v)) {}

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    // Creates field constants compatible with this value's field.
    Rational make(long n) const { return Rational(n); }

    std::string str() const { return v_.str(); }
    static std::string field_name() { return "q"; }

private:
    rep v_;
};

// Integers modulo a prime p.  The modulus travels with the value; a
// default-constructed element (or one built via make() on a default
// element) is modulus-agnostic and coerces on first combination.
class PrimeField {
public:
    PrimeField() = default;
    PrimeField(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    PrimeField(std::uint32_t p, long n) : p_(p) { v_ = norm(n, p); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint32_t modulus() const { return p_; }

    PrimeField operator-() const { return with(p_, p_ ? (v_ ? p_ - v_ : 0) : -v_); }
    PrimeField& operator+=(const PrimeField& o) { fuse(o); v_ = norm(v_ + o.v_, p_); return *this; }
    PrimeField& operator-=(const PrimeField& o) { fuse(o); v_ = norm(v_ - o.v_, p_); return *this; }
    PrimeField& operator*=(const PrimeField& o) { fuse(o); v_ = norm(v_ * o.v_, p_); return *this; }
    PrimeField& operator/=(const PrimeField& o) {
        fuse(o);
        if (o.v_ == 0) throw Error("prime field division by zero");
        if (p_ == 0) {
            if (v_ % o.v_ != 0) throw Error("prime field division without resolved modulus");
            v_ /= o.v_;
            return *this;
        }
        v_ = norm(v_ * inverse(norm(o.v_, p_), p_), p_);
        return *this;
    }
    friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw FieldMismatch("comparing elements of GF(p) with different p");
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return norm(a.v_, p) == norm(b.v_, p);
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

    PrimeField make(long n) const { return p_ ? PrimeField(p_, n) : PrimeField(n); }

    std::string str() const { return std::to_string(v_); }
    static std::string field_name() { return "gf"; }

private:
    static std::int64_t norm(std::int64_t v, std::uint32_t p) {
        if (p == 0) return v;
        v %= static_cast<std::int64_t>(p);
        return v < 0 ? v + p : v;
    }
    static std::int64_t inverse(std::int64_t a, std::uint32_t p) {
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw Error("modulus is not prime");
        return t < 0 ? t + p : t;
    }
    static PrimeField with(std::uint32_t p, std::int64_t v) {
        PrimeField r;
        r.p_ = p;
        r.v_ = norm(v, p);
        return r;
    }
    void fuse(const PrimeField& o) {
        if (p_ == 0) {
            p_ = o.p_;
            v_ = norm(v_, p_);
        } else if (o.p_ != 0 && o.p_ != p_) {
            throw FieldMismatch("mixing GF(" + std::to_string(p_) + ") with GF(" + std::to_string(o.p_) + ")");
        }
    }

    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;  // 0: modulus not yet resolved
};

}  // namespace agr
