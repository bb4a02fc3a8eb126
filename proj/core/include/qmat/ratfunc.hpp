#pragma once

#include <string>
#include <utility>

#include "qmat/poly.hpp"
#include "qmat/rational.hpp"

namespace qmat {

using PolyQ = Poly<Rational>;

/// Rational function in one symbolic variable q over the rationals.
/// Canonical form: numerator and denominator coprime, denominator monic,
/// zero stored as 0/1. This is the symbolic scalar backend.
class RatFunc {
public:
    RatFunc() : num_(), den_(PolyQ::one()) {}
    RatFunc(long n) : num_(PolyQ::constant(Rational(n))), den_(PolyQ::one()) {}
    explicit RatFunc(const Rational& r)
        : num_(PolyQ::constant(r)), den_(PolyQ::one()) {}
    RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), "DivisionByZero", "rational function with zero denominator");
        normalize();
    }

    /// The generator q itself.
    static RatFunc var() { return RatFunc(PolyQ::var(), PolyQ::one()); }
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }

    /// Parses "(poly)/(poly)", a bare polynomial, or a bare rational.
    static RatFunc from_string(const std::string& s);
    std::string to_string() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    /// The constant value, when this is in fact constant.
    Rational constant_value() const {
        require(is_constant(), "NotConstant", "symbolic scalar where a constant was required");
        return num_.coeff(0);
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    RatFunc operator-() const { return RatFunc(-num_, den_, NoNormalize{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        require(!b.is_zero(), "DivisionByZero", "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        require(!is_zero(), "DivisionByZero", "inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::uint64_t hash() const;

private:
    struct NoNormalize {};
    RatFunc(PolyQ num, PolyQ den, NoNormalize)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyQ::one();
            return;
        }
        PolyQ g = PolyQ::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    PolyQ num_;
    PolyQ den_;
};

} // namespace qmat
