#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

/// Dense univariate polynomial over a field K.
/// Invariant: coefficients ascend by degree and the vector carries no
/// trailing zeros, so the zero polynomial is the empty vector.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly one() { return constant(K::one()); }
    static Poly var() { return Poly(std::vector<K>{K::zero(), K::one()}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& leading() const {
        require(!is_zero(), "DivisionByZero", "leading coefficient of zero polynomial");
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i > degree()) return K::zero();
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K eval(const K& x) const {
        K acc = K::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (auto& v : r.c_) v = s * v;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
        Poly r = a;
        std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                         K::zero());
        K lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            K f = r.leading() * lead_inv;
            q[static_cast<std::size_t>(shift)] = f;
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    /// Monic gcd. Remainders are monicized at each step to tame growth.
    static Poly gcd(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly r = (a % b).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        return ((a * b) / gcd(a, b)).monic();
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int i = 0; i <= degree(); ++i) {
            const K& v = c_[static_cast<std::size_t>(i)];
            if (v.is_zero()) continue;
            if (!first) out += " + ";
            if (i == 0) {
                out += v.to_string();
            } else {
                if (!v.is_one()) out += v.to_string() + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
            first = false;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

} // namespace qmat
