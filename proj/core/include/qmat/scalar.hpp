#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "qmat/error.hpp"
#include "qmat/ratfunc.hpp"
#include "qmat/rational.hpp"

namespace qmat {

/// Requirements on a scalar field backend. Rational and RatFunc model this.
template <class K>
concept ScalarField = requires(const K a, const K b) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.to_string() } -> std::same_as<std::string>;
    { K::from_string(std::string{}) } -> std::same_as<K>;
};

template <ScalarField K>
K scalar_from_long(long v) {
    K acc = K::zero();
    K one = K::one();
    bool neg = v < 0;
    unsigned long mag = neg ? -static_cast<unsigned long>(v) : static_cast<unsigned long>(v);
    for (unsigned long i = 0; i < mag; ++i) acc = acc + one;
    return neg ? -acc : acc;
}

/// x^e for integer e, negative exponents via the field inverse.
template <ScalarField K>
K scalar_pow(const K& x, long e) {
    if (e < 0) return scalar_pow(x.inverse(), -e);
    K acc = K::one();
    K base = x;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

/// [n]_q = 1 + q + ... + q^{n-1} for n >= 0; [-n]_q = -q^{-n} [n]_q.
/// The power-sum form makes q = 1 give the ordinary integer n.
template <ScalarField K>
K quantum_integer(const K& q, long n) {
    if (n < 0) return -(scalar_pow(q, n) * quantum_integer(q, -n));
    K acc = K::zero();
    K pw = K::one();
    for (long i = 0; i < n; ++i) {
        acc = acc + pw;
        pw = pw * q;
    }
    return acc;
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
template <ScalarField K>
K quantum_factorial(const K& q, long n) {
    K acc = K::one();
    for (long k = 2; k <= n; ++k) acc = acc * quantum_integer(q, k);
    return acc;
}

/// Checks [n]_q != 0 for n = 2..max_degree. A failing n means the Hecke
/// parameter is degenerate at that degree and block machinery would divide
/// by zero downstream.
template <ScalarField K>
CheckResult field_check_parameter(const K& q, long max_degree) {
    if (q.is_zero()) return CheckResult::failure("DegenerateParameter: q = 0");
    for (long n = 2; n <= max_degree; ++n) {
        if (quantum_integer(q, n).is_zero())
            return CheckResult::failure("DegenerateParameter: [" + std::to_string(n) +
                                        "]_q = 0 at q = " + q.to_string());
    }
    return CheckResult::pass();
}

template <ScalarField K>
void require_parameter(const K& q, long max_degree) {
    CheckResult r = field_check_parameter(q, max_degree);
    require(r.ok, "DegenerateParameter", r.detail);
}

/// Exact square root of a rational, if one exists. Used to recover the
/// operator parameter p from a backend value q = p^2.
std::optional<Rational> rational_sqrt(const Rational& v);

/// Parses either rational ("a/b") or rational-function ("(...)/(...)",
/// possibly a bare polynomial) literals; see the concrete from_string docs.
/// Kept here so both backends share one set of literal tests.
std::uint64_t fnv1a(const std::string& s);

} // namespace qmat
