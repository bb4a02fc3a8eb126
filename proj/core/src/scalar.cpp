#include "qmat/scalar.hpp"

#include <cctype>
#include <ostream>

namespace qmat {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Rational Rational::from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    require(!t.empty(), "BadScalarLiteral", "empty rational literal");
    // validate shape before handing to GMP, which is lenient about junk
    std::size_t i = 0;
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
        return p > start;
    };
    if (t[i] == '+' || t[i] == '-') ++i;
    bool ok = digits(i);
    if (ok && i < t.size() && t[i] == '/') {
        ++i;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        ok = digits(i);
    }
    require(ok && i == t.size(), "BadScalarLiteral", "malformed rational literal: " + s);
    mpq_class v;
    require(v.set_str(t, 10) == 0, "BadScalarLiteral", "malformed rational literal: " + s);
    require(sgn(v.get_den()) != 0, "DivisionByZero", "rational literal with zero denominator: " + s);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_string() const { return v_.get_str(); }

std::uint64_t Rational::hash() const { return fnv1a(to_string()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v.is_zero()) return Rational(0);
    if (sgn(v.raw()) < 0) return std::nullopt;
    const mpz_class num = v.raw().get_num();
    const mpz_class den = v.raw().get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

} // namespace qmat
