#include <cctype>
#include <string>
#include <vector>

#include "qmat/ratfunc.hpp"
#include "qmat/scalar.hpp"

// Literal syntax for the symbolic backend:
//   scalar  := "(" poly ")/(" poly ")" | poly | rational
//   poly    := term ("+" term | "-" term)*
//   term    := rational | [rational "*"] "q" ["^" uint] | "-" term
// Printing always emits the "(poly)/(poly)" form with ascending powers,
// so parse(print(x)) == x exactly.

namespace qmat {
namespace {

std::string strip_ws(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    return t;
}

PolyQ parse_term(const std::string& term, const std::string& orig) {
    require(!term.empty(), "BadScalarLiteral", "empty term in polynomial: " + orig);
    if (term[0] == '-') {
        return -parse_term(term.substr(1), orig);
    }
    std::size_t qpos = term.find('q');
    if (qpos == std::string::npos) {
        return PolyQ::constant(Rational::from_string(term));
    }
    Rational coeff = Rational::one();
    if (qpos > 0) {
        require(term[qpos - 1] == '*', "BadScalarLiteral",
                "expected '*' before q in term of: " + orig);
        coeff = Rational::from_string(term.substr(0, qpos - 1));
    }
    long exp = 1;
    std::size_t rest = qpos + 1;
    if (rest < term.size()) {
        require(term[rest] == '^', "BadScalarLiteral", "expected '^' after q in: " + orig);
        std::string e = term.substr(rest + 1);
        require(!e.empty() && e.find_first_not_of("0123456789") == std::string::npos,
                "BadScalarLiteral", "malformed exponent in: " + orig);
        exp = std::stol(e);
    }
    std::vector<Rational> c(static_cast<std::size_t>(exp) + 1, Rational::zero());
    c.back() = coeff;
    return PolyQ(std::move(c));
}

PolyQ parse_poly(const std::string& text, const std::string& orig) {
    require(!text.empty(), "BadScalarLiteral", "empty polynomial in: " + orig);
    PolyQ acc;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= text.size(); ++i) {
        bool split = false;
        if (i < text.size()) {
            char c = text[i];
            char prev = text[i - 1];
            if (c == '+') split = true;
            // a '-' starts a new term unless it is a sign after an operator
            if (c == '-' && prev != '+' && prev != '-' && prev != '*' && prev != '/' &&
                prev != '^')
                split = true;
        } else {
            split = true;
        }
        if (!split) continue;
        std::string piece = text.substr(start, i - start);
        if (!piece.empty() && piece[0] == '+') piece = piece.substr(1);
        acc = acc + parse_term(piece, orig);
        start = (i < text.size() && text[i] == '+') ? i + 1 : i;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::from_string(const std::string& s) {
    std::string t = strip_ws(s);
    require(!t.empty(), "BadScalarLiteral", "empty scalar literal");
    if (t[0] == '(') {
        std::size_t mid = t.find(")/(");
        require(mid != std::string::npos && t.back() == ')', "BadScalarLiteral",
                "malformed rational function literal: " + s);
        PolyQ num = parse_poly(t.substr(1, mid - 1), s);
        PolyQ den = parse_poly(t.substr(mid + 3, t.size() - mid - 4), s);
        require(!den.is_zero(), "DivisionByZero", "zero denominator in: " + s);
        return RatFunc(std::move(num), std::move(den));
    }
    if (t.find('q') != std::string::npos) return RatFunc(parse_poly(t, s), PolyQ::one());
    return RatFunc(Rational::from_string(t));
}

std::string RatFunc::to_string() const {
    return "(" + num_.to_string("q") + ")/(" + den_.to_string("q") + ")";
}

std::uint64_t RatFunc::hash() const { return fnv1a(to_string()); }

} // namespace qmat
