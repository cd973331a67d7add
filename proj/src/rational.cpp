#include "graphstat/rational.hpp"

#include <cctype>

#include "graphstat/errors.hpp"

namespace graphstat {

std::string rat_str(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// Explicit digit accumulation; BigInt's string constructor would read a
// leading zero as an octal prefix.
BigInt parse_digits(const std::string& s, const std::string& whole) {
    if (s.empty()) throw invalid_input("BadRational", "missing digits in '" + whole + "'");
    BigInt value(0);
    for (char c : s) {
        if (c < '0' || c > '9')
            throw invalid_input("BadRational", "cannot parse rational '" + whole + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_input("BadRational", "empty rational literal");
    std::string body = s;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    Rational result;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        BigInt num = parse_digits(body.substr(0, slash), s);
        BigInt den = parse_digits(body.substr(slash + 1), s);
        if (den == 0) throw invalid_input("BadRational", "zero denominator in '" + s + "'");
        result = Rational(num, den);
    } else if (dot != std::string::npos) {
        std::string frac = body.substr(dot + 1);
        std::string digits = body.substr(0, dot) + frac;
        BigInt num = parse_digits(digits, s);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        result = Rational(num, den);
    } else {
        result = Rational(parse_digits(body, s));
    }
    if (negative) result = -result;
    return result;
}

double rat_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace graphstat
