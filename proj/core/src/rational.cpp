#include "piquant/rational.hpp"

#include "piquant/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace piquant {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("non-finite value has no rational representation");
    }
    if (x == 0.0) {
        return Rational(0);
    }
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    // 53 doublings make the mantissa integral
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp > 0) {
        r *= Rational(Integer(1) << exp);
    } else if (exp < 0) {
        r /= Rational(Integer(1) << -exp);
    }
    return r;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
    if (text.empty()) {
        throw ParseError("empty integer", offset);
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw ParseError("sign without digits", offset);
    }
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("invalid digit '" + std::string(1, text[i]) + "'", offset + i);
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

// Decimal literal with optional fraction and exponent, converted exactly.
Rational parse_decimal(std::string_view text) {
    const std::size_t epos = text.find_first_of("eE");
    long long exp10 = 0;
    if (epos != std::string_view::npos) {
        const Integer e = parse_integer(text.substr(epos + 1), epos + 1);
        exp10 = e.convert_to<long long>();
        text = text.substr(0, epos);
    }
    const std::size_t dot = text.find('.');
    std::string digits;
    if (dot == std::string_view::npos) {
        digits = std::string(text);
    } else {
        digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
        exp10 -= static_cast<long long>(text.size() - dot - 1);
    }
    Rational r(parse_integer(digits, 0));
    Integer pow10 = 1;
    for (long long i = 0; i < std::llabs(exp10); ++i) {
        pow10 *= 10;
    }
    if (exp10 > 0) {
        r *= Rational(pow10);
    } else if (exp10 < 0) {
        r /= Rational(pow10);
    }
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty rational literal", 0);
    }
    const std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash), 0);
        const Integer den = parse_integer(text.substr(slash + 1), slash + 1);
        if (den == 0) {
            throw ParseError("zero denominator", slash + 1);
        }
        return Rational(num, den);
    }
    if (text.find('.') != std::string_view::npos ||
        text.find_first_of("eE") != std::string_view::npos) {
        return parse_decimal(text);
    }
    return Rational(parse_integer(text, 0));
}

std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += "/" + denominator(q).str();
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_double_12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace piquant
