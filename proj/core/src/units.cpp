#include "piquant/units.hpp"

#include "piquant/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace piquant {

namespace {

enum class Tok { End, Atom, Number, Dot, Slash, Caret, Minus, Plus, LParen, RParen };

struct Token {
    Tok kind = Tok::End;
    std::string_view text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
            ++i_;
        }
        current_.pos = i_;
        if (i_ >= src_.size()) {
            current_ = {Tok::End, {}, i_};
            return;
        }
        const char c = src_[i_];
        switch (c) {
        case '.':
        case '*': current_ = {Tok::Dot, src_.substr(i_, 1), i_}; ++i_; return;
        case '/': current_ = {Tok::Slash, src_.substr(i_, 1), i_}; ++i_; return;
        case '^': current_ = {Tok::Caret, src_.substr(i_, 1), i_}; ++i_; return;
        case '-': current_ = {Tok::Minus, src_.substr(i_, 1), i_}; ++i_; return;
        case '+': current_ = {Tok::Plus, src_.substr(i_, 1), i_}; ++i_; return;
        case '(': current_ = {Tok::LParen, src_.substr(i_, 1), i_}; ++i_; return;
        case ')': current_ = {Tok::RParen, src_.substr(i_, 1), i_}; ++i_; return;
        default: break;
        }
        // "·" (U+00B7) is the product operator
        if (static_cast<unsigned char>(c) == 0xC2 && i_ + 1 < src_.size() &&
            static_cast<unsigned char>(src_[i_ + 1]) == 0xB7) {
            current_ = {Tok::Dot, src_.substr(i_, 2), i_};
            i_ += 2;
            return;
        }
        if (is_digit(c)) {
            lex_number();
            return;
        }
        lex_atom();
    }

    void lex_number() {
        const std::size_t start = i_;
        while (i_ < src_.size() && is_digit(src_[i_])) {
            ++i_;
        }
        if (i_ + 1 < src_.size() && src_[i_] == '.' && is_digit(src_[i_ + 1])) {
            ++i_;
            while (i_ < src_.size() && is_digit(src_[i_])) {
                ++i_;
            }
        }
        if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) {
                ++j;
            }
            if (j < src_.size() && is_digit(src_[j])) {
                i_ = j;
                while (i_ < src_.size() && is_digit(src_[i_])) {
                    ++i_;
                }
            }
        }
        current_ = {Tok::Number, src_.substr(start, i_ - start), start};
    }

    void lex_atom() {
        const std::size_t start = i_;
        while (i_ < src_.size()) {
            const char c = src_[i_];
            if (std::isspace(static_cast<unsigned char>(c)) ||
                std::string_view(".*/^-+()").find(c) != std::string_view::npos) {
                break;
            }
            if (static_cast<unsigned char>(c) == 0xC2 && i_ + 1 < src_.size() &&
                static_cast<unsigned char>(src_[i_ + 1]) == 0xB7) {
                break;
            }
            ++i_;
        }
        current_ = {Tok::Atom, src_.substr(start, i_ - start), start};
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token current_;
};

double parse_number_token(const Token& t) {
    double value = 0.0;
    const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
        throw ParseError("invalid numeric literal '" + std::string(t.text) + "'", t.pos);
    }
    return value;
}

bool is_integer_literal(std::string_view text) {
    return text.find_first_not_of("0123456789") == std::string_view::npos && !text.empty();
}

Integer integer_of(const Token& t) {
    if (!is_integer_literal(t.text)) {
        throw ParseError("malformed exponent '" + std::string(t.text) + "'", t.pos);
    }
    return Integer(std::string(t.text));
}

} // namespace

class UnitExprParser {
public:
    UnitExprParser(const UnitRegistry& reg, std::string_view src) : reg_(reg), lex_(src) {}

    ParsedUnit parse() {
        if (lex_.peek().kind == Tok::End) {
            return {Dimension::zero(reg_.basis()), 1.0}; // empty means dimensionless
        }
        ParsedUnit out = parse_expr();
        if (lex_.peek().kind != Tok::End) {
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        }
        return out;
    }

private:
    ParsedUnit parse_expr() {
        ParsedUnit acc = parse_term();
        for (;;) {
            const Tok k = lex_.peek().kind;
            if (k == Tok::Dot) {
                lex_.next();
                const ParsedUnit rhs = parse_term();
                acc = {acc.dimension + rhs.dimension, acc.factor * rhs.factor};
            } else if (k == Tok::Slash) {
                lex_.next();
                const ParsedUnit rhs = parse_term();
                acc = {acc.dimension - rhs.dimension, acc.factor / rhs.factor};
            } else {
                break;
            }
        }
        return acc;
    }

    ParsedUnit parse_term() {
        ParsedUnit base = parse_primary();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.next();
            const Rational q = parse_exponent();
            base = {base.dimension.scaled(q), std::pow(base.factor, to_double(q))};
        }
        return base;
    }

    ParsedUnit parse_primary() {
        const Token t = lex_.next();
        switch (t.kind) {
        case Tok::LParen: {
            ParsedUnit inner = parse_expr();
            const Token close = lex_.next();
            if (close.kind != Tok::RParen) {
                throw ParseError("expected ')'", close.pos);
            }
            return inner;
        }
        case Tok::Number: {
            const double v = parse_number_token(t);
            if (!(v > 0.0)) {
                throw ParseError("numeric factor must be positive", t.pos);
            }
            return {Dimension::zero(reg_.basis()), v};
        }
        case Tok::Atom: {
            auto [unit, prefix_factor] = reg_.resolve_atom(t.text, t.pos);
            return {unit->dimension, prefix_factor * unit->si_factor};
        }
        default:
            throw ParseError("expected a unit symbol", t.pos);
        }
    }

    Rational parse_exponent() {
        if (lex_.peek().kind == Tok::LParen) {
            lex_.next();
            const Rational q = parse_signed_rational();
            const Token close = lex_.next();
            if (close.kind != Tok::RParen) {
                throw ParseError("expected ')' after exponent", close.pos);
            }
            return q;
        }
        return parse_signed_rational();
    }

    Rational parse_signed_rational() {
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
            negative = lex_.next().kind == Tok::Minus;
        }
        const Token num_tok = lex_.next();
        if (num_tok.kind != Tok::Number) {
            throw ParseError("malformed exponent", num_tok.pos);
        }
        Integer num = integer_of(num_tok);
        Integer den = 1;
        // "^3/2" consumes the slash only when an integer follows
        if (lex_.peek().kind == Tok::Slash) {
            Lexer saved = lex_;
            lex_.next();
            if (lex_.peek().kind == Tok::Number && is_integer_literal(lex_.peek().text)) {
                den = integer_of(lex_.next());
                if (den == 0) {
                    throw ParseError("zero denominator in exponent", num_tok.pos);
                }
            } else {
                lex_ = saved;
            }
        }
        Rational q(num, den);
        return negative ? Rational(-q) : q;
    }

    const UnitRegistry& reg_;
    Lexer lex_;
};

UnitRegistry::UnitRegistry(Basis basis, std::vector<UnitDef> units, std::vector<PrefixDef> prefixes)
    : basis_(std::move(basis)), units_(std::move(units)), prefixes_(std::move(prefixes)) {
    for (std::size_t i = 0; i < units_.size(); ++i) {
        if (!unit_index_.emplace(units_[i].symbol, i).second) {
            throw DomainError("duplicate unit symbol '" + units_[i].symbol + "'");
        }
        if (!(units_[i].si_factor > 0.0)) {
            throw DomainError("unit '" + units_[i].symbol + "' has a nonpositive factor");
        }
    }
    // base units must be registered one-hot with factor 1
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto it = unit_index_.find(basis_.symbols()[i]);
        if (it == unit_index_.end()) {
            throw DomainError("base unit '" + basis_.symbols()[i] + "' is not registered");
        }
        const UnitDef& def = units_[it->second];
        if (def.si_factor != 1.0 || !(def.dimension == Dimension::base(basis_, i))) {
            throw DomainError("base unit '" + def.symbol + "' must be one-hot with factor 1");
        }
    }
    // Ambiguous prefix splits resolve longest-unit-symbol-first, i.e. the
    // shortest matching prefix wins ("dau" is deci + au, not deca + u).
    prefixes_by_length_.resize(prefixes_.size());
    for (std::size_t i = 0; i < prefixes_.size(); ++i) {
        prefixes_by_length_[i] = i;
    }
    std::stable_sort(prefixes_by_length_.begin(), prefixes_by_length_.end(),
                     [this](std::size_t a, std::size_t b) {
                         return prefixes_[a].symbol.size() < prefixes_[b].symbol.size();
                     });
}

const UnitRegistry& UnitRegistry::standard() {
    static const UnitRegistry reg = from_json(detail::builtin_units_json());
    return reg;
}

UnitRegistry UnitRegistry::from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid registry JSON: ") + e.what(), 0);
    }
    try {
        Basis basis(j.at("base").get<std::vector<std::string>>());
        std::vector<PrefixDef> prefixes;
        for (const auto& p : j.at("prefixes")) {
            prefixes.push_back({p.at("symbol").get<std::string>(),
                                p.at("name").get<std::string>(), p.at("factor").get<double>()});
        }
        std::vector<UnitDef> units;
        for (const auto& u : j.at("units")) {
            std::vector<Rational> exps;
            for (const auto& e : u.at("exponents")) {
                if (e.is_string()) {
                    exps.push_back(parse_rational(e.get<std::string>()));
                } else {
                    exps.push_back(Rational(e.get<long long>()));
                }
            }
            units.push_back({u.at("symbol").get<std::string>(), u.at("name").get<std::string>(),
                             Dimension(basis, std::move(exps)), u.at("factor").get<double>()});
        }
        return UnitRegistry(std::move(basis), std::move(units), std::move(prefixes));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid registry data: ") + e.what(), 0);
    }
}

const UnitDef& UnitRegistry::lookup(std::string_view symbol) const {
    const auto it = unit_index_.find(symbol);
    if (it == unit_index_.end()) {
        throw LookupError("unknown unit symbol '" + std::string(symbol) + "'");
    }
    return units_[it->second];
}

bool UnitRegistry::has_unit(std::string_view symbol) const {
    return unit_index_.find(symbol) != unit_index_.end();
}

std::pair<const UnitDef*, double> UnitRegistry::resolve_atom(std::string_view token,
                                                             std::size_t position) const {
    if (const auto it = unit_index_.find(token); it != unit_index_.end()) {
        return {&units_[it->second], 1.0};
    }
    for (const std::size_t pi : prefixes_by_length_) {
        const PrefixDef& p = prefixes_[pi];
        if (token.size() > p.symbol.size() && token.starts_with(p.symbol)) {
            const auto it = unit_index_.find(token.substr(p.symbol.size()));
            if (it != unit_index_.end()) {
                return {&units_[it->second], p.factor};
            }
        }
    }
    throw LookupError("unknown unit symbol '" + std::string(token) + "' (at position " +
                      std::to_string(position) + ")");
}

ParsedUnit UnitRegistry::parse(std::string_view expr) const {
    return UnitExprParser(*this, expr).parse();
}

Quantity UnitRegistry::quantity_of(double value, std::string_view expr) const {
    const ParsedUnit u = parse(expr);
    return Quantity(value * u.factor, u.dimension);
}

std::string UnitRegistry::format(const ParsedUnit& unit) const {
    std::vector<std::string> parts;
    if (unit.factor != 1.0) {
        parts.push_back(format_double(unit.factor));
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational& q = unit.dimension[i];
        if (q == 0) {
            continue;
        }
        std::string part = basis_.symbols()[i];
        if (q != 1) {
            if (denominator(q) == 1) {
                part += "^" + numerator(q).str();
            } else {
                part += "^(" + format_rational(q) + ")";
            }
        }
        parts.push_back(std::move(part));
    }
    if (parts.empty()) {
        return "1";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += "." + parts[i];
    }
    return out;
}

} // namespace piquant
