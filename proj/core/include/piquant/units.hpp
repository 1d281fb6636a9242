#pragma once

#include "piquant/quantity.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace piquant {

struct UnitDef {
    std::string symbol;
    std::string name;
    Dimension dimension;
    double si_factor; // value of one unit in unprefixed SI base units
};

struct PrefixDef {
    std::string symbol;
    std::string name;
    double factor; // power of ten
};

/// Result of parsing a unit expression: the combined dimension and the
/// conversion multiplier to the SI base representation.
struct ParsedUnit {
    Dimension dimension;
    double factor;
};

/// Immutable symbol table for units and prefixes, plus the unit-expression
/// parser. Built once from declarative data, then read-only.
///
/// Expression grammar (EBNF in docs/unit-grammar.ebnf):
///   expr  = term { ("." | "*" | "·") term | "/" term } ;
///   term  = primary [ "^" exponent ] ;
///   primary = atom | number | "(" expr ")" ;
///   atom  = [prefix] symbol ;   resolved longest-full-symbol-first
///   exponent = int | int "/" uint | "(" rational ")" ;
class UnitRegistry {
public:
    /// Registry over the bundled SI table data.
    static const UnitRegistry& standard();

    /// Build from JSON: {"base": [...], "prefixes": [...], "units": [...]}.
    static UnitRegistry from_json(std::string_view json_text);

    const Basis& basis() const noexcept { return basis_; }

    const UnitDef& lookup(std::string_view symbol) const;
    bool has_unit(std::string_view symbol) const;

    const std::vector<UnitDef>& units() const noexcept { return units_; }
    const std::vector<PrefixDef>& prefixes() const noexcept { return prefixes_; }

    ParsedUnit parse(std::string_view expr) const;

    /// Quantity with canonical value = value * factor(expr).
    Quantity quantity_of(double value, std::string_view expr) const;

    /// Canonical text; parse(format(u)) preserves (dimension, factor).
    std::string format(const ParsedUnit& unit) const;

private:
    UnitRegistry(Basis basis, std::vector<UnitDef> units, std::vector<PrefixDef> prefixes);

    // {unit, prefix factor} for one token like "kW"
    std::pair<const UnitDef*, double> resolve_atom(std::string_view token,
                                                   std::size_t position) const;

    friend class UnitExprParser;

    Basis basis_;
    std::vector<UnitDef> units_;
    std::vector<PrefixDef> prefixes_;
    std::map<std::string, std::size_t, std::less<>> unit_index_;
    std::vector<std::size_t> prefixes_by_length_; // indices, longest symbol first
};

namespace detail {
/// The bundled registry data (core/data/units.json embedded at build time).
const char* builtin_units_json();
}

} // namespace piquant
