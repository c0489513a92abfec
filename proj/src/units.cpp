#include "semigrav/units.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"

namespace semigrav {

namespace {

using Table = std::vector<std::pair<std::string_view, double>>;

const Table& suffixes(Quantity q) {
    using constants::two_pi;
    static const Table none{{"", 1.0}};
    static const Table freq{{"", 1.0},          {"rad/s", 1.0},       {"1/s", 1.0},
                            {"s^-1", 1.0},      {"Hz", two_pi},       {"mHz", two_pi * 1e-3},
                            {"uHz", two_pi * 1e-6}, {"kHz", two_pi * 1e3}, {"MHz", two_pi * 1e6},
                            {"GHz", two_pi * 1e9}, {"THz", two_pi * 1e12}};
    static const Table mass{{"", 1.0}, {"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6},
                            {"amu", constants::amu}, {"u", constants::amu}};
    static const Table temp{{"", 1.0}, {"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}};
    static const Table power{{"", 1.0}, {"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}, {"nW", 1e-9}, {"pW", 1e-12}};
    static const Table area{{"", 1.0}, {"m2", 1.0}, {"m^2", 1.0}, {"A2", 1e-20}, {"A^2", 1e-20},
                            {"\xC3\x85\xC2\xB2", 1e-20}};
    static const Table time{{"", 1.0}, {"s", 1.0}, {"ms", 1e-3}, {"min", 60.0}, {"h", 3600.0}, {"d", 86400.0}};
    static const Table percent{{"", 1e-2}, {"%", 1e-2}};
    switch (q) {
        case Quantity::Dimensionless: return none;
        case Quantity::AngularFrequency: return freq;
        case Quantity::Mass: return mass;
        case Quantity::Temperature: return temp;
        case Quantity::Power: return power;
        case Quantity::Area: return area;
        case Quantity::Time: return time;
        case Quantity::Percent: return percent;
    }
    return none;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

double parse_quantity(std::string_view text, Quantity q) {
    const std::string_view s = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || !std::isfinite(value)) {
        throw ConfigError("malformed number '" + std::string(text) + "'");
    }
    const std::string_view unit = trim(s.substr(static_cast<std::size_t>(ptr - s.data())));
    for (const auto& [name, factor] : suffixes(q)) {
        if (unit == name) return value * factor;
    }
    throw ConfigError("unknown unit '" + std::string(unit) + "' for a " + std::string(unit_name(q)) +
                      " value");
}

std::string_view unit_name(Quantity q) {
    switch (q) {
        case Quantity::Dimensionless: return "dimensionless";
        case Quantity::AngularFrequency: return "angular frequency";
        case Quantity::Mass: return "mass";
        case Quantity::Temperature: return "temperature";
        case Quantity::Power: return "power";
        case Quantity::Area: return "area";
        case Quantity::Time: return "time";
        case Quantity::Percent: return "percentage";
    }
    return "?";
}

}  // namespace semigrav
