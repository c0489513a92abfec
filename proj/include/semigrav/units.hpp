#pragma once

#include <string>
#include <string_view>

namespace semigrav {

/// Physical dimension of a configuration value. Values are normalized to SI.
enum class Quantity {
    Dimensionless,
    AngularFrequency,  // rad/s; Hz-family suffixes are multiplied by 2 pi
    Mass,              // kg, g, mg, amu (u)
    Temperature,       // K, mK, uK
    Power,             // W, mW, uW, nW, pW
    Area,              // m2, A2 (Angstrom^2)
    Time,              // s, ms, min, h, d
    Percent,           // 10 or 10% -> 0.1
};

/// "<number>[ ]<suffix>"; a bare number is already SI. Throws ConfigError on an
/// unknown suffix or malformed number.
double parse_quantity(std::string_view text, Quantity q);

std::string_view unit_name(Quantity q);

}  // namespace semigrav
