#pragma once

#include <doctest.h>

#include <limits>

// doctest::Approx adds an absolute slack of epsilon * 1.0, which makes it
// vacuous for SI quantities far below unity. This variant is purely relative.
inline doctest::Approx approx(double value) {
    return doctest::Approx(value).scale(std::numeric_limits<double>::min());
}
