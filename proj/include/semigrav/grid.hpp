#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace semigrav {

enum class Spacing { Linear, Log };

Spacing parse_spacing(std::string_view text);

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
    Spacing spacing = Spacing::Log;
};

std::vector<double> make_grid(const GridSpec& spec);

/// Adds `count` linearly spaced points over center +- half_width to `grid`,
/// then sorts and removes duplicates. Points <= 0 are dropped.
void refine_around(std::vector<double>& grid, double center, double half_width,
                   std::size_t count);

/// Mirrors a positive grid to [-w_max, ..., -w_min, w_min, ..., w_max].
std::vector<double> symmetric(const std::vector<double>& positive);

}  // namespace semigrav
