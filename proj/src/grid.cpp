#include "semigrav/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semigrav/errors.hpp"

namespace semigrav {

Spacing parse_spacing(std::string_view text) {
    if (text == "lin" || text == "linear") return Spacing::Linear;
    if (text == "log") return Spacing::Log;
    throw ConfigError("grid spacing must be 'lin' or 'log', got '" + std::string(text) + "'");
}

std::vector<double> make_grid(const GridSpec& spec) {
    if (spec.count < 2) throw ConfigError("grid needs at least 2 points");
    if (!(spec.stop > spec.start)) throw ConfigError("grid stop must exceed start");
    if (spec.spacing == Spacing::Log && !(spec.start > 0.0)) {
        throw ConfigError("log grid needs a positive start");
    }
    std::vector<double> grid(spec.count);
    const double n = static_cast<double>(spec.count - 1);
    for (std::size_t i = 0; i < spec.count; ++i) {
        const double f = static_cast<double>(i) / n;
        grid[i] = spec.spacing == Spacing::Linear
                      ? spec.start + f * (spec.stop - spec.start)
                      : spec.start * std::pow(spec.stop / spec.start, f);
    }
    grid.back() = spec.stop;
    return grid;
}

void refine_around(std::vector<double>& grid, double center, double half_width,
                   std::size_t count) {
    if (count < 2 || !(half_width > 0.0)) return;
    const double step = 2.0 * half_width / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = center - half_width + step * static_cast<double>(i);
        if (w > 0.0) grid.push_back(w);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
}

std::vector<double> symmetric(const std::vector<double>& positive) {
    std::vector<double> out;
    out.reserve(2 * positive.size());
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), positive.begin(), positive.end());
    return out;
}

}  // namespace semigrav
