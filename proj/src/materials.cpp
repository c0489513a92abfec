#include "semigrav/materials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"

namespace semigrav {

namespace {

MaterialRow make_row(const char* name, const char* symbol, double mass_amu,
                     double B_A2, double density_kg_m3) {
    MaterialSpec spec{name, symbol, mass_amu * constants::amu,
                      B_A2 * constants::angstrom * constants::angstrom, density_kg_m3};
    return {spec, derive(spec)};
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

double delta_x_zp(double debye_waller_B) {
    if (!(debye_waller_B > 0.0)) {
        throw DomainError("Debye-Waller factor must be positive");
    }
    return std::sqrt(debye_waller_B / (8.0 * constants::pi * constants::pi));
}

double omega_sn(double atomic_mass, double dx) {
    if (!(atomic_mass > 0.0) || !(dx > 0.0)) {
        throw DomainError("omega_sn needs positive atomic mass and spread");
    }
    return std::sqrt(constants::G * atomic_mass / (6.0 * constants::sqrt_pi * dx * dx * dx));
}

double omega_sn(const MaterialSpec& spec) {
    validate(spec);
    return omega_sn(spec.atomic_mass, delta_x_zp(spec.debye_waller_B));
}

MaterialDerived derive(const MaterialSpec& spec) {
    validate(spec);
    const double dx = delta_x_zp(spec.debye_waller_B);
    return {dx, omega_sn(spec.atomic_mass, dx)};
}

void validate(const MaterialSpec& spec) {
    if (!(spec.atomic_mass > 0.0)) {
        throw DomainError("material '" + spec.name + "': atomic mass must be positive");
    }
    if (!(spec.debye_waller_B > 0.0)) {
        throw DomainError("material '" + spec.name + "': Debye-Waller factor must be positive");
    }
}

const std::vector<MaterialRow>& builtin_table() {
    // Debye-Waller factors at 1 K; Osmium's is a theoretical value.
    static const std::vector<MaterialRow> table{
        make_row("Silicon", "Si", 28.0855, 0.1915, 2.33e3),
        make_row("Iron", "Fe", 55.845, 0.12, 7.87e3),
        make_row("Germanium", "Ge", 72.630, 0.1341, 5.32e3),
        make_row("Niobium", "Nb", 92.90637, 0.1082, 8.57e3),
        make_row("Platinum", "Pt", 195.084, 0.0677, 21.45e3),
        make_row("Tungsten", "W", 183.84, 0.0478, 19.25e3),
        make_row("Osmium", "Os", 190.23, 0.0323, 22.59e3),
    };
    return table;
}

const MaterialRow& lookup_material(std::string_view key) {
    for (const auto& row : builtin_table()) {
        if (iequals(row.spec.symbol, key) || iequals(row.spec.name, key)) {
            return row;
        }
    }
    throw NotFoundError("unknown material '" + std::string(key) + "'");
}

double self_energy(double x, double M, double atomic_mass, double dx) {
    if (!(dx > 0.0)) {
        throw DomainError("self_energy needs a positive zero-point spread");
    }
    const double scale = constants::G * M * atomic_mass;
    if (std::abs(x) < 1e-6 * dx) {
        const double u2 = (x / dx) * (x / dx);
        return scale / (constants::sqrt_pi * dx) *
               (constants::sqrt_pi - 1.0 + u2 / 12.0 - u2 * u2 / 160.0);
    }
    return scale * (1.0 / dx - std::erf(x / (2.0 * dx)) / x);
}

void write_table_csv(std::ostream& os, const std::vector<MaterialRow>& rows) {
    os << "element,density_kg_m3,B_A2,omega_sn_s1\n";
    const auto old_prec = os.precision(10);
    for (const auto& row : rows) {
        os << row.spec.symbol << ',' << row.spec.density << ','
           << row.spec.debye_waller_B / (constants::angstrom * constants::angstrom) << ','
           << row.derived.omega_sn << '\n';
    }
    os.precision(old_prec);
}

}  // namespace semigrav
