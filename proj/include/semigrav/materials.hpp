#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace semigrav {

/// Crystal data for a test-mass material. SI units throughout; the
/// Debye-Waller factor is stored in m^2 (tables quote it in Angstrom^2).
struct MaterialSpec {
    std::string name;
    std::string symbol;
    double atomic_mass = 0.0;     // kg
    double debye_waller_B = 0.0;  // m^2
    double density = 0.0;         // kg/m^3, informational
};

struct MaterialDerived {
    double delta_x_zp = 0.0;  // m
    double omega_sn = 0.0;    // rad/s
};

struct MaterialRow {
    MaterialSpec spec;
    MaterialDerived derived;
};

/// Zero-point displacement spread from the Debye-Waller factor, using the
/// crystallographic convention B = 8 pi^2 <u^2>.
double delta_x_zp(double debye_waller_B);

/// sqrt(G m / (6 sqrt(pi) dx^3)).
double omega_sn(double atomic_mass, double delta_x_zp);
double omega_sn(const MaterialSpec& spec);

MaterialDerived derive(const MaterialSpec& spec);

void validate(const MaterialSpec& spec);

/// The seven elemental crystals with low-temperature Debye-Waller data
/// (Si, Fe, Ge, Nb, Pt, W, Os), atomic masses at standard isotopic abundance.
const std::vector<MaterialRow>& builtin_table();

/// Case-insensitive lookup by symbol ("W") or name ("Tungsten").
/// Throws NotFoundError for unknown keys.
const MaterialRow& lookup_material(std::string_view key);

/// Gravitational self-energy between the object and a copy displaced by x.
/// Evaluated with its series below |x| < 1e-6 dx_zp.
double self_energy(double x, double M, double atomic_mass, double delta_x_zp);

/// CSV columns: element,density_kg_m3,B_A2,omega_sn_s1
void write_table_csv(std::ostream& os, const std::vector<MaterialRow>& rows);

}  // namespace semigrav
