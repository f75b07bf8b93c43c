#pragma once

namespace mcqsim {

// Unit convention for the whole library: lengths in nm, energies in eV,
// times in fs. Angular frequencies are then in rad/fs and hbar carries
// eV*fs. Constants are injected into every computation that needs them;
// nothing downstream re-declares these values.
struct PhysicalConstants {
    double hbar = 0.6582119569;      // reduced Planck constant, eV*fs
    double coulomb_ke2 = 1.4399645;  // e^2/(4*pi*eps0), eV*nm

    bool valid() const { return hbar > 0.0 && coulomb_ke2 > 0.0; }
};

inline PhysicalConstants default_constants() { return PhysicalConstants{}; }

} // namespace mcqsim
