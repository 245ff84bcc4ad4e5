#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wqed {

// Units: hbar = 1 and wave velocity = 1 throughout, so frequency = wavenumber
// = 1/length.  All rates are expressed in units of a reference rate; the
// carrier wavenumber k0 equals the carrier frequency omega_0.

// How propagation phases are evaluated.  Markov freezes them at the carrier
// wavenumber k0; Exact uses the probe wavenumber k.
enum class PhaseMode { Markov, Exact };

// One connection of an atom to the waveguide.  position is in length units
// (position = time delay = phase/k); strength is the decay rate gamma at this
// point.  strength = 0 encodes a formally present but decoupled point.
struct CouplingPoint {
    double position = 0.0;
    double strength = 0.0;
};

// A two-level emitter.  Its transition frequency is stored as a detuning from
// the system carrier (omega_i = omega_0 + detuning) so that probe detunings
// much smaller than omega_0 never suffer cancellation.
struct AtomSpec {
    double detuning = 0.0;
    std::vector<CouplingPoint> points;  // M_i >= 1, positions strictly increasing
    std::string label;

    bool is_giant() const { return points.size() >= 2; }
};

// Direct (non-waveguide) exchange coupling g between two atoms.  Unordered
// pair; the coupling enters the Hamiltonian Hermitically.
struct DipoleCoupling {
    std::size_t atom_a = 0;
    std::size_t atom_b = 0;
    double strength = 0.0;
};

// Full description of an atom array on a 1D waveguide.
struct SystemSpec {
    std::vector<AtomSpec> atoms;
    std::vector<DipoleCoupling> dipole_couplings;
    double carrier_wavenumber = 100.0;  // k0 = omega_0 (v = 1)
    PhaseMode phase_mode = PhaseMode::Markov;

    double wavelength() const;           // lambda_0 = 2 pi / k0
    std::size_t total_points() const;    // N' including zero-strength points
};

// A coupling point tagged with its owner, used once the global left-to-right
// ordering has been established.
struct OrderedPoint {
    std::size_t atom = 0;  // owning atom index
    std::size_t leg = 0;   // index within that atom's point list
    double position = 0.0;
    double strength = 0.0;
};

// Returns every violated invariant as a human-readable message; empty means
// the spec is valid.  Violations are data, not failures.
std::vector<std::string> validate(const SystemSpec& spec);

// Throws std::invalid_argument listing all violations if the spec is invalid.
void require_valid(const SystemSpec& spec);

// All coupling points sorted by position.  Zero-strength points participate
// in the ordering (they matter for phase bookkeeping) but carry no scattering
// weight.
std::vector<OrderedPoint> order_points(const SystemSpec& spec);

// Propagation phase between two coupling points at probe wavenumber k:
// k |xb - xa| in Exact mode, k0 |xb - xa| in Markov mode.
double phase_between(const SystemSpec& spec, const OrderedPoint& a,
                     const OrderedPoint& b, double k);

}  // namespace wqed
