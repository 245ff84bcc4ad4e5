#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wqed/model.hpp"

namespace wqed {

// The dense linear system for the single-photon scattering amplitudes.
// Unknown ordering: [t_1..t_A, r_1..r_A, e_1..e_N], where A is the number of
// coupling points with nonzero strength (zero-strength points do not scatter
// and generate no segment unknowns).  The boundary values t_0 = 1 and
// r_{A+1} = 0 are folded into the right-hand side.
struct ScatteringSystem {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
    std::vector<OrderedPoint> active_points;  // sorted, strength > 0
};

// Per-probe scattering amplitudes.  transmission = t_A (the overall t),
// reflection = r_1 (the overall r).
struct ScatteringSolution {
    double probe_detuning = 0.0;  // Delta_p = k - omega_0
    double wavenumber = 0.0;      // k = k0 + Delta_p
    Eigen::VectorXcd t;           // per active coupling point
    Eigen::VectorXcd r;
    Eigen::VectorXcd e;           // per atom
    std::complex<double> transmission{1.0, 0.0};
    std::complex<double> reflection{0.0, 0.0};
    double unitarity_residual = 0.0;  // | |t|^2 + |r|^2 - 1 |
};

// Assembles the coupled equations at probe detuning Delta_p = k - omega_0.
// Per active coupling point one transmission-jump and one reflection-jump
// row; per atom one energy row (cleared-denominator form, so k = omega_i is
// not singular), with dipole partners entering the energy row.
ScatteringSystem build_system(const SystemSpec& spec, double probe_detuning);

// Solves the system with a fully pivoted dense LU.  Throws on singular
// matrices (degenerate parameter choice), reporting a condition estimate.
ScatteringSolution solve(const SystemSpec& spec, double probe_detuning);

// Convenience overload taking the absolute wavenumber.
ScatteringSolution solve_at_wavenumber(const SystemSpec& spec, double k);

// One solution per grid point, in input order.  Evaluated in parallel
// (bounded by WQED_THREADS); failures carry the offending detuning.
std::vector<ScatteringSolution> sweep(const SystemSpec& spec,
                                      std::span<const double> detunings);

}  // namespace wqed
