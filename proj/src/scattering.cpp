#include "wqed/scattering.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wqed/parallel.hpp"

namespace wqed {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

}  // namespace

ScatteringSystem build_system(const SystemSpec& spec, double probe_detuning) {
    require_valid(spec);
    if (!std::isfinite(probe_detuning))
        throw std::invalid_argument("probe detuning must be finite");

    const double k = spec.carrier_wavenumber + probe_detuning;
    if (spec.phase_mode == PhaseMode::Exact && !(k > 0.0))
        throw std::invalid_argument("probe wavenumber k = k0 + Delta_p must be positive in Exact mode");
    const double k_phase =
        spec.phase_mode == PhaseMode::Markov ? spec.carrier_wavenumber : k;

    ScatteringSystem sys;
    const auto ordered = order_points(spec);
    for (const auto& p : ordered)
        if (p.strength > 0.0) sys.active_points.push_back(p);

    const Eigen::Index n_active = static_cast<Eigen::Index>(sys.active_points.size());
    const Eigen::Index n_atoms = static_cast<Eigen::Index>(spec.atoms.size());
    const Eigen::Index dim = 2 * n_active + n_atoms;
    sys.matrix = Eigen::MatrixXcd::Zero(dim, dim);
    sys.rhs = Eigen::VectorXcd::Zero(dim);

    const auto t_idx = [](Eigen::Index n) { return n; };
    const auto r_idx = [n_active](Eigen::Index n) { return n_active + n; };
    const auto e_idx = [n_active](std::size_t i) {
        return 2 * n_active + static_cast<Eigen::Index>(i);
    };
    const double quarter = 1.0 / (4.0 * std::sqrt(std::numbers::pi));

    for (Eigen::Index n = 0; n < n_active; ++n) {
        const auto& p = sys.active_points[static_cast<std::size_t>(n)];
        const std::complex<double> ph = std::exp(kImag * (k_phase * p.position));
        const std::complex<double> root = std::sqrt(std::numbers::pi * p.strength);

        // t_n - t_{n-1} + i sqrt(pi gamma) e^{-ikx} e_i = 0,   t_0 = 1
        sys.matrix(t_idx(n), t_idx(n)) = 1.0;
        if (n > 0)
            sys.matrix(t_idx(n), t_idx(n - 1)) = -1.0;
        else
            sys.rhs(t_idx(n)) += 1.0;
        sys.matrix(t_idx(n), e_idx(p.atom)) = kImag * root * std::conj(ph);

        // r_n - r_{n+1} + i sqrt(pi gamma) e^{+ikx} e_i = 0,   r_{A+1} = 0
        sys.matrix(r_idx(n), r_idx(n)) = 1.0;
        if (n + 1 < n_active) sys.matrix(r_idx(n), r_idx(n + 1)) = -1.0;
        sys.matrix(r_idx(n), e_idx(p.atom)) = kImag * root * ph;
    }

    // Energy rows, cleared of the 1/(k - omega_i) denominator:
    // (Delta_p - delta_i) e_i
    //   = sum_j sqrt(gamma_ij)/(4 sqrt(pi)) [e^{ikx}(t_{n-1}+t_n) + e^{-ikx}(r_n+r_{n+1})]
    //   + sum_l g_il e_l
    for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
        const Eigen::Index row = e_idx(i);
        sys.matrix(row, row) = probe_detuning - spec.atoms[i].detuning;
        for (Eigen::Index n = 0; n < n_active; ++n) {
            const auto& p = sys.active_points[static_cast<std::size_t>(n)];
            if (p.atom != i) continue;
            const std::complex<double> ph = std::exp(kImag * (k_phase * p.position));
            const std::complex<double> c = quarter * std::sqrt(p.strength);
            sys.matrix(row, t_idx(n)) -= c * ph;
            if (n > 0)
                sys.matrix(row, t_idx(n - 1)) -= c * ph;
            else
                sys.rhs(row) += c * ph;  // t_0 = 1
            sys.matrix(row, r_idx(n)) -= c * std::conj(ph);
            if (n + 1 < n_active) sys.matrix(row, r_idx(n + 1)) -= c * std::conj(ph);
        }
        for (const auto& dc : spec.dipole_couplings) {
            if (dc.atom_a == i)
                sys.matrix(row, e_idx(dc.atom_b)) -= dc.strength;
            else if (dc.atom_b == i)
                sys.matrix(row, e_idx(dc.atom_a)) -= dc.strength;
        }
    }

    return sys;
}

ScatteringSolution solve(const SystemSpec& spec, double probe_detuning) {
    const ScatteringSystem sys = build_system(spec, probe_detuning);
    const Eigen::Index n_active = static_cast<Eigen::Index>(sys.active_points.size());
    const Eigen::Index n_atoms = static_cast<Eigen::Index>(spec.atoms.size());

    ScatteringSolution sol;
    sol.probe_detuning = probe_detuning;
    sol.wavenumber = spec.carrier_wavenumber + probe_detuning;

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(sys.matrix);
    if (!lu.isInvertible()) {
        const double pivot_ratio =
            lu.maxPivot() > 0.0
                ? std::abs(lu.matrixLU().diagonal().cwiseAbs().minCoeff()) / lu.maxPivot()
                : 0.0;
        std::ostringstream msg;
        msg << "singular scattering system at Delta_p = " << probe_detuning
            << " (pivot ratio " << pivot_ratio << "): degenerate parameter choice";
        throw std::runtime_error(msg.str());
    }
    const Eigen::VectorXcd x = lu.solve(sys.rhs);

    sol.t = x.segment(0, n_active);
    sol.r = x.segment(n_active, n_active);
    sol.e = x.segment(2 * n_active, n_atoms);
    if (n_active > 0) {
        sol.transmission = sol.t(n_active - 1);
        sol.reflection = sol.r(0);
    }
    sol.unitarity_residual =
        std::abs(std::norm(sol.transmission) + std::norm(sol.reflection) - 1.0);
    return sol;
}

ScatteringSolution solve_at_wavenumber(const SystemSpec& spec, double k) {
    return solve(spec, k - spec.carrier_wavenumber);
}

std::vector<ScatteringSolution> sweep(const SystemSpec& spec,
                                      std::span<const double> detunings) {
    std::vector<ScatteringSolution> out(detunings.size());
    parallel_for(detunings.size(), [&](std::size_t i) {
        try {
            out[i] = solve(spec, detunings[i]);
        } catch (const std::exception& err) {
            std::ostringstream msg;
            msg << "sweep failed at grid point " << i << " (Delta_p = " << detunings[i]
                << "): " << err.what();
            throw std::runtime_error(msg.str());
        }
    });
    return out;
}

}  // namespace wqed
