#include "wqed/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wqed {

double SystemSpec::wavelength() const {
    return 2.0 * std::numbers::pi / carrier_wavenumber;
}

std::size_t SystemSpec::total_points() const {
    std::size_t n = 0;
    for (const auto& atom : atoms) n += atom.points.size();
    return n;
}

std::vector<std::string> validate(const SystemSpec& spec) {
    std::vector<std::string> violations;
    auto complain = [&violations](const std::string& msg) { violations.push_back(msg); };

    if (spec.atoms.empty()) complain("system has no atoms (N >= 1 required)");
    if (!(spec.carrier_wavenumber > 0.0) || !std::isfinite(spec.carrier_wavenumber))
        complain("carrier wavenumber k0 must be positive and finite");

    for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
        const auto& atom = spec.atoms[i];
        std::ostringstream who;
        who << "atom " << i;
        if (!atom.label.empty()) who << " (" << atom.label << ")";

        if (atom.points.empty()) complain(who.str() + ": atom without coupling points");
        if (!std::isfinite(atom.detuning))
            complain(who.str() + ": non-finite detuning");
        for (std::size_t j = 0; j < atom.points.size(); ++j) {
            const auto& p = atom.points[j];
            if (!std::isfinite(p.position))
                complain(who.str() + ": coupling point " + std::to_string(j) + " has non-finite position");
            if (!(p.strength >= 0.0) || !std::isfinite(p.strength))
                complain(who.str() + ": coupling point " + std::to_string(j) + " has negative or non-finite strength");
        }
        for (std::size_t j = 1; j < atom.points.size(); ++j) {
            if (!(atom.points[j - 1].position < atom.points[j].position))
                complain(who.str() + ": coupling point positions not strictly increasing");
        }
    }

    // Global ordering must be well defined: positions pairwise distinct.
    std::vector<double> xs;
    for (const auto& atom : spec.atoms)
        for (const auto& p : atom.points) xs.push_back(p.position);
    std::sort(xs.begin(), xs.end());
    for (std::size_t n = 1; n < xs.size(); ++n)
        if (xs[n - 1] == xs[n]) {
            std::ostringstream msg;
            msg << "duplicate coupling position x = " << xs[n];
            complain(msg.str());
        }

    for (std::size_t d = 0; d < spec.dipole_couplings.size(); ++d) {
        const auto& dc = spec.dipole_couplings[d];
        std::ostringstream who;
        who << "dipole coupling " << d;
        if (dc.atom_a >= spec.atoms.size() || dc.atom_b >= spec.atoms.size())
            complain(who.str() + ": atom index out of range");
        if (dc.atom_a == dc.atom_b) complain(who.str() + ": couples an atom to itself");
        if (!std::isfinite(dc.strength)) complain(who.str() + ": non-finite strength");
    }
    for (std::size_t d = 0; d < spec.dipole_couplings.size(); ++d)
        for (std::size_t e = d + 1; e < spec.dipole_couplings.size(); ++e) {
            const auto &a = spec.dipole_couplings[d], &b = spec.dipole_couplings[e];
            const bool same = (a.atom_a == b.atom_a && a.atom_b == b.atom_b) ||
                              (a.atom_a == b.atom_b && a.atom_b == b.atom_a);
            if (same) complain("duplicate dipole coupling between atoms " +
                               std::to_string(a.atom_a) + " and " + std::to_string(a.atom_b));
        }

    return violations;
}

void require_valid(const SystemSpec& spec) {
    const auto violations = validate(spec);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid system spec:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw std::invalid_argument(msg.str());
}

std::vector<OrderedPoint> order_points(const SystemSpec& spec) {
    require_valid(spec);
    std::vector<OrderedPoint> points;
    points.reserve(spec.total_points());
    for (std::size_t i = 0; i < spec.atoms.size(); ++i)
        for (std::size_t j = 0; j < spec.atoms[i].points.size(); ++j)
            points.push_back({i, j, spec.atoms[i].points[j].position,
                              spec.atoms[i].points[j].strength});
    std::sort(points.begin(), points.end(),
              [](const OrderedPoint& a, const OrderedPoint& b) { return a.position < b.position; });
    return points;
}

double phase_between(const SystemSpec& spec, const OrderedPoint& a,
                     const OrderedPoint& b, double k) {
    const double kk = spec.phase_mode == PhaseMode::Markov ? spec.carrier_wavenumber : k;
    return kk * std::abs(b.position - a.position);
}

}  // namespace wqed
