#pragma once

#include <array>
#include <utility>

#include "catjc/jc_evolution.hpp"

namespace catjc {

// Two-outcome measurement probabilities of sigma_x, sigma_y, sigma_z.
// Index 0 is the +1 outcome, index 1 the -1 outcome:
//   P(sigma_x) = (1 +- 2 Re rho_eg) / 2
//   P(sigma_y) = (1 -+ 2 Im rho_eg) / 2
//   P(sigma_z) = (rho_ee, rho_gg)
struct PauliProbabilities {
    std::array<double, 2> x{};
    std::array<double, 2> y{};
    std::array<double, 2> z{};
};

struct ShannonEntropies {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// One point of the squeezing time series. dh_* are the exponentials
// exp(h_*); e_* the entropy squeezing factors; v_* the variance ones.
struct SqueezingSample {
    double tau = 0.0;
    double h_x = 0.0, h_y = 0.0, h_z = 0.0;
    double dh_x = 0.0, dh_y = 0.0, dh_z = 0.0;
    double e_x = 0.0, e_y = 0.0;
    double v_x = 0.0, v_y = 0.0;
    double exp_x = 0.0, exp_y = 0.0, exp_z = 0.0;
    double rho_ee = 0.0;
    std::complex<double> rho_eg;
    double entropy_sum_slack = 0.0;
};

// Rounding slop tolerated when probabilities stray outside [0,1]; anything
// larger means the density matrix itself is broken.
inline constexpr double kProbClampBudget = 1e-10;

// Allowed negative slack on H_x + H_y + H_z - 2 ln 2.
inline constexpr double kEntropyBoundSlop = 1e-12;

// Throws CorruptStateError when any probability leaves [0,1] by more than
// kProbClampBudget; smaller excursions are clamped silently.
PauliProbabilities pauli_probabilities(const QubitDensityMatrix& rho);

// Shannon entropies (natural log, 0 ln 0 := 0) of the three distributions.
ShannonEntropies shannon_entropies(const QubitDensityMatrix& rho);

// Entropy squeezing factors E(sigma_x), E(sigma_y):
//   E(sigma_a) = e^{H(sigma_a)} - 2 / sqrt(e^{H(sigma_z)}).
// For valid states each lies in [1 - sqrt(2), 2 - sqrt(2)], with the optimum
// 1 - sqrt(2) reached exactly on sigma_y (resp. sigma_x) eigenstates.
std::pair<double, double> entropy_squeeze_factors(double h_x, double h_y, double h_z);

// Variance squeezing factors V(sigma_a) = sqrt(1 - <sigma_a>^2) - sqrt(|<sigma_z>|/2)
// with <sigma_x> = 2 Re rho_eg, <sigma_y> = -2 Im rho_eg, <sigma_z> = rho_ee - rho_gg.
std::pair<double, double> variance_squeeze_factors(const QubitDensityMatrix& rho);

// Returns the slack H_x + H_y + H_z - 2 ln 2 of the entropic uncertainty
// bound; throws InvariantViolationError when it is below -kEntropyBoundSlop
// or the equivalent multiplicative form dH_x dH_y dH_z >= 4 fails beyond
// relative 1e-12.
double check_entropic_bound(double h_x, double h_y, double h_z);

// Full metric bundle for one grid point (runs the bound check).
SqueezingSample sample_at(const QubitDensityMatrix& rho, double tau);

} // namespace catjc
