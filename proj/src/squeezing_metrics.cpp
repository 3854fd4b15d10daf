#include "catjc/squeezing_metrics.hpp"

#include <cmath>
#include <cstdio>
#include <tuple>

namespace catjc {

namespace {

const double kTwoLn2 = 2.0 * std::log(2.0);

double checked_probability(double p, const char* label) {
    if (!std::isfinite(p) || p < -kProbClampBudget || p > 1.0 + kProbClampBudget) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "probability %s = %.17g is outside [0,1] beyond the rounding budget",
                      label, p);
        throw CorruptStateError(msg);
    }
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

// -p ln p - (1-p) ln(1-p) with the 0 ln 0 := 0 convention.
double binary_entropy(double p1, double p2) {
    double h = 0.0;
    if (p1 > 0.0) h -= p1 * std::log(p1);
    if (p2 > 0.0) h -= p2 * std::log(p2);
    return h;
}

} // namespace

PauliProbabilities pauli_probabilities(const QubitDensityMatrix& rho) {
    const double re = rho.rho_eg.real();
    const double im = rho.rho_eg.imag();
    PauliProbabilities p;
    p.x = {checked_probability(0.5 * (1.0 + 2.0 * re), "P1(sigma_x)"),
           checked_probability(0.5 * (1.0 - 2.0 * re), "P2(sigma_x)")};
    p.y = {checked_probability(0.5 * (1.0 - 2.0 * im), "P1(sigma_y)"),
           checked_probability(0.5 * (1.0 + 2.0 * im), "P2(sigma_y)")};
    p.z = {checked_probability(rho.rho_ee, "P1(sigma_z)"),
           checked_probability(rho.rho_gg(), "P2(sigma_z)")};
    return p;
}

ShannonEntropies shannon_entropies(const QubitDensityMatrix& rho) {
    const PauliProbabilities p = pauli_probabilities(rho);
    return {binary_entropy(p.x[0], p.x[1]),
            binary_entropy(p.y[0], p.y[1]),
            binary_entropy(p.z[0], p.z[1])};
}

std::pair<double, double> entropy_squeeze_factors(double h_x, double h_y, double h_z) {
    const double z_term = 2.0 * std::exp(-0.5 * h_z); // 2 / sqrt(e^{h_z})
    return {std::exp(h_x) - z_term, std::exp(h_y) - z_term};
}

std::pair<double, double> variance_squeeze_factors(const QubitDensityMatrix& rho) {
    const double sx = 2.0 * rho.rho_eg.real();
    const double sy = -2.0 * rho.rho_eg.imag();
    const double sz = rho.rho_ee - rho.rho_gg();
    const double z_term = std::sqrt(0.5 * std::abs(sz));
    const double dx = std::sqrt(std::max(0.0, 1.0 - sx * sx));
    const double dy = std::sqrt(std::max(0.0, 1.0 - sy * sy));
    return {dx - z_term, dy - z_term};
}

double check_entropic_bound(double h_x, double h_y, double h_z) {
    const double slack = h_x + h_y + h_z - kTwoLn2;
    if (!(slack >= -kEntropyBoundSlop)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "entropic uncertainty bound violated: H_x + H_y + H_z - 2 ln 2 = %.17g",
                      slack);
        throw InvariantViolationError(msg);
    }
    // Same statement multiplicatively: dH_x dH_y >= 4 / dH_z.
    const double product = std::exp(h_x) * std::exp(h_y) * std::exp(h_z);
    if (!(product >= 4.0 * (1.0 - 1e-12))) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "entropic uncertainty bound (multiplicative form) violated: "
                      "dH_x dH_y dH_z = %.17g < 4",
                      product);
        throw InvariantViolationError(msg);
    }
    return slack;
}

SqueezingSample sample_at(const QubitDensityMatrix& rho, double tau) {
    const ShannonEntropies h = shannon_entropies(rho);
    SqueezingSample s;
    s.tau = tau;
    s.h_x = h.x;
    s.h_y = h.y;
    s.h_z = h.z;
    s.dh_x = std::exp(h.x);
    s.dh_y = std::exp(h.y);
    s.dh_z = std::exp(h.z);
    std::tie(s.e_x, s.e_y) = entropy_squeeze_factors(h.x, h.y, h.z);
    std::tie(s.v_x, s.v_y) = variance_squeeze_factors(rho);
    s.exp_x = 2.0 * rho.rho_eg.real();
    s.exp_y = -2.0 * rho.rho_eg.imag();
    s.exp_z = rho.rho_ee - rho.rho_gg();
    s.rho_ee = rho.rho_ee;
    s.rho_eg = rho.rho_eg;
    s.entropy_sum_slack = check_entropic_bound(h.x, h.y, h.z);
    return s;
}

} // namespace catjc
