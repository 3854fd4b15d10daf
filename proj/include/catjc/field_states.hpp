#pragma once

#include <complex>
#include <vector>

#include "catjc/errors.hpp"

namespace catjc {

// Parameters of a single-mode Schrodinger cat field
//
//   |psi_f> = N (|alpha> + e^{i rho_c} |-alpha>),  alpha = sqrt(n_bar) e^{i beta},
//   N = (2 + 2 e^{-2 n_bar} cos rho_c)^{-1/2}.
//
// Phases are raw radians (not wrapped); every derived quantity is 2*pi
// periodic in both beta and rho_c.
struct CatFieldSpec {
    double n_bar = 0.0; // mean photon number of each coherent branch, >= 0
    double beta = 0.0;  // coherent phase
    double rho_c = 0.0; // relative phase between the two branches

    std::complex<double> alpha() const;
    // The squared normalization denominator 2 + 2 e^{-2 n_bar} cos(rho_c).
    // Vanishes only for the odd cat of the vacuum.
    double norm_denominator() const;
    void validate() const; // InvalidParameterError / DegenerateStateError
};

// Fock-basis amplitudes c_0 .. c_{n_max} of a truncated pure field state.
struct FockAmplitudes {
    std::vector<std::complex<double>> amps;

    int n_max() const { return static_cast<int>(amps.size()) - 1; }
    double norm_sq() const;
};

// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), built by stable recurrence
// (no factorials are ever formed).
FockAmplitudes coherent_amplitudes(std::complex<double> alpha, int n_max);

// Cat amplitudes c_n = N P_n (1 + e^{i rho_c} (-1)^n) with P_n the coherent
// amplitudes of alpha(). For rho_c = 0 all odd amplitudes vanish exactly;
// for rho_c = pi (and n_bar > 0) all even ones do.
FockAmplitudes cat_amplitudes(const CatFieldSpec& spec, int n_max);

// Smallest n_max whose Poisson tail sum_{n > n_max} e^{-n_bar} n_bar^n / n!
// falls below tail_eps, plus 2 slots of headroom so the evolution blocks that
// reach one index past the bulk only touch negligible amplitudes.
int choose_truncation(double n_bar, double tail_eps);

} // namespace catjc
