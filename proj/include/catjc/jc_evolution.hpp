#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "catjc/field_states.hpp"

namespace catjc {

// Initial qubit state cos(theta/2)|e> + e^{-i phi} sin(theta/2)|g>.
struct QubitSpec {
    double theta = 0.0; // polar angle in [0, pi]
    double phi = 0.0;   // relative phase, raw radians
    void validate() const;
};

// Pure state of qubit (x) field over a truncated Fock basis: amplitudes of
// |e,n> and |g,n> for n = 0..n_max, both branches sharing one n_max.
struct JointState {
    std::vector<std::complex<double>> e_amps;
    std::vector<std::complex<double>> g_amps;

    int n_max() const { return static_cast<int>(e_amps.size()) - 1; }
    double norm_sq() const;
};

// Reduced qubit state. Only rho_ee and rho_eg are stored;
// rho_gg = 1 - rho_ee and rho_ge = conj(rho_eg) are implied.
struct QubitDensityMatrix {
    double rho_ee = 0.0;
    std::complex<double> rho_eg;

    double rho_gg() const { return 1.0 - rho_ee; }
    std::complex<double> rho_ge() const { return std::conj(rho_eg); }
};

JointState initial_joint_state(const QubitSpec& qubit, const FockAmplitudes& field);

// Exact resonant one-photon evolution over scaled time tau. The interaction
// couples only the pairs {|e,n>, |g,n+1>}; on each pair it is the rotation
//
//   e_n'     = cos(tau sqrt(n+1)) e_n     - i sin(tau sqrt(n+1)) g_{n+1}
//   g_{n+1}' = cos(tau sqrt(n+1)) g_{n+1} - i sin(tau sqrt(n+1)) e_n
//
// and |g,0> is stationary. The top pair's partner g_{n_max+1} lies beyond the
// truncation and is treated as zero; the norm it leaks is bounded by the
// Poisson tail the truncation was chosen against.
JointState evolve_exact(const JointState& state, double tau);

// rho_ee = sum_n |e_n|^2,  rho_eg = sum_n e_n conj(g_n).
QubitDensityMatrix reduce_to_qubit(const JointState& state);

// Term toggles for the closed-form engine below. `pairing` selects the weight
// on the rho_eg cross term that couples P_{n+1} with P_{n-1}:
//   plus  -> (1 + (-1)^n cos rho_c)   (the series as transcribed)
//   minus -> (1 - (-1)^n cos rho_c)   (the parity complement)
// Only indices n+1 and n-1 of equal parity meet in that product, which is why
// the two variants differ; cross_validate uses the toggle to localize any
// disagreement with the propagator route.
enum class CrossPairingWeight { plus, minus };

struct ClosedFormTerms {
    bool ee_diagonal = true;
    bool ee_interference = true;
    bool eg_coherent_diagonal = true;
    bool eg_coherent_cross = true;
    bool eg_interference = true;
    CrossPairingWeight pairing = CrossPairingWeight::plus;
};

// Closed-form photon-number series for the reduced density matrix of a qubit
// that starts in `qubit` against the cat field `spec`. This engine is an
// independent transcription of the series solution, kept verbatim so it can
// be checked against evolve_exact/reduce_to_qubit; it is NOT the trusted
// ground truth. Series terms whose index would leave 0..n_max are dropped.
QubitDensityMatrix closed_form_density(const QubitSpec& qubit, const CatFieldSpec& spec,
                                       double tau, int n_max,
                                       const ClosedFormTerms& terms = {});

struct ValidationReport {
    bool consistent = false;
    double tolerance = 0.0;
    double max_delta_rho_ee = 0.0;
    double argmax_tau_ee = 0.0;
    double max_delta_rho_eg = 0.0;
    double argmax_tau_eg = 0.0;
    // Residual deviation when the cross term uses the parity-complement weight;
    // filled whenever the transcribed form is discrepant.
    double minus_pairing_max_delta_rho_ee = 0.0;
    double minus_pairing_max_delta_rho_eg = 0.0;
    std::string offending_term; // empty when consistent

    std::string summary() const;
};

// Compares the two engines over a tau grid at the given truncation and
// marks the result CONSISTENT when both maxima stay below `tolerance`.
// On discrepancy the cross-term pairing toggle (and, failing that, one-term
// ablation) identifies the offending series term.
ValidationReport compare_engines(const QubitSpec& qubit, const CatFieldSpec& spec,
                                 std::span<const double> tau_grid, int n_max,
                                 double tolerance);

// compare_engines at the standard consistency tolerance 1e-8.
ValidationReport cross_validate(const QubitSpec& qubit, const CatFieldSpec& spec,
                                std::span<const double> tau_grid, int n_max);

} // namespace catjc
