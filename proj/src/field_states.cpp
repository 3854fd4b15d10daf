#include "catjc/field_states.hpp"

#include <cmath>

namespace catjc {

std::complex<double> CatFieldSpec::alpha() const {
    return std::polar(std::sqrt(n_bar), beta);
}

double CatFieldSpec::norm_denominator() const {
    return 2.0 + 2.0 * std::exp(-2.0 * n_bar) * std::cos(rho_c);
}

void CatFieldSpec::validate() const {
    if (!std::isfinite(n_bar) || n_bar < 0.0)
        throw InvalidParameterError("cat field: n_bar must be finite and >= 0");
    if (!std::isfinite(beta) || !std::isfinite(rho_c))
        throw InvalidParameterError("cat field: beta and rho_c must be finite");
    // The two branches cancel when e^{-2 n_bar} cos(rho_c) = -1, i.e. the odd
    // cat of the vacuum. Anything this close to it has no usable normalization.
    if (norm_denominator() < 1e-12)
        throw DegenerateStateError(
            "cat field: |alpha> + e^{i rho_c}|-alpha> is (numerically) the zero vector");
}

double FockAmplitudes::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

FockAmplitudes coherent_amplitudes(std::complex<double> alpha, int n_max) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw InvalidParameterError("coherent_amplitudes: alpha must be finite");
    if (n_max < 0)
        throw InvalidParameterError("coherent_amplitudes: n_max must be >= 0");
    FockAmplitudes f;
    f.amps.resize(static_cast<size_t>(n_max) + 1);
    f.amps[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= n_max; ++n)
        f.amps[n] = f.amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return f;
}

FockAmplitudes cat_amplitudes(const CatFieldSpec& spec, int n_max) {
    spec.validate();
    if (n_max < 0)
        throw InvalidParameterError("cat_amplitudes: n_max must be >= 0");
    const double inv_norm = 1.0 / std::sqrt(spec.norm_denominator());
    const std::complex<double> branch_phase = std::polar(1.0, spec.rho_c);
    FockAmplitudes f = coherent_amplitudes(spec.alpha(), n_max);
    for (int n = 0; n <= n_max; ++n) {
        const double parity = (n % 2 == 0) ? 1.0 : -1.0;
        f.amps[n] *= inv_norm * (1.0 + branch_phase * parity);
    }
    return f;
}

int choose_truncation(double n_bar, double tail_eps) {
    if (!std::isfinite(n_bar) || n_bar < 0.0)
        throw InvalidParameterError("choose_truncation: n_bar must be finite and >= 0");
    if (n_bar > 1e6)
        throw InvalidParameterError("choose_truncation: n_bar too large for a Fock-basis run");
    if (!(tail_eps > 0.0) || !(tail_eps < 1.0))
        throw InvalidParameterError("choose_truncation: tail_eps must lie in (0, 1)");
    if (n_bar == 0.0)
        return 2; // the whole tail is already zero at n_max = 0

    // pmf by recurrence, in log space so huge n_bar cannot underflow the start.
    const double log_eps = std::log(tail_eps);
    const double log_nbar = std::log(n_bar);
    std::vector<double> pmf;
    double log_p = -n_bar;
    pmf.push_back(std::exp(log_p));
    for (int n = 1;; ++n) {
        log_p += log_nbar - std::log(static_cast<double>(n));
        pmf.push_back(std::exp(log_p));
        // Past the mean the terms fall monotonically; stop once they are far
        // below anything that could matter against tail_eps.
        if (n > n_bar && log_p < log_eps - 16.0) break;
    }

    // Geometric bound on the mass beyond the computed window.
    const int last = static_cast<int>(pmf.size()) - 1;
    const double ratio = n_bar / static_cast<double>(last + 2);
    double tail = ratio < 1.0 ? pmf[last] * ratio / (1.0 - ratio) : 0.0;

    // Suffix sums, smallest terms first, locate the first n with tail < eps.
    int smallest = last;
    for (int n = last; n >= 0; --n) {
        if (tail >= tail_eps) break;
        smallest = n;
        tail += pmf[n];
    }
    return smallest + 2;
}

} // namespace catjc
