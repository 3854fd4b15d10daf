#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "catjc/errors.hpp"
#include "catjc/squeezing_metrics.hpp"
#include "oracles.hpp"

using namespace catjc;
using std::complex;

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kOptimum = 1.0 - 1.4142135623730951;

QubitDensityMatrix bloch(double x, double y, double z) {
    QubitDensityMatrix rho;
    rho.rho_ee = (1.0 + z) / 2.0;
    rho.rho_eg = {x / 2.0, -y / 2.0};
    return rho;
}

} // namespace

TEST_CASE("measurement probabilities follow the density matrix") {
    QubitDensityMatrix rho;
    rho.rho_ee = 0.3;
    rho.rho_eg = {0.1, -0.2};
    const PauliProbabilities p = pauli_probabilities(rho);
    CHECK(p.x[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(p.x[1] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(p.y[0] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(p.y[1] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(p.z[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(p.z[1] == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("tiny probability excursions clamp and larger ones throw") {
    QubitDensityMatrix rho;
    rho.rho_ee = 1.0 + 5e-11;
    rho.rho_eg = {};
    const PauliProbabilities p = pauli_probabilities(rho);
    CHECK(p.z[0] == 1.0);
    CHECK(p.z[1] == 0.0);

    rho.rho_ee = 1.0 + 1e-9;
    CHECK_THROWS_AS(pauli_probabilities(rho), CorruptStateError);

    rho.rho_ee = 0.5;
    rho.rho_eg = {0.5 + 1e-9, 0.0};
    CHECK_THROWS_AS(pauli_probabilities(rho), CorruptStateError);
    rho.rho_eg = {0.5 + 2e-11, 0.0};
    CHECK(pauli_probabilities(rho).x[0] == 1.0);
}

TEST_CASE("entropies are Shannon in nats") {
    QubitDensityMatrix rho;
    rho.rho_ee = 0.3;
    rho.rho_eg = {0.1, -0.2};
    const ShannonEntropies h = shannon_entropies(rho);
    CHECK(h.x == doctest::Approx(refcheck::entropy2(0.6)).epsilon(1e-14));
    CHECK(h.y == doctest::Approx(refcheck::entropy2(0.7)).epsilon(1e-14));
    CHECK(h.z == doctest::Approx(refcheck::entropy2(0.3)).epsilon(1e-14));

    const ShannonEntropies pin = shannon_entropies(bloch(0.0, 0.0, 1.0));
    CHECK(pin.z == 0.0); // 0 ln 0 := 0
    CHECK(pin.x == doctest::Approx(kLn2).epsilon(1e-15));
}

TEST_CASE("squeeze factors hit the optimum exactly on transverse eigenstates") {
    const ShannonEntropies hx = shannon_entropies(bloch(1.0, 0.0, 0.0));
    const auto [ex, ey] = entropy_squeeze_factors(hx.x, hx.y, hx.z);
    CHECK(ex == doctest::Approx(kOptimum).epsilon(1e-15));
    CHECK(ey == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));

    const ShannonEntropies hy = shannon_entropies(bloch(0.0, 1.0, 0.0));
    const auto [ex2, ey2] = entropy_squeeze_factors(hy.x, hy.y, hy.z);
    CHECK(ey2 == doctest::Approx(kOptimum).epsilon(1e-15));
    CHECK(ex2 == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));

    // polar eigenstates zero both factors: e^{ln 2} = 2 = 2 e^{-0/2}
    const ShannonEntropies hz = shannon_entropies(bloch(0.0, 0.0, -1.0));
    const auto [ex3, ey3] = entropy_squeeze_factors(hz.x, hz.y, hz.z);
    CHECK(ex3 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ey3 == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("factors stay inside their analytic range on random states") {
    std::mt19937 gen(991u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> r01(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        double x = u(gen), y = u(gen), z = u(gen);
        const double len = std::sqrt(x * x + y * y + z * z);
        if (len == 0.0) continue;
        const double r = r01(gen); // mixed states too
        x *= r / len;
        y *= r / len;
        z *= r / len;
        const QubitDensityMatrix rho = bloch(x, y, z);
        const ShannonEntropies h = shannon_entropies(rho);
        const double slack = check_entropic_bound(h.x, h.y, h.z);
        CHECK(slack >= -kEntropyBoundSlop);
        const auto [ex, ey] = entropy_squeeze_factors(h.x, h.y, h.z);
        CHECK(ex >= kOptimum - 1e-12);
        CHECK(ex <= 2.0 - std::sqrt(2.0) + 1e-12);
        CHECK(ey >= kOptimum - 1e-12);
        CHECK(ey <= 2.0 - std::sqrt(2.0) + 1e-12);
    }
}

TEST_CASE("entropic bound rejects impossible entropy triples") {
    CHECK_THROWS_AS(check_entropic_bound(0.1, 0.1, 0.1), InvariantViolationError);
    CHECK_NOTHROW(check_entropic_bound(kLn2, kLn2, kLn2));
    CHECK(check_entropic_bound(kLn2, kLn2, kLn2) == doctest::Approx(kLn2).epsilon(1e-14));
    // equality case of the bound must pass with zero slack
    const ShannonEntropies h = shannon_entropies(bloch(1.0, 0.0, 0.0));
    CHECK(check_entropic_bound(h.x, h.y, h.z) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("variance factors follow the expectation values") {
    const auto [vx, vy] = variance_squeeze_factors(bloch(1.0, 0.0, 0.0));
    CHECK(vx == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(vy == doctest::Approx(1.0).epsilon(1e-14));

    QubitDensityMatrix rho;
    rho.rho_ee = 0.3;
    rho.rho_eg = {0.1, -0.2};
    const auto [wx, wy] = variance_squeeze_factors(rho);
    const double sz = 0.3 - 0.7;
    CHECK(wx == doctest::Approx(std::sqrt(1.0 - 0.04) - std::sqrt(std::abs(sz) / 2.0))
                    .epsilon(1e-14));
    CHECK(wy == doctest::Approx(std::sqrt(1.0 - 0.16) - std::sqrt(std::abs(sz) / 2.0))
                    .epsilon(1e-14));
}

TEST_CASE("reaching the optimum pins the entropies") {
    // e_y = optimum forces H_y ~ 0 and H_z ~ ln 2; quantitative version used
    // as the acceptance probe, checked here on the exact optimum state
    const QubitDensityMatrix rho = bloch(0.0, 1.0, 0.0);
    const SqueezingSample s = sample_at(rho, 0.0);
    const double delta = s.e_y - kOptimum;
    REQUIRE(delta <= 1e-12);
    CHECK(s.h_y <= delta + 1e-12);
    CHECK(kLn2 - s.h_z <= std::sqrt(2.0) * delta + 1e-12);
}

TEST_CASE("sample bundles every metric consistently") {
    QubitDensityMatrix rho;
    rho.rho_ee = 0.42;
    rho.rho_eg = {0.17, -0.23};
    const SqueezingSample s = sample_at(rho, 3.25);
    CHECK(s.tau == 3.25);
    CHECK(s.rho_ee == 0.42);
    CHECK(s.rho_eg == rho.rho_eg);
    CHECK(s.exp_x == doctest::Approx(0.34).epsilon(1e-14));
    CHECK(s.exp_y == doctest::Approx(0.46).epsilon(1e-14));
    CHECK(s.exp_z == doctest::Approx(-0.16).epsilon(1e-14));
    CHECK(s.dh_x == doctest::Approx(std::exp(s.h_x)).epsilon(1e-14));
    CHECK(s.dh_y == doctest::Approx(std::exp(s.h_y)).epsilon(1e-14));
    CHECK(s.dh_z == doctest::Approx(std::exp(s.h_z)).epsilon(1e-14));
    CHECK(s.e_x == doctest::Approx(s.dh_x - 2.0 / std::sqrt(s.dh_z)).epsilon(1e-13));
    CHECK(s.e_y == doctest::Approx(s.dh_y - 2.0 / std::sqrt(s.dh_z)).epsilon(1e-13));
    CHECK(s.entropy_sum_slack
          == doctest::Approx(s.h_x + s.h_y + s.h_z - 2.0 * kLn2).epsilon(1e-12));
    const auto [vx, vy] = variance_squeeze_factors(rho);
    CHECK(s.v_x == vx);
    CHECK(s.v_y == vy);
}
