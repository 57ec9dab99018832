// test_tcl.cpp — TCL2 machinery: correlation function, kernel, inner integral
// against quadrature oracles, and the fidelity curve against closed forms

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entpres/core.hpp"
#include "entpres/pulse.hpp"
#include "entpres/quadrature.hpp"
#include "entpres/tcl.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace entpres;
using tcl::Complex;
using tcl::TclProblem;

namespace {

const ReservoirSpec kUnit{1.0, 1.0, 0.0};       // gamma0 = Gamma = 1
const ReservoirSpec kNarrow{1.0, 10.0, 0.0};    // Gamma = 10*gamma0

std::vector<double> linear_grid(double t_max, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k)
        g[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
    return g;
}

// Brute-force inner integral via adaptive Simpson on the sampled kernel,
// split at the s-space images of the pulse edges.
double inner_by_quadrature(const TclProblem& p, double tau) {
    std::vector<double> cuts;
    for (double b : pulse::breakpoints(p.control, 0.0, tau)) cuts.push_back(tau - b);
    return quad::integrate_piecewise([&](double s) { return tcl::kernel(p, s, tau); }, 0.0, tau,
                                     cuts, 1e-12);
}

} // namespace

TEST_CASE("correlation function: closed form and numeric cross-check") {
    CHECK(tcl::correlation(kUnit, 0.0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(tcl::correlation(kNarrow, 0.3).real() ==
          doctest::Approx(5.0 * std::exp(-3.0)).epsilon(1e-14));
    CHECK(std::abs(tcl::correlation(kNarrow, 0.3).imag()) < 1e-14);

    // Finite-window quadrature converges like the Lorentzian tail: at
    // W = 40*Gamma the relative error is ~1e-3, at W = 400*Gamma ~1e-5.
    for (double s : {0.1, 0.5, 1.2}) {
        const Complex exact = tcl::correlation(kUnit, s);
        const Complex wide = tcl::correlation_numeric(kUnit, s, 40.0);
        const Complex wider = tcl::correlation_numeric(kUnit, s, 400.0);
        CHECK(std::abs(wide - exact) / std::abs(exact) < 2e-3);
        CHECK(std::abs(wider - exact) / std::abs(exact) < 1e-4);
        CHECK(std::abs(wide.imag()) < 2e-3 * std::abs(exact)); // odd part integrates away
    }
}

TEST_CASE("kernel: no-control form, s=0 value, constant-rate modulation") {
    const TclProblem plain(1.0, kUnit, pulse::NoControl{});
    // eta*gamma0*Gamma*exp(-Gamma*s) with everything at 1
    CHECK(tcl::kernel(plain, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tcl::kernel(plain, 0.7, 1.0) == doctest::Approx(std::exp(-0.7)).epsilon(1e-14));

    const TclProblem narrow(2.0, kNarrow, pulse::NoControl{});
    CHECK(tcl::kernel(narrow, 0.0, 0.5) == doctest::Approx(20.0).epsilon(1e-14));

    // width == period: lambda is the constant Lambda/T, so
    // Phi(tau)-Phi(tau-s) = lambda0*s and K picks up cos(lambda0*s)
    const double lambda0 = 2.0 * M_PI; // Lambda = 0.2*pi at T = width = 0.1
    const TclProblem solid(1.0, kUnit, pulse::PulseTrain(0.1, 0.1, 0.2 * M_PI));
    for (double s : {0.05, 0.31, 0.62})
        CHECK(tcl::kernel(solid, s, 0.7) ==
              doctest::Approx(std::exp(-s) * std::cos(lambda0 * s)).epsilon(1e-12));

    CHECK_THROWS_AS(tcl::kernel(plain, -0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(tcl::kernel(plain, 1.1, 1.0), std::domain_error);
}

TEST_CASE("inner integral: closed forms with no control and constant rate") {
    const TclProblem plain(1.5, kNarrow, pulse::NoControl{});
    // eta*gamma0*(1 - exp(-Gamma*tau))
    for (double tau : {0.0, 0.05, 0.3, 2.0})
        CHECK(tcl::inner_integral(plain, tau) ==
              doctest::Approx(1.5 * (1.0 - std::exp(-10.0 * tau))).epsilon(1e-13));

    // constant rate lambda0: integral of Gamma*e^{-Gamma s} cos(lambda0 s)
    // = Gamma*(Gamma - e^{-Gamma tau}(Gamma cos(lambda0 tau) - lambda0 sin(lambda0 tau)))
    //   / (Gamma^2 + lambda0^2)
    const double G = 10.0, l0 = 2.0 * M_PI / 0.1; // Lambda = 2*pi at T = width = 0.1
    const TclProblem solid(1.0, kNarrow, pulse::PulseTrain(0.1, 0.1, 2.0 * M_PI));
    for (double tau : {0.07, 0.4, 1.3}) {
        const double expected =
            G *
            (G - std::exp(-G * tau) * (G * std::cos(l0 * tau) - l0 * std::sin(l0 * tau))) /
            (G * G + l0 * l0);
        CHECK(tcl::inner_integral(solid, tau) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("inner integral matches sampled quadrature on random pulse trains") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int k = 0; k < 12; ++k) {
        const double period = 0.05 + 0.25 * uni(rng);
        const double width = period * (0.2 + 0.8 * uni(rng));
        const double area = 3.0 * uni(rng);
        const double eta = 0.5 + 1.5 * uni(rng);
        const ReservoirSpec res{1.0, 1.0 + 9.0 * uni(rng), 0.0};
        const TclProblem p(eta, res, pulse::PulseTrain(period, width, area));
        const double tau = 0.3 + 1.2 * uni(rng);
        const double analytic = tcl::inner_integral(p, tau);
        const double sampled = inner_by_quadrature(p, tau);
        CHECK(analytic == doctest::Approx(sampled).epsilon(1e-9));
    }
}

TEST_CASE("fidelity curve: no control reproduces the closed form") {
    const auto grid = linear_grid(3.0, 61);
    for (double eta : {1.0, 2.0}) {
        for (const auto* res : {&kUnit, &kNarrow}) {
            const TclProblem p(eta, *res, pulse::NoControl{});
            const auto curve = tcl::tcl_fidelity_curve(p, grid);
            REQUIRE(curve.times.size() == grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double expected = tcl::closed_form_no_control(eta, *res, grid[i]);
                CHECK(curve.values[i] == doctest::Approx(expected).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("fidelity curve: frozen reference values") {
    // Bell state on the symmetric pair (eta = 2), Gamma = 10*gamma0, no control
    const TclProblem bell(2.0, kNarrow, pulse::NoControl{});
    CHECK(tcl::tcl_fidelity_at(bell, 1.0) ==
          doctest::Approx(0.16529738731681762).epsilon(1e-9));

    // eta = 1, Gamma = gamma0, t = 3
    const TclProblem unit(1.0, kUnit, pulse::NoControl{});
    CHECK(tcl::tcl_fidelity_at(unit, 3.0) ==
          doctest::Approx(0.12876231823955772).epsilon(1e-9));

    // pulsed: Lambda = pi, T = width = 0.05, Gamma = gamma0, eta = 1, t = 3
    const TclProblem pulsed(1.0, kUnit, pulse::PulseTrain(0.05, 0.05, M_PI));
    CHECK(tcl::tcl_fidelity_at(pulsed, 3.0) ==
          doctest::Approx(0.999000274698995).epsilon(1e-9));
}

TEST_CASE("fidelity curve: value is independent of the grid partition") {
    const TclProblem p(2.0, kNarrow, pulse::PulseTrain(0.1, 0.05, M_PI));
    const double direct = tcl::tcl_fidelity_at(p, 1.7);
    const auto coarse = tcl::tcl_fidelity_curve(p, linear_grid(1.7, 18));
    const auto fine = tcl::tcl_fidelity_curve(p, linear_grid(1.7, 171));
    CHECK(coarse.values.back() == doctest::Approx(direct).epsilon(1e-10));
    CHECK(fine.values.back() == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("zero-area pulses are exactly no control") {
    const TclProblem off(2.0, kNarrow, pulse::PulseTrain(0.1, 0.05, 0.0));
    const TclProblem none(2.0, kNarrow, pulse::NoControl{});
    for (double t : {0.4, 1.0, 2.5})
        CHECK(tcl::tcl_fidelity_at(off, t) ==
              doctest::Approx(tcl::tcl_fidelity_at(none, t)).epsilon(1e-12));
}

TEST_CASE("uncontrolled decay is strictly decreasing; modulation slows it") {
    const TclProblem none(2.0, kNarrow, pulse::NoControl{});
    const auto curve = tcl::tcl_fidelity_curve(none, linear_grid(2.0, 41));
    for (std::size_t i = 1; i < curve.values.size(); ++i)
        CHECK(curve.values[i] < curve.values[i - 1]);

    const TclProblem pulsed(2.0, kNarrow, pulse::PulseTrain(0.05, 0.05, M_PI));
    CHECK(tcl::tcl_fidelity_at(pulsed, 2.0) > tcl::tcl_fidelity_at(none, 2.0));
}

TEST_CASE("pulse-area trend on contiguous trains (T = width = 0.1)") {
    // With contiguous pulses the modulation is a constant detuning
    // lambda0 = Lambda/T; larger detuning filters the kernel harder, so the
    // fidelity at fixed t must increase with Lambda.
    const auto fid = [&](double area) {
        const TclProblem p(1.0, kUnit, pulse::PulseTrain(0.1, 0.1, area));
        return tcl::tcl_fidelity_at(p, 3.0);
    };
    const double f_half = fid(M_PI / 2), f_pi = fid(M_PI), f_two = fid(2.0 * M_PI);
    CHECK(f_half == doctest::Approx(0.9838196233).epsilon(1e-6));
    CHECK(f_pi == doctest::Approx(0.9960115707).epsilon(1e-6));
    CHECK(f_two == doctest::Approx(0.9990002747).epsilon(1e-6));
    CHECK(f_half < f_pi);
    CHECK(f_pi < f_two);
}

TEST_CASE("wideband reservoir approaches the Markov line exp(-eta*gamma0*t)") {
    const ReservoirSpec wide{1.0, 1e4, 0.0};
    const TclProblem p(2.0, wide, pulse::NoControl{});
    for (double t : {0.5, 1.0, 2.0}) {
        const double markov = std::exp(-2.0 * t);
        CHECK(std::abs(tcl::tcl_fidelity_at(p, t) - markov) / markov < 1e-3);
    }
}

TEST_CASE("grid validation: must start at zero and increase strictly") {
    const TclProblem p(1.0, kUnit, pulse::NoControl{});
    CHECK_THROWS_AS(tcl::tcl_fidelity_curve(p, {0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(tcl::tcl_fidelity_curve(p, {0.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(tcl::tcl_fidelity_curve(p, {}), std::domain_error);
    CHECK_THROWS_AS(tcl::tcl_fidelity_at(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(TclProblem(-1.0, kUnit, pulse::NoControl{}), std::invalid_argument);
}
