// test_fock.cpp — two-mode Fock algebra: lowering, sigma-bar, eta, fidelity, EWL

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entpres/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace entpres::fock;

namespace {

const FockBasis kBasis(4);

StateVector make_state(std::initializer_list<std::tuple<std::size_t, std::size_t, Complex>> terms,
                       const FockBasis& basis = kBasis) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [nA, nB, c] : terms) v(static_cast<Eigen::Index>(basis.index(nA, nB))) = c;
    return StateVector(basis, std::move(v));
}

// Random normalized state with support restricted to levels <= max_level.
StateVector random_state(std::mt19937& rng, std::size_t max_level, const FockBasis& basis = kBasis) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [nA, nB] = basis.occupations(i);
        if (nA <= max_level && nB <= max_level)
            v(static_cast<Eigen::Index>(i)) = Complex(gauss(rng), gauss(rng));
    }
    return StateVector(basis, std::move(v));
}

DensityMatrix random_density(std::mt19937& rng, const FockBasis& basis = kBasis) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(basis.size());
    Matrix r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix rho = r * r.adjoint();
    rho /= rho.trace();
    return DensityMatrix(basis, std::move(rho));
}

} // namespace

TEST_CASE("basis ordering is lexicographic with n_A major") {
    CHECK(kBasis.size() == 16);
    CHECK(kBasis.index(0, 0) == 0);
    CHECK(kBasis.index(0, 3) == 3);
    CHECK(kBasis.index(1, 0) == 4);
    CHECK(kBasis.index(3, 3) == 15);
    const auto [nA, nB] = kBasis.occupations(7);
    CHECK(nA == 1);
    CHECK(nB == 3);
    CHECK_THROWS_AS(kBasis.index(4, 0), std::out_of_range);
    CHECK_THROWS_AS((FockBasis(1)), std::invalid_argument);
}

TEST_CASE("state vectors normalize at construction and reject the zero vector") {
    const auto chi = make_state({{1, 1, 2.0}, {0, 0, 2.0}});
    CHECK(chi.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(chi.amplitude(1, 1).real() == doctest::Approx(M_SQRT1_2));
    CHECK_THROWS_AS(StateVector(kBasis, Vector::Zero(16)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(kBasis, Vector::Zero(9)), std::invalid_argument);
}

TEST_CASE("collective lowering: symmetric, dark, and qutrit states") {
    const Complex rt2(M_SQRT2);

    const auto sym = apply_collective_lowering(make_state({{1, 0, 1.0}, {0, 1, 1.0}}));
    CHECK(std::abs(sym.amplitudes()(0) - rt2) < 1e-14); // sqrt2 |00>
    CHECK(sym.norm() == doctest::Approx(M_SQRT2));

    const auto dark = apply_collective_lowering(make_state({{1, 0, 1.0}, {0, 1, -1.0}}));
    CHECK(dark.norm() < 1e-14);

    // alpha|22> + beta|11> + gamma|00> -> alpha*sqrt2*(|12>+|21>) + beta*(|01>+|10>)
    const Complex a(0.3, 0.4), b(0.5, -0.2), g(0.1, 0.6);
    const double n0 = std::sqrt(std::norm(a) + std::norm(b) + std::norm(g));
    const auto low = apply_collective_lowering(make_state({{2, 2, a}, {1, 1, b}, {0, 0, g}}));
    CHECK(std::abs(low.amplitude(1, 2) - M_SQRT2 * a / n0) < 1e-14);
    CHECK(std::abs(low.amplitude(2, 1) - M_SQRT2 * a / n0) < 1e-14);
    CHECK(std::abs(low.amplitude(0, 1) - b / n0) < 1e-14);
    CHECK(std::abs(low.amplitude(1, 0) - b / n0) < 1e-14);
    // norm^2 = 4|alpha|^2 + 2|beta|^2, the qutrit leakage formula
    const double expected = (4.0 * std::norm(a) + 2.0 * std::norm(b)) / (n0 * n0);
    CHECK(low.amplitudes().squaredNorm() == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("collective lowering drops total occupation by exactly one") {
    std::mt19937 rng(71);
    const auto chi = random_state(rng, 2);
    const auto low = apply_collective_lowering(chi);
    for (std::size_t i = 0; i < kBasis.size(); ++i) {
        if (std::abs(low.amplitudes()(static_cast<Eigen::Index>(i))) < 1e-14) continue;
        const auto [nA, nB] = kBasis.occupations(i);
        // every output ket must be reachable from an occupied input ket
        bool reachable = false;
        for (auto [dA, dB] : {std::pair<int, int>{1, 0}, std::pair<int, int>{0, 1}}) {
            const std::size_t mA = nA + dA, mB = nB + dB;
            if (mA < 4 && mB < 4 && std::abs(chi.amplitude(mA, mB)) > 1e-14) reachable = true;
        }
        CHECK(reachable);
    }
}

TEST_CASE("sigma_bar: vacuum annihilates, Bell expectation is 1, EWL r=0 closed form") {
    const auto vac = sigma_bar(DensityMatrix::from_pure(make_state({{0, 0, 1.0}})));
    CHECK(vac.entries().cwiseAbs().maxCoeff() < 1e-14);

    const auto phi = make_state({{1, 1, 1.0}, {0, 0, 1.0}});
    const auto sb = sigma_bar(DensityMatrix::from_pure(phi));
    const Complex expect = phi.amplitudes().dot(sb.entries() * phi.amplitudes());
    CHECK(expect.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(expect.imag()) < 1e-14);

    // totally mixed qubit block: sigma_bar = (|theta><11| - |00><00|)/2,
    // |theta> = |11> + (|02> + |20>)/sqrt2
    const auto mixed = ewl_state(0.0, phi);
    const auto sbm = sigma_bar(mixed);
    Matrix expected = Matrix::Zero(16, 16);
    const auto id = [&](std::size_t a, std::size_t b) {
        return static_cast<Eigen::Index>(kBasis.index(a, b));
    };
    expected(id(1, 1), id(1, 1)) = 0.5;
    expected(id(0, 2), id(1, 1)) = 0.5 * M_SQRT1_2;
    expected(id(2, 0), id(1, 1)) = 0.5 * M_SQRT1_2;
    expected(id(0, 0), id(0, 0)) = -0.5;
    CHECK((sbm.entries() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("sigma_bar reports the dimension needed when truncation would bite") {
    const FockBasis small(3);
    const auto qutrit = make_state({{2, 2, 1.0}, {1, 1, 1.0}, {0, 0, 2.0}}, small);
    try {
        sigma_bar(DensityMatrix::from_pure(qutrit));
        FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
        CHECK(e.required_dim() == 4);
    }
    // the same state fits at d = 4
    const auto ok = make_state({{2, 2, 1.0}, {1, 1, 1.0}, {0, 0, 2.0}});
    CHECK_NOTHROW(sigma_bar(DensityMatrix::from_pure(ok)));
}

TEST_CASE("eta reproduces the closed formulas") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> uni(0.1, 0.9);

    SUBCASE("alpha|11> + beta|00> gives 2|alpha|^2") {
        for (int k = 0; k < 5; ++k) {
            const double a2 = uni(rng);
            const Complex a(std::sqrt(a2)), b(std::sqrt(1 - a2));
            CHECK(eta(make_state({{1, 1, a}, {0, 0, b}})) == doctest::Approx(2 * a2).epsilon(1e-12));
        }
    }
    SUBCASE("alpha|10> + beta|01> gives |alpha+beta|^2") {
        for (int k = 0; k < 5; ++k) {
            const double a2 = uni(rng);
            const Complex a(std::sqrt(a2)), b(std::sqrt(1 - a2) * Complex(0.6, 0.8));
            CHECK(eta(make_state({{1, 0, a}, {0, 1, b}})) ==
                  doctest::Approx(std::norm(a + b)).epsilon(1e-12));
        }
    }
    SUBCASE("paper examples") {
        CHECK(eta(make_state({{1, 1, 1.0}, {0, 0, 1.0}})) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eta(make_state({{1, 0, 1.0}, {0, 1, 1.0}})) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(eta(make_state({{2, 2, 1.0}, {1, 1, 1.0}, {0, 0, 2.0}})) ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eta(make_state({{1, 0, 1.0}, {0, 1, -1.0}})) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("eta equals the collective-lowering variance on 100 random states") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 100; ++k) {
        const auto chi = random_state(rng, 2);
        const double via_sigma_bar = eta(chi);
        const double via_variance = eta_variance(chi);
        CHECK(via_sigma_bar == doctest::Approx(via_variance).epsilon(1e-12));
        CHECK(via_sigma_bar >= -1e-12);
    }
}

TEST_CASE("eta is invariant under a global phase") {
    std::mt19937 rng(5);
    const auto chi = random_state(rng, 2);
    const Complex phase = std::polar(1.0, 1.2345);
    const auto rotated = StateVector(kBasis, phase * chi.amplitudes());
    CHECK(eta(chi) == doctest::Approx(eta(rotated)).epsilon(1e-12));
}

TEST_CASE("fidelity: identity, orthogonality, pure-state shortcut, symmetry") {
    std::mt19937 rng(99);

    const auto rho = random_density(rng);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

    const auto p10 = DensityMatrix::from_pure(make_state({{1, 0, 1.0}}));
    const auto p01 = DensityMatrix::from_pure(make_state({{0, 1, 1.0}}));
    CHECK(fidelity(p10, p01) == doctest::Approx(0.0).epsilon(1e-12));

    SUBCASE("pure first argument reduces to <chi|rho|chi> on 20 random mixed states") {
        // the Uhlmann square root turns ~1e-16 eigenvalue noise on the zero modes
        // into ~1e-8 per mode, so ~1e-6 is the realistic agreement here
        for (int k = 0; k < 20; ++k) {
            const auto chi = random_state(rng, 3);
            const auto mixed = random_density(rng);
            const double direct =
                chi.amplitudes().dot(mixed.entries() * chi.amplitudes()).real();
            const double f = fidelity(DensityMatrix::from_pure(chi), mixed);
            CHECK(f == doctest::Approx(direct).epsilon(1e-6));
        }
    }
    SUBCASE("symmetric in its arguments") {
        for (int k = 0; k < 10; ++k) {
            const auto x = random_density(rng);
            const auto y = random_density(rng);
            CHECK(fidelity(x, y) == doctest::Approx(fidelity(y, x)).epsilon(1e-10));
        }
    }
    SUBCASE("pure-pure equals squared overlap") {
        // a rank-one product rho*sigma*rho has eigenvalue noise ~1e-16 on the zero
        // modes; the square root in the Uhlmann formula lifts that to ~1e-8, so the
        // achievable agreement here is ~1e-6, not machine precision
        for (int k = 0; k < 10; ++k) {
            const auto chi = random_state(rng, 3);
            const auto phi = random_state(rng, 3);
            const double overlap = std::norm(chi.amplitudes().dot(phi.amplitudes()));
            CHECK(fidelity(DensityMatrix::from_pure(chi), DensityMatrix::from_pure(phi)) ==
                  doctest::Approx(overlap).epsilon(1e-6));
        }
    }
}

TEST_CASE("fidelity distinguishes numerical noise from invalid states") {
    // eigenvalue at -5e-11: inside the clamp band, fine
    Matrix near = Matrix::Zero(16, 16);
    near(0, 0) = 1.0 + 5e-13;
    near(1, 1) = -5e-13;
    const DensityMatrix ok(kBasis, near);
    CHECK_NOTHROW(fidelity(ok, ok));

    // eigenvalue at -1e-3: genuinely invalid (still Hermitian, trace 1)
    Matrix bad = Matrix::Zero(16, 16);
    bad(0, 0) = 1.0 + 1e-3;
    bad(1, 1) = -1e-3;
    const DensityMatrix invalid(kBasis, bad);
    CHECK_THROWS_AS(fidelity(invalid, invalid), std::invalid_argument);
}

TEST_CASE("extended Werner-like states") {
    const auto phi = make_state({{1, 1, 1.0}, {0, 0, 1.0}});

    SUBCASE("r=1 reduces to the pure projector") {
        const auto pure = ewl_state(1.0, phi);
        const auto proj = DensityMatrix::from_pure(phi);
        CHECK((pure.entries() - proj.entries()).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("r=0 is 1/4 on the qubit block") {
        const auto mixed = ewl_state(0.0, phi);
        CHECK(std::abs(mixed.entries()(0, 0) - Complex(0.25)) < 1e-14);
        CHECK(std::abs(mixed.entries()(5, 5) - Complex(0.25)) < 1e-14); // |11><11|
        CHECK(std::abs(mixed.entries()(10, 10)) < 1e-14);               // |22><22| empty
    }
    SUBCASE("r=1/2 Bell eigenvalues are {1/8, 1/8, 1/8, 5/8}") {
        const auto half = ewl_state(0.5, phi);
        Eigen::SelfAdjointEigenSolver<Matrix> es(half.entries());
        Eigen::VectorXd ev = es.eigenvalues().tail(4);
        CHECK(ev(0) == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(ev(1) == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(ev(2) == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(ev(3) == doctest::Approx(0.625).epsilon(1e-12));
    }
    SUBCASE("support outside the qubit block is rejected") {
        const auto qutrit = make_state({{2, 2, 1.0}, {0, 0, 1.0}});
        CHECK_THROWS_AS(ewl_state(0.5, qutrit), std::domain_error);
        CHECK_THROWS_AS(ewl_state(1.5, phi), std::invalid_argument);
    }
}
