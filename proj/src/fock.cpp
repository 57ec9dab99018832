// fock.cpp — two-mode Fock-space algebra: sigma-bar, eta, fidelity, EWL states

#include "entpres/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>

namespace entpres::fock {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenClamp = 1e-10; // eigenvalues in [-clamp, 0) are noise, below is an error
constexpr double kSupportTol = 1e-14; // amplitude below this does not count as occupied

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Hermitian square root with the noise-vs-invalid eigenvalue policy.
Matrix sqrt_psd(const Matrix& H, const char* who) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error(std::string(who) + ": eigensolve failed");
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -kEigenClamp) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%s: eigenvalue %.3e below -1e-10, not a valid state", who, ev(i));
            throw std::invalid_argument(buf);
        }
        ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

// Largest single-mode level carrying weight in sigma (rows or columns).
std::size_t max_occupied_level(const DensityMatrix& sigma) {
    const FockBasis& basis = sigma.basis();
    const Matrix& m = sigma.entries();
    std::size_t max_level = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double w = std::max(m.row(idx(i)).cwiseAbs().maxCoeff(),
                                  m.col(idx(i)).cwiseAbs().maxCoeff());
        if (w > kSupportTol) {
            const auto [nA, nB] = basis.occupations(i);
            max_level = std::max({max_level, nA, nB});
        }
    }
    return max_level;
}

} // namespace

// --------------------------- states -----------------------------------------

StateVector::StateVector(FockBasis basis, Vector amplitudes, bool normalize)
    : basis_(basis), amp_(std::move(amplitudes)) {
    if (amp_.size() != idx(basis_.size()))
        throw std::invalid_argument("StateVector: amplitude length does not match basis size");
    if (normalize) {
        const double n = amp_.norm();
        if (n < 1e-300) throw std::invalid_argument("StateVector: cannot normalize the zero vector");
        amp_ /= n;
    }
}

StateVector::StateVector(FockBasis basis, Vector amplitudes)
    : StateVector(basis, std::move(amplitudes), true) {}

StateVector StateVector::raw(FockBasis basis, Vector amplitudes) {
    return StateVector(basis, std::move(amplitudes), false);
}

DensityMatrix::DensityMatrix(FockBasis basis, Matrix entries)
    : basis_(basis), m_(std::move(entries)) {
    if (m_.rows() != idx(basis_.size()) || m_.cols() != idx(basis_.size()))
        throw std::invalid_argument("DensityMatrix: entries do not match basis size");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(m_.trace() - Complex(1.0)) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
    m_ = 0.5 * (m_ + m_.adjoint().eval()); // symmetrize away the residual noise
}

DensityMatrix DensityMatrix::from_pure(const StateVector& chi) {
    return DensityMatrix(chi.basis(), chi.amplitudes() * chi.amplitudes().adjoint());
}

OperatorMatrix::OperatorMatrix(FockBasis basis, Matrix entries)
    : basis_(basis), m_(std::move(entries)) {
    if (m_.rows() != idx(basis_.size()) || m_.cols() != idx(basis_.size()))
        throw std::invalid_argument("OperatorMatrix: entries do not match basis size");
}

// --------------------------- ladder algebra ---------------------------------

Matrix lowering(std::size_t d) {
    if (d == 0) throw std::invalid_argument("lowering: dimension must be > 0");
    Matrix a = Matrix::Zero(idx(d), idx(d));
    for (std::size_t n = 1; n < d; ++n)
        a(idx(n - 1), idx(n)) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix collective_lowering(const FockBasis& basis) {
    const std::size_t d = basis.per_mode_dim();
    Matrix A = Matrix::Zero(idx(basis.size()), idx(basis.size()));
    // A = a (x) I + I (x) a in the n_A-major ordering
    for (std::size_t nA = 0; nA < d; ++nA)
        for (std::size_t nB = 0; nB < d; ++nB) {
            const std::size_t col = basis.index(nA, nB);
            if (nA > 0) A(idx(basis.index(nA - 1, nB)), idx(col)) += std::sqrt(static_cast<double>(nA));
            if (nB > 0) A(idx(basis.index(nA, nB - 1)), idx(col)) += std::sqrt(static_cast<double>(nB));
        }
    return A;
}

StateVector apply_collective_lowering(const StateVector& state) {
    const FockBasis& basis = state.basis();
    const std::size_t d = basis.per_mode_dim();
    Vector out = Vector::Zero(idx(basis.size()));
    for (std::size_t nA = 0; nA < d; ++nA)
        for (std::size_t nB = 0; nB < d; ++nB) {
            const Complex c = state.amplitude(nA, nB);
            if (c == Complex(0.0)) continue;
            if (nA > 0) out(idx(basis.index(nA - 1, nB))) += std::sqrt(static_cast<double>(nA)) * c;
            if (nB > 0) out(idx(basis.index(nA, nB - 1))) += std::sqrt(static_cast<double>(nB)) * c;
        }
    return StateVector::raw(basis, std::move(out));
}

OperatorMatrix sigma_bar(const DensityMatrix& sigma) {
    const FockBasis& basis = sigma.basis();
    const std::size_t required = max_occupied_level(sigma) + 2;
    if (basis.per_mode_dim() < required) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "sigma_bar: raising would cross the truncation edge; need per_mode_dim >= %zu",
                      required);
        throw TruncationError(buf, required);
    }
    const Matrix A = collective_lowering(basis);
    const Matrix Ad = A.adjoint();
    // [(A^dag), A sigma] = A^dag A sigma - A sigma A^dag
    return OperatorMatrix(basis, Ad * A * sigma.entries() - A * sigma.entries() * Ad);
}

double eta(const StateVector& chi) {
    const OperatorMatrix sb = sigma_bar(DensityMatrix::from_pure(chi));
    const Complex value = chi.amplitudes().dot(sb.entries() * chi.amplitudes());
    if (std::abs(value.imag()) > 1e-12)
        throw std::runtime_error("eta: expectation has imaginary part beyond 1e-12");
    return value.real();
}

double eta_variance(const StateVector& chi) {
    const StateVector lowered = apply_collective_lowering(chi);
    const Complex mean = chi.amplitudes().dot(lowered.amplitudes()); // <chi|A|chi>
    const double second = lowered.amplitudes().squaredNorm();        // <chi|A^dag A|chi>
    return second - std::norm(mean);
}

// --------------------------- fidelity ---------------------------------------

double fidelity(const DensityMatrix& x, const DensityMatrix& y) {
    if (x.basis() != y.basis()) throw std::invalid_argument("fidelity: basis mismatch");
    const Matrix sx = sqrt_psd(x.entries(), "fidelity");
    const Matrix inner = sqrt_psd(sx * y.entries() * sx, "fidelity");
    const double tr = inner.trace().real();
    const double raw = tr * tr;
    if (raw < -kEigenClamp || raw > 1.0 + kEigenClamp)
        throw std::invalid_argument("fidelity: raw value outside [0,1] beyond tolerance");
    return std::min(std::max(raw, 0.0), 1.0);
}

// --------------------------- EWL states -------------------------------------

DensityMatrix ewl_state(double r, const StateVector& epsilon) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("ewl_state: r must lie in [0, 1]");
    const FockBasis& basis = epsilon.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [nA, nB] = basis.occupations(i);
        if ((nA > 1 || nB > 1) && std::abs(epsilon.amplitudes()(idx(i))) > kSupportTol)
            throw std::domain_error("ewl_state: epsilon has support outside the qubit block");
    }
    Matrix m = r * (epsilon.amplitudes() * epsilon.amplitudes().adjoint());
    for (std::size_t nA = 0; nA <= 1; ++nA)
        for (std::size_t nB = 0; nB <= 1; ++nB) {
            const Eigen::Index k = idx(basis.index(nA, nB));
            m(k, k) += (1.0 - r) / 4.0;
        }
    return DensityMatrix(basis, std::move(m));
}

} // namespace entpres::fock
