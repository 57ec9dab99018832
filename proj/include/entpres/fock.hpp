// fock.hpp — truncated two-mode Fock space: states, collective lowering, the
// commutator operator sigma-bar, the leakage coefficient eta, and fidelity

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace entpres::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Raising past the truncation edge. Carries the minimum per-mode dimension
// that would make the requested operation exact.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, std::size_t required_dim)
        : std::runtime_error(what), required_dim_(required_dim) {}
    std::size_t required_dim() const { return required_dim_; }

private:
    std::size_t required_dim_;
};

// --------------------------- basis ------------------------------------------

// Two bosonic modes A and B, each truncated to occupations 0..d-1. Basis kets
// |n_A n_B> are ordered lexicographically with n_A as the major index:
// index = n_A*d + n_B. The ordering is frozen so serialized states stay portable.
class FockBasis {
public:
    explicit FockBasis(std::size_t per_mode_dim = 4) : d_(per_mode_dim) {
        if (d_ < 2) throw std::invalid_argument("FockBasis: per_mode_dim must be >= 2");
    }

    std::size_t per_mode_dim() const { return d_; }
    std::size_t mode_count() const { return 2; }
    std::size_t size() const { return d_ * d_; }

    std::size_t index(std::size_t nA, std::size_t nB) const {
        if (nA >= d_ || nB >= d_) throw std::out_of_range("FockBasis::index: occupation out of range");
        return nA * d_ + nB;
    }

    std::pair<std::size_t, std::size_t> occupations(std::size_t index) const {
        if (index >= size()) throw std::out_of_range("FockBasis::occupations: index out of range");
        return {index / d_, index % d_};
    }

    bool operator==(const FockBasis& other) const { return d_ == other.d_; }
    bool operator!=(const FockBasis& other) const { return !(*this == other); }

private:
    std::size_t d_;
};

// --------------------------- states and operators ---------------------------

// Pure state on the two-mode basis. The public constructor normalizes (and
// rejects the zero vector); operator outputs that are legitimately
// unnormalized or zero are built through the `raw` factory.
class StateVector {
public:
    StateVector(FockBasis basis, Vector amplitudes);

    static StateVector raw(FockBasis basis, Vector amplitudes);

    const FockBasis& basis() const { return basis_; }
    const Vector& amplitudes() const { return amp_; }
    Complex amplitude(std::size_t nA, std::size_t nB) const {
        return amp_(static_cast<Eigen::Index>(basis_.index(nA, nB)));
    }
    double norm() const { return amp_.norm(); }

private:
    StateVector(FockBasis basis, Vector amplitudes, bool normalize);

    FockBasis basis_;
    Vector amp_;
};

// Physical density matrix: Hermitian within 1e-12, unit trace within 1e-12.
// Positivity is not enforced here; the fidelity functional checks it where it
// matters and distinguishes numerical noise from genuinely invalid input.
class DensityMatrix {
public:
    DensityMatrix(FockBasis basis, Matrix entries);

    static DensityMatrix from_pure(const StateVector& chi);

    const FockBasis& basis() const { return basis_; }
    const Matrix& entries() const { return m_; }

private:
    FockBasis basis_;
    Matrix m_;
};

// Plain operator on the same basis: no trace or positivity constraint.
// Houses the commutator sigma-bar, which is Hermitian but generally indefinite.
class OperatorMatrix {
public:
    OperatorMatrix(FockBasis basis, Matrix entries);

    const FockBasis& basis() const { return basis_; }
    const Matrix& entries() const { return m_; }

private:
    FockBasis basis_;
    Matrix m_;
};

// --------------------------- operator algebra -------------------------------

// Single-mode lowering operator a on dimension d: a|n> = sqrt(n)|n-1>.
Matrix lowering(std::size_t d);

// Collective lowering A = a_A + a_B on the full two-mode basis.
Matrix collective_lowering(const FockBasis& basis);

// (a_A + a_B)|state>: total occupation drops by exactly one; the result may be
// unnormalized or zero.
StateVector apply_collective_lowering(const StateVector& state);

// sigma_bar(sigma) = [(a_A^dag + a_B^dag), (a_A + a_B) sigma]
//                  = A^dag A sigma - A sigma A^dag.
// Requires per_mode_dim >= (max occupied level in sigma) + 2 so the raising
// operator cannot push amplitude past the truncation edge; otherwise throws
// TruncationError carrying the minimum sufficient dimension.
OperatorMatrix sigma_bar(const DensityMatrix& sigma);

// Leakage coefficient eta = <chi| sigma_bar(|chi><chi|) |chi>. Real and
// nonnegative; equals the variance <A^dag A> - |<A>|^2 of the collective
// lowering operator (see eta_variance, kept as an independent cross-check path).
double eta(const StateVector& chi);

// eta through the variance identity, bypassing sigma_bar entirely.
double eta_variance(const StateVector& chi);

// Fidelity (tr sqrt(sqrt(x) y sqrt(x)))^2 via Hermitian eigendecomposition.
// Eigenvalues in [-1e-10, 0) are clamped to 0 (numerical noise); anything more
// negative is an invalid state and throws. The raw result must land in
// [-1e-10, 1 + 1e-10] and is clamped to [0, 1].
double fidelity(const DensityMatrix& x, const DensityMatrix& y);

// Extended Werner-like state r|eps><eps| + (1-r)/4 * identity on the two-qubit
// block {|00>,|01>,|10>,|11>}. eps must be supported on that block.
DensityMatrix ewl_state(double r, const StateVector& epsilon);

} // namespace entpres::fock
