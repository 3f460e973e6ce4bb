#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace blc {

using Complex = std::complex<double>;

inline constexpr double kOrthoTol = 1e-9;
inline constexpr double kDeadBranchTol = 1e-12;

/// Finite-dimensional complex state, <x|psi> samples or <k|psi> amplitudes.
struct StateVector {
    std::vector<Complex> amplitudes;

    StateVector() = default;
    explicit StateVector(std::vector<Complex> a) : amplitudes(std::move(a)) {}

    static StateVector zeros(std::size_t dim) { return StateVector(std::vector<Complex>(dim)); }

    std::size_t dimension() const { return amplitudes.size(); }
    double norm() const;
    bool is_normalized(double tol = 1e-9) const;
};

/// Expansion of a state over an orthonormal continuer set plus the residual
/// ("dead") branch holding whatever the continuers do not span.
struct BranchDecomposition {
    std::vector<Complex> coefficients;   // a_i = <psi_i|psi>
    Complex dead_coefficient{0.0, 0.0};  // a_D; real >= 0 by convention
    std::optional<StateVector> dead_branch;
    std::vector<StateVector> basis_states;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Expand psi over pairwise orthonormal continuers; any residual becomes the
/// dead branch with a_D = |residual| and psi_D the normalized residual.
BranchDecomposition decompose(const StateVector& psi, const std::vector<StateVector>& continuers,
                              double ortho_tol = kOrthoTol, double dead_tol = kDeadBranchTol);

/// Extends an orthonormal partial basis to a full one with seeded random
/// vectors (Gram-Schmidt); deterministic for a given seed.
std::vector<StateVector> random_completion(const std::vector<StateVector>& partial_basis,
                                           std::size_t dimension, std::uint64_t seed);

/// sum_i a_i |psi_i> + a_D |psi_D>
StateVector reconstruct(const BranchDecomposition& d);

}  // namespace blc
