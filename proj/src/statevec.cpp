#include "blc/statevec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "blc/rng.hpp"

namespace blc {

namespace {

void check_same_dimension(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dimension()) +
                                    " vs " + std::to_string(b.dimension()));
    }
}

// Verifies the Gram matrix of `vectors` is the identity within tol and
// reports the first offending pair.
void check_orthonormal(const std::vector<StateVector>& vectors, double tol) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            const Complex g = inner_product(vectors[i], vectors[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > tol) {
                throw std::invalid_argument("continuers not orthonormal: |<v" +
                                            std::to_string(i) + "|v" + std::to_string(j) +
                                            "> - " + std::to_string(expected) +
                                            "| = " + std::to_string(std::abs(g - expected)));
            }
        }
    }
}

}  // namespace

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Complex inner_product(const StateVector& a, const StateVector& b) {
    check_same_dimension(a, b);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return acc;
}

BranchDecomposition decompose(const StateVector& psi, const std::vector<StateVector>& continuers,
                              double ortho_tol, double dead_tol) {
    if (psi.dimension() == 0) throw std::invalid_argument("state has dimension 0");
    for (const StateVector& c : continuers) check_same_dimension(psi, c);
    check_orthonormal(continuers, ortho_tol);

    BranchDecomposition out;
    out.basis_states = continuers;
    out.coefficients.reserve(continuers.size());

    StateVector residual = psi;
    for (const StateVector& c : continuers) {
        const Complex a = inner_product(c, psi);
        out.coefficients.push_back(a);
        for (std::size_t i = 0; i < residual.amplitudes.size(); ++i) {
            residual.amplitudes[i] -= a * c.amplitudes[i];
        }
    }

    const double r = residual.norm();
    if (r > dead_tol) {
        out.dead_coefficient = Complex{r, 0.0};
        for (Complex& v : residual.amplitudes) v /= r;
        out.dead_branch = std::move(residual);
    }
    return out;
}

std::vector<StateVector> random_completion(const std::vector<StateVector>& partial_basis,
                                           std::size_t dimension, std::uint64_t seed) {
    if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
    if (partial_basis.size() > dimension) {
        throw std::invalid_argument("partial basis larger than dimension: " +
                                    std::to_string(partial_basis.size()) + " > " +
                                    std::to_string(dimension));
    }
    for (const StateVector& v : partial_basis) {
        if (v.dimension() != dimension) {
            throw std::invalid_argument("partial basis vector has dimension " +
                                        std::to_string(v.dimension()) + ", expected " +
                                        std::to_string(dimension));
        }
    }
    check_orthonormal(partial_basis, kOrthoTol);

    std::vector<StateVector> basis = partial_basis;
    SeededRng rng(seed);
    while (basis.size() < dimension) {
        StateVector candidate = StateVector::zeros(dimension);
        for (Complex& v : candidate.amplitudes) v = Complex{rng.gaussian(), rng.gaussian()};

        // Modified Gram-Schmidt, twice for numerical orthogonality.
        for (int pass = 0; pass < 2; ++pass) {
            for (const StateVector& b : basis) {
                const Complex overlap = inner_product(b, candidate);
                for (std::size_t i = 0; i < dimension; ++i) {
                    candidate.amplitudes[i] -= overlap * b.amplitudes[i];
                }
            }
        }
        const double n = candidate.norm();
        if (n < 1e-6) continue;  // nearly dependent draw, retry
        for (Complex& v : candidate.amplitudes) v /= n;
        basis.push_back(std::move(candidate));
    }
    return basis;
}

StateVector reconstruct(const BranchDecomposition& d) {
    std::size_t dim = 0;
    if (!d.basis_states.empty()) {
        dim = d.basis_states.front().dimension();
    } else if (d.dead_branch) {
        dim = d.dead_branch->dimension();
    }
    StateVector out = StateVector::zeros(dim);
    for (std::size_t k = 0; k < d.basis_states.size(); ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.amplitudes[i] += d.coefficients[k] * d.basis_states[k].amplitudes[i];
        }
    }
    if (d.dead_branch) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.amplitudes[i] += d.dead_coefficient * d.dead_branch->amplitudes[i];
        }
    }
    return out;
}

}  // namespace blc
