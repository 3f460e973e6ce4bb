#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "blc/rng.hpp"
#include "blc/statevec.hpp"

using namespace blc;
using Catch::Matchers::WithinAbs;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector random_state(std::size_t dim, SeededRng& rng) {
    StateVector v = StateVector::zeros(dim);
    for (Complex& a : v.amplitudes) a = Complex{rng.gaussian(), rng.gaussian()};
    return v;
}

}  // namespace

TEST_CASE("inner product basics") {
    const StateVector e0(std::vector<Complex>{{1, 0}, {0, 0}});
    const StateVector e1(std::vector<Complex>{{0, 0}, {1, 0}});
    CHECK_THAT(std::abs(inner_product(e0, e0) - Complex{1.0, 0.0}), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(inner_product(e0, e1)), WithinAbs(0.0, 1e-15));

    const StateVector plus(std::vector<Complex>{{kInvSqrt2, 0}, {kInvSqrt2, 0}});
    const StateVector minus(std::vector<Complex>{{kInvSqrt2, 0}, {-kInvSqrt2, 0}});
    CHECK_THAT(std::abs(inner_product(plus, minus)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
    SeededRng rng(5);
    for (int i = 0; i < 50; ++i) {
        const std::size_t dim = 2 + rng.below(10);
        const StateVector a = random_state(dim, rng);
        const StateVector b = random_state(dim, rng);
        const Complex s{rng.gaussian(), rng.gaussian()};

        StateVector sa = a;
        for (Complex& v : sa.amplitudes) v *= s;
        CHECK_THAT(std::abs(inner_product(sa, b) - std::conj(s) * inner_product(a, b)),
                   WithinAbs(0.0, 1e-9));
        const Complex self = inner_product(a, a);
        CHECK(self.real() >= 0.0);
        CHECK_THAT(self.imag(), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("dimension mismatch names both dimensions") {
    const StateVector a = StateVector::zeros(2);
    const StateVector b = StateVector::zeros(3);
    try {
        inner_product(a, b);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find('2') != std::string::npos);
        CHECK(msg.find('3') != std::string::npos);
    }
}

TEST_CASE("decompose over a complete basis has no dead branch") {
    const StateVector psi(std::vector<Complex>{{0.6, 0}, {0.8, 0}});
    const std::vector<StateVector> basis{StateVector(std::vector<Complex>{{1, 0}, {0, 0}}),
                                         StateVector(std::vector<Complex>{{0, 0}, {1, 0}})};
    const BranchDecomposition d = decompose(psi, basis);
    REQUIRE(d.coefficients.size() == 2);
    CHECK_THAT(std::abs(d.coefficients[0] - Complex{0.6, 0.0}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(d.coefficients[1] - Complex{0.8, 0.0}), WithinAbs(0.0, 1e-12));
    CHECK(std::abs(d.dead_coefficient) == 0.0);
    CHECK_FALSE(d.dead_branch.has_value());
}

TEST_CASE("residual becomes the dead branch") {
    const StateVector psi(std::vector<Complex>{{0.6, 0}, {0.8, 0}, {0, 0}});
    const std::vector<StateVector> basis{
        StateVector(std::vector<Complex>{{1, 0}, {0, 0}, {0, 0}})};
    const BranchDecomposition d = decompose(psi, basis);
    REQUIRE(d.coefficients.size() == 1);
    CHECK_THAT(std::abs(d.coefficients[0] - Complex{0.6, 0.0}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(d.dead_coefficient - Complex{0.8, 0.0}), WithinAbs(0.0, 1e-12));
    REQUIRE(d.dead_branch.has_value());
    CHECK_THAT(std::abs(d.dead_branch->amplitudes[1] - Complex{1.0, 0.0}),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("orthogonal state maps entirely to the dead branch") {
    const StateVector psi(std::vector<Complex>{{kInvSqrt2, 0}, {-kInvSqrt2, 0}});
    const std::vector<StateVector> basis{
        StateVector(std::vector<Complex>{{kInvSqrt2, 0}, {kInvSqrt2, 0}})};
    const BranchDecomposition d = decompose(psi, basis);
    CHECK_THAT(std::abs(d.coefficients[0]), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(d.dead_coefficient - Complex{1.0, 0.0}), WithinAbs(0.0, 1e-12));
}

TEST_CASE("non-orthonormal continuers are rejected with the offending pair") {
    const StateVector psi = StateVector::zeros(2);
    const std::vector<StateVector> bad{StateVector(std::vector<Complex>{{1, 0}, {0, 0}}),
                                       StateVector(std::vector<Complex>{{1, 0}, {0, 0}})};
    try {
        decompose(psi, bad);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("v0") != std::string::npos);
        CHECK(msg.find("v1") != std::string::npos);
    }
}

TEST_CASE("random completion extends to a full orthonormal basis") {
    const std::vector<StateVector> partial{StateVector(std::vector<Complex>{{1, 0}, {0, 0}})};
    const std::vector<StateVector> full = random_completion(partial, 2, 7);
    REQUIRE(full.size() == 2);
    // forced up to phase: second vector has no support on the first axis
    CHECK_THAT(std::abs(full[1].amplitudes[0]), WithinAbs(0.0, 1e-9));
    CHECK_THAT(std::abs(full[1].amplitudes[1]), WithinAbs(1.0, 1e-9));

    const std::vector<StateVector> fresh = random_completion({}, 3, 1);
    REQUIRE(fresh.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            CHECK_THAT(std::abs(inner_product(fresh[i], fresh[j])),
                       WithinAbs(expected, 1e-9));
        }
    }
}

TEST_CASE("random completion is deterministic per seed") {
    const std::vector<StateVector> a = random_completion({}, 5, 99);
    const std::vector<StateVector> b = random_completion({}, 5, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(a[i].amplitudes[j] == b[i].amplitudes[j]);
        }
    }
    const std::vector<StateVector> c = random_completion({}, 5, 100);
    bool any_differ = false;
    for (std::size_t j = 0; j < 5; ++j) {
        if (a[0].amplitudes[j] != c[0].amplitudes[j]) any_differ = true;
    }
    CHECK(any_differ);
}

TEST_CASE("reconstruction and Parseval hold over random draws") {
    SeededRng rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + rng.below(63);  // dims 2..64
        const StateVector psi = random_state(dim, rng);
        const std::size_t k = 1 + rng.below(dim);

        const std::vector<StateVector> basis = random_completion({}, dim, rng.next_u64());
        const std::vector<StateVector> continuers(basis.begin(),
                                                  basis.begin() + static_cast<long>(k));

        const BranchDecomposition d = decompose(psi, continuers);
        const StateVector back = reconstruct(d);
        double err = 0.0;
        double weight = std::norm(d.dead_coefficient);
        for (std::size_t i = 0; i < dim; ++i) {
            err += std::norm(back.amplitudes[i] - psi.amplitudes[i]);
        }
        for (const Complex& a : d.coefficients) weight += std::norm(a);
        REQUIRE(std::sqrt(err) <= 1e-9);
        REQUIRE(std::abs(weight - psi.norm() * psi.norm()) <= 1e-9);
    }
}

TEST_CASE("branch amplitude does not depend on the basis completion") {
    SeededRng rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 + rng.below(15);
        const StateVector psi = random_state(dim, rng);
        const std::vector<StateVector> seed_basis = random_completion({}, dim, rng.next_u64());
        const std::vector<StateVector> fixed(seed_basis.begin(), seed_basis.begin() + 1);

        const Complex reference = inner_product(fixed[0], psi);
        for (int completion = 0; completion < 5; ++completion) {
            const std::vector<StateVector> full =
                random_completion(fixed, dim, rng.next_u64());
            const BranchDecomposition d = decompose(psi, full);
            CHECK_THAT(std::abs(d.coefficients[0] - reference), WithinAbs(0.0, 1e-9));
        }
    }
}
