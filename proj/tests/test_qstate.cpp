#include <bit>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "entdepth/qstate.hpp"

using namespace entdepth;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("state validation") {
    Eigen::VectorXcd bad(4);
    bad << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(StateVector(2, bad), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(3, bad), std::invalid_argument);

    Eigen::MatrixXcd notpsd = Eigen::MatrixXcd::Zero(2, 2);
    notpsd(0, 0) = 1.5;
    notpsd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(1, notpsd), std::invalid_argument);
}

TEST_CASE("collective spin-z diagonal") {
    CollectiveOp jz = CollectiveOp::jz(3);
    CHECK(jz.diagonal()[0] == doctest::Approx(1.5));    // |000>
    CHECK(jz.diagonal()[0b111] == doctest::Approx(-1.5));
    CHECK(jz.diagonal()[0b001] == doctest::Approx(0.5));
    CHECK(jz.diagonal().maxCoeff() == doctest::Approx(1.5));
    CHECK(jz.diagonal().minCoeff() == doctest::Approx(-1.5));
    CHECK(jz.spectral_width() == doctest::Approx(3.0));
}

TEST_CASE("product of GHZ blocks") {
    // a single size-1 block is just (|0>+|1>)/sqrt(2)
    StateVector plus = ghz_product_state(Partition::bottom(3));
    for (int b = 0; b < 8; ++b) {
        CHECK(std::abs(plus.amplitudes()[b] -
                       std::complex<double>(1.0 / std::sqrt(8.0), 0.0)) <
              1e-12);
    }

    StateVector two_one = ghz_product_state(P({2, 1}));
    for (int b = 0; b < 8; ++b) {
        bool support = b == 0b000 || b == 0b011 || b == 0b100 || b == 0b111;
        CHECK(std::abs(two_one.amplitudes()[b] -
                       (support ? 0.5 : 0.0)) < 1e-12);
    }

    CHECK_THROWS_AS(ghz_product_state(Partition::top(21)), std::domain_error);
}

TEST_CASE("variance of the collective operator") {
    CollectiveOp jz4 = CollectiveOp::jz(4);
    Eigen::VectorXcd zeros = Eigen::VectorXcd::Zero(16);
    zeros[0] = 1.0;
    CHECK(variance(StateVector(4, zeros), jz4) == doctest::Approx(0.0));

    StateVector ghz4 = ghz_product_state(Partition::top(4));
    CHECK(variance(ghz4, jz4) == doctest::Approx(4.0));  // n^2/4

    for (int n = 2; n <= 10; ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        for (const auto& type : enumerate_partitions(n)) {
            CHECK(variance(ghz_product_state(type), jz) ==
                  doctest::Approx(type.square_sum() / 4.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("pure-state Fisher information attains the square sum") {
    for (int n = 2; n <= 10; ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        for (const auto& type : enumerate_partitions(n)) {
            double fq = qfi_pure(ghz_product_state(type), jz);
            CHECK(std::abs(fq - static_cast<double>(type.square_sum())) <
                  1e-9);
        }
    }
    // n=20 single block reaches 400
    CHECK(qfi_pure(ghz_product_state(Partition::top(20)),
                   CollectiveOp::jz(20)) == doctest::Approx(400.0));
    // the worked example: {4,3,2,1} at n=10 measures 30
    CHECK(qfi_pure(ghz_product_state(P({4, 3, 2, 1})),
                   CollectiveOp::jz(10)) == doctest::Approx(30.0));
    // a fully separable product reaches exactly n
    CHECK(qfi_pure(ghz_product_state(Partition::bottom(9)),
                   CollectiveOp::jz(9)) == doctest::Approx(9.0));
}

TEST_CASE("mixed-state Fisher information") {
    CollectiveOp jz = CollectiveOp::jz(4);

    StateVector ghz = ghz_product_state(Partition::top(4));
    DensityMatrix pure = DensityMatrix::pure(ghz);
    CHECK(qfi(pure, jz) == doctest::Approx(16.0));
    CHECK(std::abs(qfi(pure, jz) - 4.0 * variance(ghz, jz)) < 1e-9);

    Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(16, 16);
    CHECK(qfi(DensityMatrix(4, eye / 16.0), jz) < 1e-12);

    // an incoherent half-half mixture of the two spin-extremal basis states
    Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(16, 16);
    half(0, 0) = 0.5;
    half(15, 15) = 0.5;
    CHECK(qfi(DensityMatrix(4, half), jz) < 1e-12);

    // a thin GHZ admixture: the Fisher information collapses to eps * n^2
    Eigen::VectorXcd lone = Eigen::VectorXcd::Zero(16);
    lone[0b0001] = 1.0;
    DensityMatrix eps_mix = DensityMatrix::mix(
        {{0.1, pure}, {0.9, DensityMatrix::pure(StateVector(4, lone))}});
    CHECK(qfi(eps_mix, jz) == doctest::Approx(1.6).epsilon(1e-9));
}

TEST_CASE("random decompositions rebuild the state") {
    std::mt19937_64 rng(555);

    StateVector psi = random_state_vector(3, rng());
    DensityMatrix pure = DensityMatrix::pure(psi);
    auto single = random_decomposition(pure, 1, rng());
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == doctest::Approx(1.0));
    // equal up to a global phase
    std::complex<double> overlap =
        psi.amplitudes().dot(single[0].second.amplitudes());
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);

    // eigen-ensemble is itself a valid decomposition
    DensityMatrix rho = random_density_matrix(3, rng());
    auto eig = eigen_decomposition(rho);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& [w, v] : eig) {
        acc += w * (v.amplitudes() * v.amplitudes().adjoint());
    }
    CHECK((acc - rho.entries()).norm() < 1e-9);

    // the documented half GHZ, half basis-state mixture at n=4 with m=4
    StateVector ghz = ghz_product_state(Partition::top(4));
    Eigen::VectorXcd lone = Eigen::VectorXcd::Zero(16);
    lone[0b0001] = 1.0;
    DensityMatrix mix = DensityMatrix::mix(
        {{0.5, DensityMatrix::pure(ghz)},
         {0.5, DensityMatrix::pure(StateVector(4, lone))}});
    auto dec = random_decomposition(mix, 4, rng());
    REQUIRE(dec.size() == 4);
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(16, 16);
    double total = 0.0;
    for (const auto& [w, v] : dec) {
        total += w;
        rebuilt += w * (v.amplitudes() * v.amplitudes().adjoint());
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK((rebuilt - mix.entries()).norm() < 1e-9);

    CHECK_THROWS_AS(random_decomposition(mix, 1, 7), std::invalid_argument);
}

TEST_CASE("criterion margins") {
    // equality for the square sum on a GHZ product
    StateVector psi = ghz_product_state(P({2, 2}));
    CriterionReport eq =
        verify_criterion(psi, squareability_fn(), P({2, 2}));
    CHECK(eq.fq == doctest::Approx(8.0));
    CHECK(eq.plain_bound == doctest::Approx(8.0));
    CHECK(eq.plain_margin == doctest::Approx(0.0));
    CHECK(eq.convex_margin == doctest::Approx(0.0));
    CHECK(eq.plain_ok);
    CHECK(eq.convex_ok);

    // unequal parts leave slack against the producibility bound
    StateVector skew = ghz_product_state(P({4, 3, 2, 1}));
    CriterionReport prod = verify_criterion(skew, width_fn(), P({4, 3, 2, 1}));
    CHECK(prod.fq == doctest::Approx(30.0));
    CHECK(prod.plain_bound == doctest::Approx(36.0));  // two fours plus two
    CHECK(prod.plain_margin > 1.0);

    // the thin GHZ admixture: the convex margin collapses, the plain one not
    StateVector ghz = ghz_product_state(Partition::top(4));
    Eigen::VectorXcd lone = Eigen::VectorXcd::Zero(16);
    lone[0b0001] = 1.0;
    DensityMatrix eps_mix = DensityMatrix::mix(
        {{0.1, DensityMatrix::pure(ghz)},
         {0.9, DensityMatrix::pure(StateVector(4, lone))}});
    Ensemble cert({{0.1, Partition::top(4)}, {0.9, Partition::bottom(4)}});
    CriterionReport rep = verify_criterion(eps_mix, squareability_fn(), cert);
    CHECK(rep.fq == doctest::Approx(1.6).epsilon(1e-6));
    CHECK(rep.plain_bound == doctest::Approx(16.0));
    CHECK(rep.convex_bound == doctest::Approx(0.1 * 16 + 0.9 * 4));
    CHECK(rep.convex_margin < 0.5 * rep.plain_margin);
    CHECK(rep.plain_ok);
    CHECK(rep.convex_ok);
}

TEST_CASE("layout of the blocks cannot matter") {
    // relabeling qubits arbitrarily leaves every collective quantity alone
    std::mt19937_64 rng(2026);
    for (const auto& type : enumerate_partitions(8)) {
        StateVector psi = ghz_product_state(type);
        CollectiveOp jz = CollectiveOp::jz(8);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[static_cast<size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Eigen::VectorXcd moved = Eigen::VectorXcd::Zero(256);
        for (int b = 0; b < 256; ++b) {
            int nb = 0;
            for (int i = 0; i < 8; ++i) {
                if (b >> i & 1) nb |= 1 << perm[static_cast<size_t>(i)];
            }
            moved[nb] = psi.amplitudes()[b];
        }
        StateVector shuffled(8, std::move(moved));
        CHECK(qfi_pure(shuffled, jz) ==
              doctest::Approx(qfi_pure(psi, jz)).epsilon(1e-12));
    }
}

TEST_CASE("variance of a product state is the sum of block variances") {
    std::mt19937_64 rng(1618);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int n = 2; n <= 10; ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        auto all = enumerate_partitions(n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const Partition& type = all[pick(rng)];
            // random state per block, tensored lowest-qubits-first
            Eigen::VectorXcd acc(1);
            acc[0] = 1.0;
            double block_sum = 0.0;
            for (int part : type.parts()) {
                const int d = 1 << part;
                Eigen::VectorXcd block(d);
                for (int i = 0; i < d; ++i) {
                    block[i] = std::complex<double>(gauss(rng), gauss(rng));
                }
                block /= block.norm();
                double first = 0.0, second = 0.0;
                for (int b = 0; b < d; ++b) {
                    double pr = std::norm(block[b]);
                    double v = 0.5 * (part - 2 * std::popcount(
                                                 static_cast<unsigned>(b)));
                    first += pr * v;
                    second += pr * v * v;
                }
                block_sum += second - first * first;
                Eigen::VectorXcd next(acc.size() * d);
                for (int hi = 0; hi < d; ++hi) {
                    for (Eigen::Index lo = 0; lo < acc.size(); ++lo) {
                        next[hi * acc.size() + lo] = block[hi] * acc[lo];
                    }
                }
                acc.swap(next);
            }
            StateVector psi(n, std::move(acc));
            CHECK(variance(psi, jz) == doctest::Approx(block_sum).epsilon(1e-12));
        }
    }
}

TEST_CASE("variance stays under the spectral-range cap") {
    std::mt19937_64 rng(8080);
    for (int n = 2; n <= 6; ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        double cap = 0.25 * n * n;
        for (int trial = 0; trial < 1000; ++trial) {
            CHECK(variance(random_state_vector(n, rng()), jz) <= cap + 1e-9);
        }
        // attained by the balanced superposition of the extreme eigenstates
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(1 << n);
        amps[0] = 1.0 / std::sqrt(2.0);
        amps[(1 << n) - 1] = std::polar(1.0 / std::sqrt(2.0), 1.3);
        CHECK(variance(StateVector(n, std::move(amps)), jz) ==
              doctest::Approx(cap));
        // and by the incoherent mixture of the same two states
        if (n <= 6) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
            m(0, 0) = 0.5;
            m((1 << n) - 1, (1 << n) - 1) = 0.5;
            CHECK(variance(DensityMatrix(n, std::move(m)), jz) ==
                  doctest::Approx(cap));
        }
    }
}

TEST_CASE("Fisher information is convex and below every decomposition") {
    std::mt19937_64 rng(90210);
    for (int n = 2; n <= 5; ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        const int d = 1 << n;
        for (int trial = 0; trial < 10; ++trial) {
            DensityMatrix a = random_density_matrix(n, rng());
            DensityMatrix b = random_density_matrix(n, rng());
            DensityMatrix mix = DensityMatrix::mix({{0.3, a}, {0.7, b}});
            CHECK(qfi(mix, jz) <=
                  0.3 * qfi(a, jz) + 0.7 * qfi(b, jz) + 1e-9);
            CHECK(qfi(mix, jz) <= 4.0 * variance(mix, jz) + 1e-9);

            double fq = qfi(a, jz);
            for (int rep = 0; rep < 10; ++rep) {
                auto dec = random_decomposition(a, d, rng());
                double avg = 0.0;
                for (const auto& [w, v] : dec) {
                    avg += w * 4.0 * variance(v, jz);
                }
                CHECK(fq <= avg + 1e-9);
            }
        }
    }
}
