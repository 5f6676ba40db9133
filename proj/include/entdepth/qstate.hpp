#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entdepth/bounds.hpp"
#include "entdepth/classify.hpp"
#include "entdepth/partition.hpp"

namespace entdepth {

inline constexpr int kMaxPureQubits = 20;
inline constexpr int kMaxMixedQubits = 8;

/// Normalized dense n-qubit state vector (dimension 2^n). Qubit l maps to
/// bit l of the basis index.
class StateVector {
  public:
    StateVector(int n, Eigen::VectorXcd amplitudes);

    int n() const { return n_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

  private:
    int n_;
    Eigen::VectorXcd amps_;
};

/// Dense Hermitian, unit-trace, positive semidefinite n-qubit operator.
class DensityMatrix {
  public:
    DensityMatrix(int n, Eigen::MatrixXcd entries);

    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix mix(
        const std::vector<std::pair<double, DensityMatrix>>& terms);

    int n() const { return n_; }
    const Eigen::MatrixXcd& entries() const { return m_; }

  private:
    int n_;
    Eigen::MatrixXcd m_;
};

/// Operator diagonal in the computational basis; only the collective spin-z
/// factory is provided. Spectral width n (eigenvalues -n/2 .. n/2).
class CollectiveOp {
  public:
    static CollectiveOp jz(int n);

    int n() const { return n_; }
    const Eigen::VectorXd& diagonal() const { return diag_; }
    double spectral_width() const { return static_cast<double>(n_); }

  private:
    CollectiveOp(int n, Eigen::VectorXd diag)
        : n_(n), diag_(std::move(diag)) {}
    int n_;
    Eigen::VectorXd diag_;
};

/// Tensor product of per-part GHZ vectors (|0..0> + |1..1>)/sqrt(2) on
/// contiguous qubit blocks ordered by the canonical (weakly decreasing)
/// parts; the finest separating type of the result is exactly the given
/// partition. The block layout cannot affect any collective quantity, which
/// is asserted by a permutation test in the suite.
StateVector ghz_product_state(const Partition& type,
                              int cap = kMaxPureQubits);

double variance(const StateVector& psi, const CollectiveOp& a);
double variance(const DensityMatrix& rho, const CollectiveOp& a);

/// Quantum Fisher information from the Hermitian eigendecomposition:
/// 2 sum_{ij} (li-lj)^2/(li+lj) |<i|A|j>|^2, pairs with li+lj below
/// 1e-12 * trace skipped. Within degenerate eigenvalue subspaces the result
/// does not depend on the eigenvector basis: any rotation only mixes terms
/// whose (li-lj)^2 numerators vanish.
double qfi(const DensityMatrix& rho, const CollectiveOp& a,
           int cap = kMaxMixedQubits);

/// Pure-state Fisher information: four times the variance. Works to the
/// pure-state cap since the operator is diagonal.
double qfi_pure(const StateVector& psi, const CollectiveOp& a);

/// Eigen-ensemble of a density matrix (eigenvalues above 1e-12 kept).
std::vector<std::pair<double, StateVector>> eigen_decomposition(
    const DensityMatrix& rho);

/// An m-member pure decomposition obtained by mixing the scaled
/// eigenvectors through a seeded random isometry (orthonormalized complex
/// Gaussian columns). Requires m >= rank.
std::vector<std::pair<double, StateVector>> random_decomposition(
    const DensityMatrix& rho, int m, std::uint64_t seed);

/// Margins of the metrological criteria for a state with a certified
/// separability structure.
struct CriterionReport {
    double fq = 0.0;
    double depth = 0.0;         // certified f-depth (ensemble or pure)
    double plain_bound = 0.0;   // bound at the certified depth
    double plain_margin = 0.0;  // plain_bound - fq
    double convex_bound = 0.0;  // weighted bound over the certificate
    double convex_margin = 0.0;
    bool plain_ok = false;
    bool convex_ok = false;
};

CriterionReport verify_criterion(double fq, const GenFun& f,
                                 const Ensemble& certificate,
                                 int cap = kMaxBruteForceN);

CriterionReport verify_criterion(const StateVector& psi, const GenFun& f,
                                 const Ensemble& certificate,
                                 int cap = kMaxBruteForceN);
CriterionReport verify_criterion(const StateVector& psi, const GenFun& f,
                                 const Partition& finest,
                                 int cap = kMaxBruteForceN);
CriterionReport verify_criterion(const DensityMatrix& rho, const GenFun& f,
                                 const Ensemble& certificate,
                                 int cap = kMaxBruteForceN);

/// Seeded Ginibre density matrix (A A^dagger normalized to unit trace).
DensityMatrix random_density_matrix(int n, std::uint64_t seed);

/// Seeded Haar-like random pure state.
StateVector random_state_vector(int n, std::uint64_t seed);

}  // namespace entdepth
