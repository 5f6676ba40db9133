#include "entdepth/qstate.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace entdepth {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kPsdTol = 1e-10;

std::ptrdiff_t dim_of(int n) { return std::ptrdiff_t{1} << n; }

void check_qubits(int n, int cap, const char* what) {
    if (n < 1 || n > cap) {
        throw std::domain_error(std::string(what) + ": n out of range [1," +
                                std::to_string(cap) + "]");
    }
}

}  // namespace

StateVector::StateVector(int n, Eigen::VectorXcd amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_qubits(n, kMaxPureQubits, "StateVector");
    if (amps_.size() != dim_of(n)) {
        throw std::invalid_argument("StateVector: dimension must be 2^n");
    }
    if (std::abs(amps_.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: norm must be 1");
    }
}

DensityMatrix::DensityMatrix(int n, Eigen::MatrixXcd entries)
    : n_(n), m_(std::move(entries)) {
    check_qubits(n, kMaxMixedQubits, "DensityMatrix");
    const auto d = dim_of(n);
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: dimension must be 2^n");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace().real() - 1.0) > kNormTol ||
        std::abs(m_.trace().imag()) > kNormTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                       Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    check_qubits(psi.n(), kMaxMixedQubits, "DensityMatrix::pure");
    const auto& a = psi.amplitudes();
    return DensityMatrix(psi.n(), a * a.adjoint());
}

DensityMatrix DensityMatrix::mix(
    const std::vector<std::pair<double, DensityMatrix>>& terms) {
    if (terms.empty()) {
        throw std::invalid_argument("mix: at least one term required");
    }
    int n = terms.front().second.n();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim_of(n), dim_of(n));
    double total = 0.0;
    for (const auto& [w, rho] : terms) {
        if (rho.n() != n) throw std::invalid_argument("mix: n mismatch");
        if (w <= 0.0) throw std::invalid_argument("mix: weights must be > 0");
        total += w;
        acc += w * rho.entries();
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw std::invalid_argument("mix: weights must sum to 1");
    }
    return DensityMatrix(n, std::move(acc));
}

CollectiveOp CollectiveOp::jz(int n) {
    check_qubits(n, kMaxPureQubits, "CollectiveOp::jz");
    Eigen::VectorXd diag(dim_of(n));
    for (std::ptrdiff_t b = 0; b < dim_of(n); ++b) {
        int ones = std::popcount(static_cast<std::uint64_t>(b));
        diag[b] = 0.5 * (n - 2 * ones);
    }
    return CollectiveOp(n, std::move(diag));
}

StateVector ghz_product_state(const Partition& type, int cap) {
    const int n = type.n();
    check_qubits(n, cap, "ghz_product_state");
    const auto& parts = type.parts();
    const int h = type.height();

    // Bit mask of each contiguous block, lowest qubits first.
    std::vector<std::uint64_t> block_mask(parts.size());
    int offset = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        block_mask[i] = ((std::uint64_t{1} << parts[i]) - 1) << offset;
        offset += parts[i];
    }

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim_of(n));
    const double amp = std::pow(2.0, -0.5 * h);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << h); ++choice) {
        std::uint64_t index = 0;
        for (int i = 0; i < h; ++i) {
            if (choice >> i & 1) index |= block_mask[static_cast<size_t>(i)];
        }
        amps[static_cast<std::ptrdiff_t>(index)] = amp;
    }
    return StateVector(n, std::move(amps));
}

double variance(const StateVector& psi, const CollectiveOp& a) {
    if (psi.n() != a.n()) throw std::invalid_argument("variance: n mismatch");
    const auto& amps = psi.amplitudes();
    const auto& diag = a.diagonal();
    double first = 0.0, second = 0.0;
    for (std::ptrdiff_t b = 0; b < amps.size(); ++b) {
        double p = std::norm(amps[b]);
        first += p * diag[b];
        second += p * diag[b] * diag[b];
    }
    return second - first * first;
}

double variance(const DensityMatrix& rho, const CollectiveOp& a) {
    if (rho.n() != a.n()) throw std::invalid_argument("variance: n mismatch");
    const auto& m = rho.entries();
    const auto& diag = a.diagonal();
    double first = 0.0, second = 0.0;
    for (std::ptrdiff_t b = 0; b < diag.size(); ++b) {
        double p = m(b, b).real();
        first += p * diag[b];
        second += p * diag[b] * diag[b];
    }
    return second - first * first;
}

double qfi(const DensityMatrix& rho, const CollectiveOp& a, int cap) {
    check_qubits(rho.n(), cap, "qfi");
    if (rho.n() != a.n()) throw std::invalid_argument("qfi: n mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("qfi: eigensolver failed");
    }
    Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXcd& vecs = es.eigenvectors();
    // A in the eigenbasis; A is diagonal in the computational basis.
    Eigen::MatrixXcd scaled =
        a.diagonal().cast<std::complex<double>>().asDiagonal() * vecs;
    Eigen::MatrixXcd a_eig = vecs.adjoint() * scaled;

    const double tol = 1e-12;  // relative to unit trace
    double acc = 0.0;
    for (std::ptrdiff_t i = 0; i < lambda.size(); ++i) {
        for (std::ptrdiff_t j = 0; j < lambda.size(); ++j) {
            double sum = lambda[i] + lambda[j];
            if (sum <= tol) continue;
            double diff = lambda[i] - lambda[j];
            acc += diff * diff / sum * std::norm(a_eig(i, j));
        }
    }
    return 2.0 * acc;
}

double qfi_pure(const StateVector& psi, const CollectiveOp& a) {
    return 4.0 * variance(psi, a);
}

std::vector<std::pair<double, StateVector>> eigen_decomposition(
    const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigen_decomposition: eigensolver failed");
    }
    std::vector<std::pair<double, StateVector>> out;
    for (std::ptrdiff_t i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()[i];
        if (lam <= 1e-12) continue;
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        out.emplace_back(lam, StateVector(rho.n(), v / v.norm()));
    }
    return out;
}

std::vector<std::pair<double, StateVector>> random_decomposition(
    const DensityMatrix& rho, int m, std::uint64_t seed) {
    auto eig = eigen_decomposition(rho);
    const int rank = static_cast<int>(eig.size());
    if (m < rank) {
        throw std::invalid_argument(
            "random_decomposition: m must be >= rank");
    }
    const auto d = dim_of(rho.n());
    // Scaled eigenvectors sqrt(lambda_i) |phi_i>.
    Eigen::MatrixXcd w(d, rank);
    for (int i = 0; i < rank; ++i) {
        w.col(i) = std::sqrt(eig[static_cast<size_t>(i)].first) *
                   eig[static_cast<size_t>(i)].second.amplitudes();
    }
    // Random m x rank isometry from a seeded complex Gaussian draw.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(m, rank);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < rank; ++c) {
            g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd iso =
        qr.householderQ() * Eigen::MatrixXcd::Identity(m, rank);

    std::vector<std::pair<double, StateVector>> out;
    for (int j = 0; j < m; ++j) {
        Eigen::VectorXcd unnorm = w * iso.row(j).transpose();
        double weight = unnorm.squaredNorm();
        if (weight < 1e-300) {
            throw std::runtime_error(
                "random_decomposition: degenerate member weight");
        }
        out.emplace_back(weight,
                         StateVector(rho.n(), unnorm / std::sqrt(weight)));
    }
    return out;
}

CriterionReport verify_criterion(double fq, const GenFun& f,
                                 const Ensemble& certificate, int cap) {
    const int n = certificate.n();
    GenFun bf = bound_composed_fn(f, n, cap);

    CriterionReport rep;
    rep.fq = fq;
    rep.depth = ensemble_depth(f, certificate);
    rep.plain_bound =
        static_cast<double>(bound_bruteforce(f, rep.depth, n, cap).first);
    // The induced property is increasing, so its certified depth is the
    // ensemble maximum and the weighted form refines it.
    rep.convex_bound = ensemble_avg_depth(bf, certificate);
    rep.plain_margin = rep.plain_bound - fq;
    rep.convex_margin = rep.convex_bound - fq;
    const double tol = 1e-9;
    rep.plain_ok = rep.plain_margin >= -tol;
    rep.convex_ok = rep.convex_margin >= -tol;
    return rep;
}

CriterionReport verify_criterion(const StateVector& psi, const GenFun& f,
                                 const Ensemble& certificate, int cap) {
    if (psi.n() != certificate.n()) {
        throw std::invalid_argument("verify_criterion: n mismatch");
    }
    return verify_criterion(qfi_pure(psi, CollectiveOp::jz(psi.n())), f,
                            certificate, cap);
}

CriterionReport verify_criterion(const StateVector& psi, const GenFun& f,
                                 const Partition& finest, int cap) {
    return verify_criterion(psi, f, Ensemble({{1.0, finest}}), cap);
}

CriterionReport verify_criterion(const DensityMatrix& rho, const GenFun& f,
                                 const Ensemble& certificate, int cap) {
    if (rho.n() != certificate.n()) {
        throw std::invalid_argument("verify_criterion: n mismatch");
    }
    return verify_criterion(qfi(rho, CollectiveOp::jz(rho.n())), f,
                            certificate, cap);
}

DensityMatrix random_density_matrix(int n, std::uint64_t seed) {
    const auto d = dim_of(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(d, d);
    for (std::ptrdiff_t r = 0; r < d; ++r) {
        for (std::ptrdiff_t c = 0; c < d; ++c) {
            a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    rho /= rho.trace().real();
    // guard against round-off in the constructor checks
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();
    return DensityMatrix(n, std::move(rho));
}

StateVector random_state_vector(int n, std::uint64_t seed) {
    const auto d = dim_of(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(d);
    for (std::ptrdiff_t i = 0; i < d; ++i) {
        v[i] = std::complex<double>(gauss(rng), gauss(rng));
    }
    v /= v.norm();
    return StateVector(n, std::move(v));
}

}  // namespace entdepth
