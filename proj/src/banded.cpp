#include "pcf/banded.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

void SymBandMatrix::add_scaled(const SymBandMatrix& other, double scale) {
    band_ += scale * other.band_;
}

Eigen::VectorXd SymBandMatrix::multiply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
    for (int j = 0; j < n_; ++j) {
        y[j] += band_(0, j) * x[j];
        const int rmax = std::min(kd_, n_ - 1 - j);
        for (int r = 1; r <= rmax; ++r) {
            y[j + r] += band_(r, j) * x[j];
            y[j] += band_(r, j) * x[j + r];
        }
    }
    return y;
}

Eigen::MatrixXd SymBandMatrix::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
    for (int j = 0; j < n_; ++j) {
        const int rmax = std::min(kd_, n_ - 1 - j);
        for (int r = 0; r <= rmax; ++r) {
            m(j + r, j) = band_(r, j);
            m(j, j + r) = band_(r, j);
        }
    }
    return m;
}

namespace {

// Rank gap for the error message; exact eigen count for small systems.
int estimate_rank_gap(const SymBandMatrix& a) {
    const int n = a.size();
    if (n > 600) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.dense(), Eigen::EigenvaluesOnly);
    const double tol = n * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    int gap = 0;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()[i] <= tol) ++gap;
    return gap;
}

}  // namespace

BandCholesky::BandCholesky(const SymBandMatrix& a) : l_(a) {
    const int n = a.size();
    const int kd = a.bandwidth();
    double max_diag = 0.0;
    for (int j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(a.get(j, j)));
    const double pivot_floor = n * std::numeric_limits<double>::epsilon() * max_diag;

    Eigen::MatrixXd& lb = l_.storage();
    for (int j = 0; j < n; ++j) {
        double d = lb(0, j);
        const int kmin = std::max(0, j - kd);
        for (int k = kmin; k < j; ++k) {
            const double ljk = lb(j - k, k);
            d -= ljk * ljk;
        }
        if (!(d > pivot_floor)) {
            throw SingularSystemError(
                "banded Cholesky: nonpositive pivot at column " + std::to_string(j) + " of " +
                    std::to_string(n) + " (rank gap " + std::to_string(estimate_rank_gap(a)) + ")",
                estimate_rank_gap(a));
        }
        const double ljj = std::sqrt(d);
        lb(0, j) = ljj;
        const int imax = std::min(n - 1, j + kd);
        for (int i = j + 1; i <= imax; ++i) {
            double s = lb(i - j, j);
            const int k0 = std::max(0, i - kd);
            for (int k = std::max(k0, kmin); k < j; ++k) s -= lb(i - k, k) * lb(j - k, k);
            lb(i - j, j) = s / ljj;
        }
    }
}

Eigen::VectorXd BandCholesky::solve(const Eigen::VectorXd& rhs) const {
    const int n = l_.size();
    const int kd = l_.bandwidth();
    const Eigen::MatrixXd& lb = l_.storage();
    Eigen::VectorXd x = rhs;
    // L z = rhs
    for (int j = 0; j < n; ++j) {
        x[j] /= lb(0, j);
        const int imax = std::min(n - 1, j + kd);
        for (int i = j + 1; i <= imax; ++i) x[i] -= lb(i - j, j) * x[j];
    }
    // L^T x = z
    for (int j = n - 1; j >= 0; --j) {
        const int imax = std::min(n - 1, j + kd);
        for (int i = j + 1; i <= imax; ++i) x[j] -= lb(i - j, j) * x[i];
        x[j] /= lb(0, j);
    }
    return x;
}

SymBandMatrix BandCholesky::inverse_band() const {
    const int n = l_.size();
    const int kd = l_.bandwidth();
    const Eigen::MatrixXd& lb = l_.storage();

    // Unit-triangular/diagonal split: A = U D U^T with U(i,j) = L(i,j)/L(j,j),
    // d_j = L(j,j)^2. Takahashi: Z(i,j) = delta_ij/d_i - sum_{k>i} U(k,i) Z(k,j),
    // evaluated bottom-up; all references stay inside the band.
    SymBandMatrix z(n, kd);
    Eigen::MatrixXd& zb = z.storage();
    for (int i = n - 1; i >= 0; --i) {
        const double lii = lb(0, i);
        const int kmax = std::min(n - 1, i + kd);
        for (int j = std::min(n - 1, i + kd); j >= i; --j) {
            double v = (i == j) ? 1.0 / (lii * lii) : 0.0;
            for (int k = i + 1; k <= kmax; ++k) {
                const double uki = lb(k - i, i) / lii;
                if (uki == 0.0) continue;
                const double zkj = (k >= j) ? zb(k - j, j) : zb(j - k, k);
                v -= uki * zkj;
            }
            zb(j - i, i) = v;
        }
    }
    return z;
}

double band_trace_product(const SymBandMatrix& z, const SymBandMatrix& g) {
    const int n = g.size();
    const int kd = std::min(z.bandwidth(), g.bandwidth());
    double tr = 0.0;
    for (int j = 0; j < n; ++j) {
        tr += z.get(j, j) * g.get(j, j);
        const int rmax = std::min(kd, n - 1 - j);
        for (int r = 1; r <= rmax; ++r) tr += 2.0 * z.get(j + r, j) * g.get(j + r, j);
    }
    return tr;
}

}  // namespace pcf
