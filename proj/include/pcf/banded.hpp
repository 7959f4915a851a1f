#ifndef PCF_BANDED_HPP
#define PCF_BANDED_HPP

#include <Eigen/Core>

namespace pcf {

/// Symmetric banded matrix, lower-band storage: band(r, j) = A(j+r, j)
/// for r = 0..kd.
class SymBandMatrix {
public:
    SymBandMatrix() = default;
    SymBandMatrix(int n, int kd) : n_(n), kd_(kd), band_(Eigen::MatrixXd::Zero(kd + 1, n)) {}

    int size() const { return n_; }
    int bandwidth() const { return kd_; }

    /// Writable entry, requires i >= j and i - j <= kd.
    double& at(int i, int j) { return band_(i - j, j); }

    /// Read access for any (i, j); zero outside the band.
    double get(int i, int j) const {
        if (i < j) std::swap(i, j);
        const int r = i - j;
        return r > kd_ ? 0.0 : band_(r, j);
    }

    void add_scaled(const SymBandMatrix& other, double scale);

    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd dense() const;
    double max_abs() const { return band_.cwiseAbs().maxCoeff(); }

    const Eigen::MatrixXd& storage() const { return band_; }
    Eigen::MatrixXd& storage() { return band_; }

private:
    int n_ = 0;
    int kd_ = 0;
    Eigen::MatrixXd band_;
};

/// Banded Cholesky factorization A = L L^T with L in the same band layout.
/// Throws SingularSystemError (with an estimated rank gap for small systems)
/// when a pivot falls below n*eps*max|diag|.
class BandCholesky {
public:
    explicit BandCholesky(const SymBandMatrix& a);

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

    /// Central band of A^{-1} (Takahashi recursion on the LDL^T form).
    /// Exact within the band: the recursion for in-band entries references
    /// in-band entries only.
    SymBandMatrix inverse_band() const;

    int size() const { return l_.size(); }

private:
    SymBandMatrix l_;
};

/// tr(Z * G) for two matrices given by their (identical-layout) bands;
/// exact when the true product's trace only involves in-band entries of Z,
/// which holds for Z = A^{-1} restricted to the band of G.
double band_trace_product(const SymBandMatrix& z, const SymBandMatrix& g);

}  // namespace pcf

#endif
