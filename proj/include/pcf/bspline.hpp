#ifndef PCF_BSPLINE_HPP
#define PCF_BSPLINE_HPP

#include <Eigen/Core>
#include <vector>

namespace pcf {

struct SampleSeries;

/// Clamped B-spline basis of a given degree: boundary knots with
/// multiplicity degree+1, strictly interior knots in between.
class BSplineBasis {
public:
    BSplineBasis(int degree, double lo, double hi, std::vector<double> interior);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
    double domain_lo() const { return knots_[degree_]; }
    double domain_hi() const { return knots_[knots_.size() - degree_ - 1]; }
    const std::vector<double>& knots() const { return knots_; }

    /// Index i with knots[i] <= x < knots[i+1] (right-clamped at the domain end).
    int find_span(double x) const;

    /// Nonzero basis values and derivatives at x: ders(r, j) is the r-th
    /// derivative of basis function (first + j), j = 0..degree.
    /// Cox-de Boor recursion with the derivative triangle (NURBS book A2.3).
    void eval(double x, int nderiv, int& first, Eigen::MatrixXd& ders) const;

    /// All basis values/derivatives scattered to a dense length-size() vector.
    Eigen::VectorXd eval_dense(double x, int deriv) const;

    /// Exact B-spline coefficients of the polynomial sum_r poly[r] * t^r
    /// (degree of poly < size of poly <= degree+1), via Marsden duals:
    /// t^r = sum_j e_r(knots_{j+1..j+d}) / C(d,r) * B_j(t).
    Eigen::VectorXd polynomial_coeffs(const std::vector<double>& poly) const;

private:
    int degree_;
    std::vector<double> knots_;
};

/// Spec default knot rule: every interior sample point for N <= 200,
/// otherwise max(20, N/4) quantile-placed interior knots.
std::vector<double> default_interior_knots(const SampleSeries& series);

}  // namespace pcf

#endif
