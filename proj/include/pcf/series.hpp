#ifndef PCF_SERIES_HPP
#define PCF_SERIES_HPP

#include <vector>

namespace pcf {

/// Uniformly spaced observations (t_i, y_i).
///
/// The canonical construction for a length-N signal places t_i = i/N
/// (grid spacing delta with N*delta = 1); arbitrary uniform grids are
/// accepted so rescaled domains (e.g. a spectral frequency axis mapped
/// to [0,1]) can reuse the same fitting machinery.
struct SampleSeries {
    std::vector<double> t;
    std::vector<double> y;
    double dt = 0.0;

    int size() const { return static_cast<int>(y.size()); }
    double domain_lo() const { return t.front(); }
    double domain_hi() const { return t.back(); }

    /// t_i = i/N, i = 1..N.
    static SampleSeries from_values(std::vector<double> values);

    /// Validates equal lengths, N >= 2, ascending uniform spacing
    /// (relative tolerance 1e-9).
    static SampleSeries from_points(std::vector<double> t, std::vector<double> y);
};

}  // namespace pcf

#endif
