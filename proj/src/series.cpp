#include "pcf/series.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "pcf/errors.hpp"

namespace pcf {

SampleSeries SampleSeries::from_values(std::vector<double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw Error("SampleSeries: need at least 2 samples, got " + std::to_string(n));
    SampleSeries s;
    s.dt = 1.0 / static_cast<double>(n);
    s.t.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.t[i] = static_cast<double>(i + 1) * s.dt;
    s.y = std::move(values);
    return s;
}

SampleSeries SampleSeries::from_points(std::vector<double> t, std::vector<double> y) {
    if (t.size() != y.size())
        throw Error("SampleSeries: t/y length mismatch (" + std::to_string(t.size()) + " vs " +
                    std::to_string(y.size()) + ")");
    const std::size_t n = t.size();
    if (n < 2) throw Error("SampleSeries: need at least 2 samples, got " + std::to_string(n));
    const double dt = (t.back() - t.front()) / static_cast<double>(n - 1);
    if (!(dt > 0.0)) throw Error("SampleSeries: grid must be ascending");
    for (std::size_t i = 1; i < n; ++i) {
        const double gap = t[i] - t[i - 1];
        if (std::abs(gap - dt) > 1e-9 * std::max(std::abs(dt), std::abs(t[i])))
            throw Error("SampleSeries: non-uniform spacing at index " + std::to_string(i));
    }
    SampleSeries s;
    s.t = std::move(t);
    s.y = std::move(y);
    s.dt = dt;
    return s;
}

}  // namespace pcf
