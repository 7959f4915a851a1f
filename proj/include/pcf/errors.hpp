#ifndef PCF_ERRORS_HPP
#define PCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcf {

/// Base class for all estimation errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kernel halfwidth at or below the grid spacing.
class BandwidthError : public Error {
public:
    using Error::Error;
};

/// Requested derivative order not supported by the kernel/spline.
class DerivativeOrderError : public Error {
public:
    using Error::Error;
};

/// Normal equations (or a regression design) numerically singular.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& msg, int rank_gap)
        : Error(msg), rank_gap(rank_gap) {}
    int rank_gap;  // estimated dimension of the null space (0 = unknown)
};

/// All candidate scores non-finite, or data unusable for selection.
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// |g^(l+1)| below the curvature floor at a change point.
class FlatCurvatureError : public Error {
public:
    using Error::Error;
};

/// Adjacent change points with the same implied sign.
class InconsistentGeometryError : public Error {
public:
    using Error::Error;
};

/// Saturated loss-of-fit denominator: (gamma1*p + m)/N >= 1.
class SaturatedModelError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the model domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV input; message names row and column.
class CsvError : public Error {
public:
    using Error::Error;
};

}  // namespace pcf

#endif
