#pragma once

#include <stdexcept>
#include <string>

namespace linfoot {

/// Argument outside an operation's documented domain.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data unusable: too few rows, zero variance, malformed records.
class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem or stream failure.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Model file failed structural or checksum validation.
class corrupt_model_error : public io_error {
public:
    using io_error::io_error;
};

/// Model file written by an incompatible format version.
class unsupported_version_error : public io_error {
public:
    using io_error::io_error;
};

/// Optimization produced a non-finite loss; `epoch` is 1-based.
class training_error : public std::runtime_error {
public:
    training_error(const std::string& msg, int epoch_index)
        : std::runtime_error(msg), epoch(epoch_index) {}
    int epoch;
};

/// Adaptive quadrature ran out of subdivisions; carries the best estimate
/// and its error bound so callers can decide whether it is still usable.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& msg, double best_estimate, double bound)
        : std::runtime_error(msg), estimate(best_estimate), error_bound(bound) {}
    double estimate;
    double error_bound;
};

} // namespace linfoot
