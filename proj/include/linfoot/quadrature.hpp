#pragma once

#include <functional>

namespace linfoot {

struct QuadSpec {
    enum class Domain { unit_square, positive_quadrant };

    double abs_tol = 1e-9;
    int max_subdivisions = 20000;
    Domain domain = Domain::unit_square;

    void validate() const;
};

struct QuadResult {
    double value;
    double error_bound;
    int panels;
};

/// Adaptive tensor Gauss-Kronrod integration of f over the unit square or,
/// after the x = t/(1-t) change of variables on each axis, the positive
/// quadrant. Guarantees estimated absolute error <= spec.abs_tol or throws
/// convergence_error carrying the best estimate and its bound.
QuadResult quad2d_result(const std::function<double(double, double)>& f,
                         const QuadSpec& spec);

double quad2d(const std::function<double(double, double)>& f, const QuadSpec& spec);

} // namespace linfoot
