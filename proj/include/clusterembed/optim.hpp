#pragma once

#include <functional>

#include "clusterembed/types.hpp"

namespace clusterembed::optim {

struct BfgsResult {
    Vector x;
    double value = 0.0;
    int iterations = 0;
};

/// Dense BFGS with Armijo backtracking. Suitable for the low-dimensional
/// subproblems here (translation steps are 2D). Never returns a point worse
/// than x0.
BfgsResult minimize_bfgs(const std::function<double(const Vector&)>& f,
                         const std::function<Vector(const Vector&)>& grad, const Vector& x0,
                         int max_iterations = 100, double grad_tol = 1e-10);

/// Golden-section search for a minimum of f on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-10, int max_iterations = 200);

} // namespace clusterembed::optim
