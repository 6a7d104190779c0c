#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adjdyn/engine.hpp"

namespace adjdyn {

/// Principal-component projection of a state history.
struct Projection {
    std::vector<double> mean;                     // length n
    std::vector<std::vector<double>> components;  // k orthonormal vectors of length n
    std::vector<double> explained_variance;       // length k, non-increasing
    std::vector<std::vector<double>> points;      // one k-vector per history row
};

struct PcaOptions {
    std::size_t n_components = 2;
    double tol = 1e-10;
    std::size_t max_iters = 10000;
};

/// Mean-centers the rows, forms the sample covariance with divisor T (rows - 1)
/// and extracts the top components by power iteration with deflation,
/// starting from all-ones (a fixed pseudo-random start when all-ones is
/// orthogonal to the remaining data). A
/// component is accepted once ||C v - lambda v|| <= tol * trace(C); components
/// beyond the data's rank get variance 0 and an arbitrary orthonormal
/// completion. Each component is signed so its largest-magnitude coordinate is
/// positive (ties go to the lowest index).
/// Throws TooFewRows, InvalidArgument (too many components) or NoConvergence.
Projection pca_project(const StateHistory& history, const PcaOptions& options = {});

struct CycleReport {
    std::size_t transient = 0;
    std::size_t period = 0;  // 0 when no cycle appears in the record
    bool approximate = false;
};

/// Smallest transient s, then smallest period p, such that rows s and s+p
/// match and every later recorded row repeats with period p. Rows match when
/// every coordinate differs by at most `tol`; tol > 0 marks the report
/// approximate.
CycleReport detect_cycle(const StateHistory& history, double tol = 0.0);

struct ReadoutModel {
    std::vector<double> weights;  // n state weights followed by the intercept
    double training_residual = 0.0;  // sum of squared training errors

    double predict(std::span<const double> state) const;
};

/// Ridge regression on [state, 1] features:
///   min_w sum_t (w . [x_t; 1] - y_t)^2 + ridge * |w|^2
/// via the normal equations and Gaussian elimination with partial pivoting.
/// The intercept is penalized like every other weight.
/// Throws DimensionMismatch, InvalidArgument (ridge < 0) or SingularSystem.
ReadoutModel train_linear_readout(const StateHistory& history, std::span<const double> targets,
                                  double ridge);

/// Solves a x = b in place by Gaussian elimination with partial pivoting.
/// `a` is row-major n x n. Throws SingularSystem.
std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b);

}  // namespace adjdyn
