#pragma once

#include <span>

namespace trendlab {

double mean(std::span<const double> xs);

/// Sample standard deviation (n-1 denominator); 0 when n < 2.
double sample_stdev(std::span<const double> xs);

/// Pearson correlation of two equal-length spans. NaN when either side has
/// zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction,
/// converged to ~1e-15.
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of Student's t with `dof` degrees of freedom.
double student_t_two_sided_p(double t, double dof);

}  // namespace trendlab
