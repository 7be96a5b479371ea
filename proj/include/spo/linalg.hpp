#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spo/graded.hpp"

namespace spo {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Exact determinant modulo t^{D+1}, D the smallest truncation among the
/// entries. Fraction-free Bareiss elimination runs on untruncated
/// polynomials in Q[t]; the result is truncated at the end.
GradedScalar determinant(const DenseMatrix<GradedScalar>& m);
Rational determinant(const DenseMatrix<Rational>& m);

/// LU with partial pivoting.
double determinant(const DenseMatrix<double>& m);
double determinant(const Eigen::MatrixXd& m);

inline double halve(double x) { return 0.5 * x; }
inline GradedScalar halve(GradedScalar x) { return x *= Rational(1, 2); }

} // namespace spo
