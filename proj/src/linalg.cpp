#include "spo/linalg.hpp"

#include <algorithm>

#include "spo/errors.hpp"

namespace spo {

namespace {

template <class T>
void check_square(const DenseMatrix<T>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw PreconditionViolation("determinant of a non-square matrix");
}

// Bareiss over an integral domain with exact division `div(a, b)`.
template <class T, class IsZero, class Div>
T bareiss(DenseMatrix<T> a, T one, IsZero is_zero, Div div) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(a[r][k])) ++r;
            if (r == n) return T{};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    return negate ? T(-det) : det;
}

} // namespace

GradedScalar determinant(const DenseMatrix<GradedScalar>& m) {
    check_square(m);
    if (m.empty()) return GradedScalar::constant(1, 0);
    int degree = m[0][0].degree();
    for (const auto& row : m)
        for (const auto& x : row) degree = std::min(degree, x.degree());
    DenseMatrix<Polynomial> p(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) p[i].push_back(Polynomial::from_graded(x.truncated(degree)));
    Polynomial det = bareiss(
        std::move(p), Polynomial({Rational(1)}), [](const Polynomial& x) { return x.is_zero(); },
        [](const Polynomial& x, const Polynomial& y) { return x.exact_div(y); });
    return det.to_graded(degree);
}

Rational determinant(const DenseMatrix<Rational>& m) {
    check_square(m);
    return bareiss(
        m, Rational(1), [](const Rational& x) { return x == 0; },
        [](const Rational& x, const Rational& y) { return Rational(x / y); });
}

double determinant(const DenseMatrix<double>& m) {
    check_square(m);
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return determinant(a);
}

double determinant(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw PreconditionViolation("determinant of a non-square matrix");
    if (m.rows() == 0) return 1.0;
    return m.partialPivLu().determinant();
}

} // namespace spo
