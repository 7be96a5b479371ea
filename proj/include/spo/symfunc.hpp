#pragma once

#include <functional>

#include "spo/graded.hpp"
#include "spo/linalg.hpp"
#include "spo/partition.hpp"
#include "spo/specialization.hpp"

namespace spo {

/// Which Jacobi-Trudi determinant to evaluate: in h_n (size l(lambda)) or in
/// e_n (size lambda_1).
enum class JTForm { H, E };

GradedScalar schur(const Partition& lambda, const Specialization& rho, JTForm form = JTForm::H);
GradedScalar skew_schur(const Partition& lambda, const Partition& mu, const Specialization& rho);
GradedScalar sp_char(const Partition& lambda, const Specialization& rho, JTForm form = JTForm::H);
GradedScalar o_char(const Partition& lambda, const Specialization& rho, JTForm form = JTForm::H);

/// sp_lambda = sum_alpha (-1)^{|alpha|/2} s_{lambda/alpha}, alpha = (a_1.. | a_1+1 ..);
/// o_lambda  = sum_beta  (-1)^{|beta|/2}  s_{lambda/beta},  beta  = (b_1+1.. | b_1 ..).
GradedScalar sp_via_expansion(const Partition& lambda, const Specialization& rho);
GradedScalar o_via_expansion(const Partition& lambda, const Specialization& rho);

/// sp_lambda(rho) == o_{lambda'}(omega rho), exactly.
bool omega_dual_check(const Partition& lambda, const Specialization& rho);

/// Double-precision evaluations at t = 1, using whichever Jacobi-Trudi form
/// has the smaller determinant.
double schur_float(const Partition& lambda, const Specialization& rho);
double sp_char_float(const Partition& lambda, const Specialization& rho);
double o_char_float(const Partition& lambda, const Specialization& rho);

namespace jt {

// Generic Jacobi-Trudi determinants over any scalar with a `determinant`
// overload. `seq(n)` must return h_n (or e_n), zero for n < 0.
template <class T>
using Sequence = std::function<T(int)>;

template <class T>
T schur(const Partition& lambda, const Sequence<T>& seq, const T& one, JTForm form) {
    const Partition shape = form == JTForm::H ? lambda : lambda.conjugate();
    const int n = shape.length();
    if (n == 0) return one;
    DenseMatrix<T> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(i - 1)].push_back(seq(shape[i] - i + j));
    return determinant(m);
}

template <class T>
T skew_schur(const Partition& lambda, const Partition& mu, const Sequence<T>& seq, const T& one, const T& zero) {
    if (!lambda.contains(mu)) return zero;
    const int n = lambda.length();
    if (n == 0) return one;
    DenseMatrix<T> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)].push_back(seq(lambda[i] - i - (mu[j] - j)));
    return determinant(m);
}

// sp: h-form  1/2 det[h_{l_i-i+j} + h_{l_i-i-j+2}],  e-form det[e_{l'_i-i+j} - e_{l'_i-i-j}]
// o:  h-form  det[h_{l_i-i+j} - h_{l_i-i-j}],        e-form 1/2 det[e_{l'_i-i+j} + e_{l'_i-i-j+2}]
template <class T>
T character(const Partition& lambda, const Sequence<T>& seq, const T& one, bool symplectic, JTForm form) {
    const Partition shape = form == JTForm::H ? lambda : lambda.conjugate();
    const int n = shape.length();
    if (n == 0) return one;
    const bool plus_form = symplectic == (form == JTForm::H);
    DenseMatrix<T> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int base = shape[i] - i + j;
            T entry = seq(base);
            if (plus_form) entry += seq(shape[i] - i - j + 2);
            else entry -= seq(shape[i] - i - j);
            m[static_cast<std::size_t>(i - 1)].push_back(std::move(entry));
        }
    }
    T det = determinant(m);
    return plus_form ? halve(det) : det;
}

} // namespace jt

} // namespace spo
