#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace spo {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Element of Q[t] / t^{D+1}: a dense vector of rational coefficients for
/// degrees 0..D. Binary operations between different truncations reduce to
/// the smaller one.
class GradedScalar {
public:
    GradedScalar() : coeffs_(1) {}
    explicit GradedScalar(int degree) : coeffs_(static_cast<std::size_t>(degree) + 1) {}

    static GradedScalar constant(const Rational& value, int degree);
    static GradedScalar monomial(const Rational& value, int power, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    /// Coefficient of t^k, zero above the truncation.
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// Smallest k with a nonzero coefficient, or degree() + 1.
    int valuation() const;
    GradedScalar truncated(int degree) const;

    GradedScalar& operator+=(const GradedScalar& o);
    GradedScalar& operator-=(const GradedScalar& o);
    GradedScalar& operator*=(const GradedScalar& o);
    GradedScalar& operator*=(const Rational& q);
    GradedScalar operator-() const;

    friend GradedScalar operator+(GradedScalar a, const GradedScalar& b) { return a += b; }
    friend GradedScalar operator-(GradedScalar a, const GradedScalar& b) { return a -= b; }
    friend GradedScalar operator*(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator*(GradedScalar a, const Rational& q) { return a *= q; }
    friend GradedScalar operator*(const Rational& q, GradedScalar a) { return a *= q; }
    friend bool operator==(const GradedScalar& a, const GradedScalar& b);

    /// exp(s) for s with zero constant term.
    GradedScalar exp() const;
    /// log(1 + s) for s with zero constant term.
    GradedScalar log1p() const;
    /// Multiplicative inverse; requires a nonzero constant term.
    GradedScalar inverse() const;

    /// Evaluate the truncated polynomial at t = value.
    double evaluate(double value) const;
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// Dense univariate polynomial over Q used for exact (untruncated)
/// elimination; Q[t] is an integral domain, so Bareiss divisions are exact.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial from_graded(const GradedScalar& g);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    GradedScalar to_graded(int degree) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    /// Exact quotient; throws if `divisor` does not divide *this.
    Polynomial exact_div(const Polynomial& divisor) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

} // namespace spo
