#include "spo/graded.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "spo/errors.hpp"

namespace spo {

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw ConfigError("empty rational literal");
    try {
        if (text.find_first_of(".eE") == std::string::npos) {
            Rational q(text, 10);
            q.canonicalize();
            return q;
        }
        // decimal literal, optionally with exponent: parsed exactly
        std::string mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string::npos) {
            mantissa = text.substr(0, e);
            exponent = std::stol(text.substr(e + 1));
        }
        bool negative = false;
        if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
            negative = mantissa[0] == '-';
            mantissa.erase(0, 1);
        }
        std::string digits;
        long scale = 0;
        bool seen_dot = false;
        for (char c : mantissa) {
            if (c == '.') {
                if (seen_dot) throw ConfigError("malformed decimal '" + raw + "'");
                seen_dot = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                if (seen_dot) ++scale;
            } else {
                throw ConfigError("malformed decimal '" + raw + "'");
            }
        }
        if (digits.empty()) throw ConfigError("malformed decimal '" + raw + "'");
        mpz_class num(digits, 10);
        mpz_class den = 1;
        exponent -= scale;
        mpz_class ten = 10;
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
        if (exponent >= 0) num *= p;
        else den = p;
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        throw ConfigError("malformed rational '" + raw + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

GradedScalar GradedScalar::constant(const Rational& value, int degree) {
    GradedScalar g(degree);
    g[0] = value;
    return g;
}

GradedScalar GradedScalar::monomial(const Rational& value, int power, int degree) {
    GradedScalar g(degree);
    if (power >= 0 && power <= degree) g[power] = value;
    return g;
}

Rational GradedScalar::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool GradedScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

int GradedScalar::valuation() const {
    for (int k = 0; k <= degree(); ++k)
        if ((*this)[k] != 0) return k;
    return degree() + 1;
}

GradedScalar GradedScalar::truncated(int d) const {
    GradedScalar g(d);
    for (int k = 0; k <= std::min(d, degree()); ++k) g[k] = (*this)[k];
    return g;
}

GradedScalar& GradedScalar::operator+=(const GradedScalar& o) {
    if (o.degree() < degree()) coeffs_.resize(o.coeffs_.size());
    for (int k = 0; k <= degree(); ++k) (*this)[k] += o[k];
    return *this;
}

GradedScalar& GradedScalar::operator-=(const GradedScalar& o) {
    if (o.degree() < degree()) coeffs_.resize(o.coeffs_.size());
    for (int k = 0; k <= degree(); ++k) (*this)[k] -= o[k];
    return *this;
}

GradedScalar operator*(const GradedScalar& a, const GradedScalar& b) {
    const int d = std::min(a.degree(), b.degree());
    GradedScalar out(d);
    for (int i = 0; i <= d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= d; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

GradedScalar& GradedScalar::operator*=(const GradedScalar& o) { return *this = *this * o; }

GradedScalar& GradedScalar::operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
}

GradedScalar GradedScalar::operator-() const {
    GradedScalar g = *this;
    for (auto& c : g.coeffs_) c = -c;
    return g;
}

bool operator==(const GradedScalar& a, const GradedScalar& b) {
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

GradedScalar GradedScalar::exp() const {
    if ((*this)[0] != 0) throw PreconditionViolation("exp needs a zero constant term");
    const int d = degree();
    GradedScalar g(d);
    g[0] = 1;
    for (int n = 1; n <= d; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            if ((*this)[k] != 0) acc += k * (*this)[k] * g[n - k];
        g[n] = acc / n;
    }
    return g;
}

GradedScalar GradedScalar::log1p() const {
    if ((*this)[0] != 0) throw PreconditionViolation("log1p needs a zero constant term");
    const int d = degree();
    GradedScalar l(d);
    for (int n = 1; n <= d; ++n) {
        Rational acc = n * (*this)[n];
        for (int k = 1; k < n; ++k) acc -= k * l[k] * (*this)[n - k];
        l[n] = acc / n;
    }
    return l;
}

GradedScalar GradedScalar::inverse() const {
    if ((*this)[0] == 0) throw PreconditionViolation("series with zero constant term is not invertible");
    const int d = degree();
    GradedScalar inv(d);
    inv[0] = 1 / (*this)[0];
    for (int n = 1; n <= d; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += (*this)[k] * inv[n - k];
        inv[n] = -acc * inv[0];
    }
    return inv;
}

double GradedScalar::evaluate(double value) const {
    double acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * value + (*this)[k].get_d();
    return acc;
}

std::string GradedScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if ((*this)[k] == 0) continue;
        os << (first ? "" : " + ") << (*this)[k].get_str();
        if (k > 0) os << "*t^" << k;
        first = false;
    }
    if (first) os << '0';
    os << " + O(t^" << degree() + 1 << ')';
    return os.str();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::from_graded(const GradedScalar& g) { return Polynomial(g.coefficients()); }

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GradedScalar Polynomial::to_graded(int d) const {
    GradedScalar g(d);
    for (int k = 0; k <= std::min(d, degree()); ++k) g[k] = coeffs_[static_cast<std::size_t>(k)];
    return g;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw PreconditionViolation("polynomial division by zero");
    if (is_zero()) return {};
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    const int qd = degree() - dd;
    if (qd < 0) throw PreconditionViolation("inexact polynomial division");
    std::vector<Rational> quot(static_cast<std::size_t>(qd) + 1);
    const Rational& lead = divisor.coeffs_.back();
    for (int k = qd; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw PreconditionViolation("inexact polynomial division");
    return Polynomial(std::move(quot));
}

} // namespace spo
