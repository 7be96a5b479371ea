#include "spo/specialization.hpp"

#include <cmath>
#include <mutex>

#include <json.hpp>

#include "spo/errors.hpp"

namespace spo {

struct Specialization::Cache {
    std::mutex mu;
    std::vector<GradedScalar> h{}, e{};
    std::vector<double> hf{}, ef{};
};

Specialization::Specialization() : Specialization([](int) { return Rational(0); }, 0, true, std::map<int, Rational>{}) {}

Specialization::Specialization(Coefficient c, int degree, bool graded,
                               std::optional<std::map<int, Rational>> explicit_sums)
    : coeff_(std::move(c)),
      degree_(degree),
      graded_(graded),
      coeff_is_map_(explicit_sums.has_value()),
      explicit_sums_(explicit_sums.value_or(std::map<int, Rational>{})),
      cache_(std::make_shared<Cache>()) {
    if (degree < 0) throw PreconditionViolation("truncation degree must be >= 0");
}

Specialization Specialization::graded(const std::map<int, Rational>& powersums, int degree) {
    return from_powersums(powersums, degree, true);
}

Specialization Specialization::from_powersums(const std::map<int, Rational>& powersums, int degree, bool graded) {
    for (const auto& [k, v] : powersums)
        if (k < 1) throw PreconditionViolation("power sum index must be >= 1");
    auto sums = powersums;
    auto c = [sums](int k) {
        auto it = sums.find(k);
        return it == sums.end() ? Rational(0) : it->second;
    };
    return Specialization(c, degree, graded, powersums);
}

Specialization Specialization::graded(Coefficient c, int degree) {
    return Specialization(std::move(c), degree, true, std::nullopt);
}

Specialization Specialization::constant(Coefficient c, int degree) {
    return Specialization(std::move(c), degree, false, std::nullopt);
}

Specialization Specialization::zero(int degree) { return graded(std::map<int, Rational>{}, degree); }

Specialization Specialization::plancherel(const Rational& theta, int degree) {
    return graded(std::map<int, Rational>{{1, theta}}, degree);
}

namespace {

Rational power(const Rational& x, int k) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(k)));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::abs(k)));
    Rational q = k >= 0 ? Rational(num, den) : Rational(den, num);
    q.canonicalize();
    return q;
}

} // namespace

Specialization Specialization::alphabet(const std::vector<Rational>& y, int degree, bool graded) {
    auto c = [y](int k) {
        Rational s = 0;
        for (const auto& v : y) s += power(v, k);
        return s;
    };
    return Specialization(c, degree, graded, std::nullopt);
}

Specialization Specialization::bc_alphabet(const BCAlphabet& x, int degree, bool graded) {
    for (const auto& v : x.x)
        if (v == 0) throw PreconditionViolation("BC alphabet variables must be nonzero");
    auto c = [x](int k) {
        Rational s = x.include_one ? 1 : 0;
        for (const auto& v : x.x) s += power(v, k) + power(v, -k);
        return s;
    };
    return Specialization(c, degree, graded, std::nullopt);
}

Rational Specialization::powersum_coefficient(int k) const {
    if (k < 1) throw PreconditionViolation("power sum index must be >= 1");
    return coeff_(k);
}

GradedScalar Specialization::p(int k) const {
    if (graded_) return GradedScalar::monomial(powersum_coefficient(k), k, degree_);
    return GradedScalar::constant(powersum_coefficient(k), degree_);
}

// Newton: n h_n = sum_{k=1}^n p_k h_{n-k};  n e_n = sum_{k=1}^n (-1)^{k-1} p_k e_{n-k}.
GradedScalar Specialization::h(int n) const {
    if (n < 0 || (graded_ && n > degree_)) return GradedScalar(degree_);
    std::lock_guard lock(cache_->mu);
    auto& h = cache_->h;
    if (h.empty()) h.push_back(GradedScalar::constant(1, degree_));
    while (static_cast<int>(h.size()) <= n) {
        const int m = static_cast<int>(h.size());
        GradedScalar acc(degree_);
        for (int k = 1; k <= m; ++k) acc += p(k) * h[static_cast<std::size_t>(m - k)];
        acc *= Rational(1, m);
        h.push_back(std::move(acc));
    }
    return h[static_cast<std::size_t>(n)];
}

GradedScalar Specialization::e(int n) const {
    if (n < 0 || (graded_ && n > degree_)) return GradedScalar(degree_);
    std::lock_guard lock(cache_->mu);
    auto& e = cache_->e;
    if (e.empty()) e.push_back(GradedScalar::constant(1, degree_));
    while (static_cast<int>(e.size()) <= n) {
        const int m = static_cast<int>(e.size());
        GradedScalar acc(degree_);
        for (int k = 1; k <= m; ++k) {
            GradedScalar term = p(k) * e[static_cast<std::size_t>(m - k)];
            if (k % 2 == 1) acc += term;
            else acc -= term;
        }
        acc *= Rational(1, m);
        e.push_back(std::move(acc));
    }
    return e[static_cast<std::size_t>(n)];
}

std::vector<GradedScalar> Specialization::h_values(int n_max) const {
    if (graded_ && n_max > degree_)
        throw TruncationOverflow("requested h_" + std::to_string(n_max) + " beyond truncation degree " +
                                 std::to_string(degree_));
    std::vector<GradedScalar> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(h(n));
    return out;
}

std::vector<GradedScalar> Specialization::e_values(int n_max) const {
    if (graded_ && n_max > degree_)
        throw TruncationOverflow("requested e_" + std::to_string(n_max) + " beyond truncation degree " +
                                 std::to_string(degree_));
    std::vector<GradedScalar> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(e(n));
    return out;
}

double Specialization::h_float(int n) const {
    if (n < 0) return 0.0;
    std::lock_guard lock(cache_->mu);
    auto& h = cache_->hf;
    if (h.empty()) h.push_back(1.0);
    while (static_cast<int>(h.size()) <= n) {
        const int m = static_cast<int>(h.size());
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) {
            const double pk = coeff_(k).get_d();
            if (pk != 0.0) acc += pk * h[static_cast<std::size_t>(m - k)];
        }
        h.push_back(acc / m);
    }
    return h[static_cast<std::size_t>(n)];
}

double Specialization::e_float(int n) const {
    if (n < 0) return 0.0;
    std::lock_guard lock(cache_->mu);
    auto& e = cache_->ef;
    if (e.empty()) e.push_back(1.0);
    while (static_cast<int>(e.size()) <= n) {
        const int m = static_cast<int>(e.size());
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) {
            const double pk = coeff_(k).get_d();
            if (pk != 0.0) acc += (k % 2 ? 1.0 : -1.0) * pk * e[static_cast<std::size_t>(m - k)];
        }
        e.push_back(acc / m);
    }
    return e[static_cast<std::size_t>(n)];
}

int Specialization::support_bound() const {
    if (coeff_is_map_) return explicit_sums_.empty() ? 0 : explicit_sums_.rbegin()->first;
    return -1;
}

Specialization Specialization::omega() const {
    auto c = coeff_;
    auto flipped = [c](int k) { return k % 2 ? c(k) : Rational(-c(k)); };
    std::optional<std::map<int, Rational>> sums;
    if (coeff_is_map_) {
        sums.emplace();
        for (const auto& [k, v] : explicit_sums_) (*sums)[k] = k % 2 ? v : Rational(-v);
    }
    return Specialization(flipped, degree_, graded_, sums);
}

Specialization Specialization::with_degree(int degree) const {
    std::optional<std::map<int, Rational>> sums;
    if (coeff_is_map_) sums = explicit_sums_;
    return Specialization(coeff_, degree, graded_, sums);
}

std::string Specialization::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json sums = nlohmann::ordered_json::object();
    if (coeff_is_map_) {
        for (const auto& [k, v] : explicit_sums_) sums[std::to_string(k)] = v.get_str();
    } else {
        for (int k = 1; k <= degree_; ++k) {
            Rational v = coeff_(k);
            if (v != 0) sums[std::to_string(k)] = v.get_str();
        }
    }
    j["powersums"] = sums;
    j["truncation_degree"] = degree_;
    if (!graded_) j["graded"] = false;
    return j.dump();
}

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return parse_rational(v.dump());
    throw ConfigError("expected a rational number, got " + v.dump());
}

} // namespace

Specialization specialization_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("invalid specialization JSON: ") + ex.what());
    }
    if (!j.is_object()) throw ConfigError("specialization JSON must be an object");
    const int degree = j.value("truncation_degree", 8);
    if (degree < 0) throw ConfigError("truncation_degree must be >= 0");
    if (j.contains("x")) {
        BCAlphabet x = bc_alphabet_from_json(text);
        return Specialization::bc_alphabet(x, degree, j.value("graded", false));
    }
    if (!j.contains("powersums") || !j["powersums"].is_object())
        throw ConfigError("specialization JSON needs a 'powersums' object");
    std::map<int, Rational> sums;
    for (const auto& [key, value] : j["powersums"].items()) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ConfigError("power sum index '" + key + "' is not an integer");
        }
        if (k < 1) throw ConfigError("power sum index must be >= 1");
        Rational v = json_rational(value);
        if (v != 0) sums[k] = v;
    }
    return Specialization::from_powersums(sums, degree, j.value("graded", true));
}

BCAlphabet bc_alphabet_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("invalid alphabet JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("x") || !j["x"].is_array())
        throw ConfigError("alphabet JSON needs an 'x' array");
    BCAlphabet out;
    for (const auto& v : j["x"]) out.x.push_back(json_rational(v));
    out.include_one = j.value("include_one", false);
    return out;
}

} // namespace spo
