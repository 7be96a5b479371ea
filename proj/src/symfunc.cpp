#include "spo/symfunc.hpp"

namespace spo {

namespace {

jt::Sequence<GradedScalar> exact_seq(const Specialization& rho, JTForm form) {
    if (form == JTForm::H) return [&rho](int n) { return rho.h(n); };
    return [&rho](int n) { return rho.e(n); };
}

jt::Sequence<double> float_seq(const Specialization& rho, JTForm form) {
    if (form == JTForm::H) return [&rho](int n) { return rho.h_float(n); };
    return [&rho](int n) { return rho.e_float(n); };
}

GradedScalar one(const Specialization& rho) { return GradedScalar::constant(1, rho.truncation_degree()); }

JTForm smaller_form(const Partition& lambda) {
    return lambda.length() <= (lambda.empty() ? 0 : lambda[1]) ? JTForm::H : JTForm::E;
}

GradedScalar expansion(const Partition& lambda, const Specialization& rho, int leg_shift) {
    GradedScalar acc(rho.truncation_degree());
    for (const auto& alpha : frobenius_shifted_partitions(lambda.size(), leg_shift)) {
        if (!lambda.contains(alpha)) continue;
        GradedScalar term = skew_schur(lambda, alpha, rho);
        if ((alpha.size() / 2) % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

} // namespace

GradedScalar schur(const Partition& lambda, const Specialization& rho, JTForm form) {
    return jt::schur(lambda, exact_seq(rho, form), one(rho), form);
}

GradedScalar skew_schur(const Partition& lambda, const Partition& mu, const Specialization& rho) {
    return jt::skew_schur(lambda, mu, exact_seq(rho, JTForm::H), one(rho), GradedScalar(rho.truncation_degree()));
}

GradedScalar sp_char(const Partition& lambda, const Specialization& rho, JTForm form) {
    return jt::character(lambda, exact_seq(rho, form), one(rho), true, form);
}

GradedScalar o_char(const Partition& lambda, const Specialization& rho, JTForm form) {
    return jt::character(lambda, exact_seq(rho, form), one(rho), false, form);
}

GradedScalar sp_via_expansion(const Partition& lambda, const Specialization& rho) {
    return expansion(lambda, rho, +1);
}

GradedScalar o_via_expansion(const Partition& lambda, const Specialization& rho) {
    return expansion(lambda, rho, -1);
}

bool omega_dual_check(const Partition& lambda, const Specialization& rho) {
    return sp_char(lambda, rho) == o_char(lambda.conjugate(), rho.omega());
}

double schur_float(const Partition& lambda, const Specialization& rho) {
    const JTForm form = smaller_form(lambda);
    return jt::schur(lambda, float_seq(rho, form), 1.0, form);
}

double sp_char_float(const Partition& lambda, const Specialization& rho) {
    const JTForm form = smaller_form(lambda);
    return jt::character(lambda, float_seq(rho, form), 1.0, true, form);
}

double o_char_float(const Partition& lambda, const Specialization& rho) {
    const JTForm form = smaller_form(lambda);
    return jt::character(lambda, float_seq(rho, form), 1.0, false, form);
}

} // namespace spo
