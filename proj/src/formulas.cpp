#include "gk/formulas.hpp"

#include <cmath>

#include "gk/errors.hpp"

namespace gk {

BigInt stahl_rhs(uint64_t k, uint64_t s, uint64_t d) {
    if (k < 1 || s < 1 || d < 2 * s)
        throw BadParameter("stahl_rhs: need k >= 1, s >= 1, d >= 2s");
    BigInt q = ceil_div(BigInt(static_cast<unsigned long>(k)), BigInt(static_cast<unsigned long>(s)));
    return q * (BigInt(static_cast<unsigned long>(d)) - 2 * BigInt(static_cast<unsigned long>(s))) +
           2 * BigInt(static_cast<unsigned long>(k));
}

BigInt thm_s2_value(uint64_t k, uint64_t d) {
    if (k < 1 || d < 4) throw BadParameter("thm_s2_value: need k >= 1, d >= 4");
    return stahl_rhs(k, 2, d);
}

Rational thm_general_lower(uint64_t k, uint64_t s, uint64_t d, const Rational& c) {
    if (s < 3 || k < s || d < 2 * s)
        throw BadParameter("thm_general_lower: need k >= s >= 3, d >= 2s");
    if (c < 0) throw BadParameter("thm_general_lower: need c >= 0");
    BigInt num = BigInt(static_cast<unsigned long>(k)) -
                 ceil_div(BigInt(static_cast<unsigned long>(k + 1)), BigInt(static_cast<unsigned long>(s))) + 1;
    Rational slope = make_rational(num, BigInt(static_cast<unsigned long>(s - 1)));
    return slope * Rational(static_cast<unsigned long>(d)) - c;
}

Rational bukh_cox_lower(uint64_t k, uint64_t s, uint64_t d) {
    if (k < 1 || s < 1 || d < 2 * s)
        throw BadParameter("bukh_cox_lower: need k >= 1, s >= 1, d >= 2s");
    return make_rational(BigInt(static_cast<unsigned long>(k)) * BigInt(static_cast<unsigned long>(d)),
                         BigInt(static_cast<unsigned long>(s)));
}

BoundReport bound_report(uint64_t d, uint64_t m) {
    if (d < 2 || d % 2 != 0) throw BadParameter("bound_report: d must be even and >= 2");
    uint64_t s = d / 2;
    if (m < 1 || m > s) throw BadParameter("bound_report: need 1 <= m <= d/2");
    BoundReport rep;
    rep.d = d;
    rep.m = m;
    rep.n = binomial(d, s);
    rep.R = binomial_prefix_sum(d, s - m);
    double x = 0.5 - double(m) / double(d);
    double h = 0.0;
    if (x > 0.0 && x < 1.0) h = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    rep.entropy_estimate = std::exp2(h * double(d));
    rep.r_lt_n = rep.R < rep.n;
    double ln = log2_mpz(rep.n), lr = log2_mpz(rep.R);
    rep.delta = ln > 0.0 ? 1.0 - lr / ln : 0.0;
    return rep;
}

CrossoverResult crossover_search(const CrossoverRule& rule, uint64_t d_max) {
    if (d_max > 10000) throw BadParameter("crossover_search: d_max capped at 10000");
    uint64_t step = 0;
    switch (rule.kind) {
    case CrossoverRule::Kind::Ell:
        if (rule.ell < 1) throw BadParameter("crossover_search: ell must be positive");
        step = 2 * rule.ell;
        break;
    case CrossoverRule::Kind::DOver8:
        step = 8;
        break;
    }
    CrossoverResult out;
    for (uint64_t d = step; d <= d_max; d += step) {
        // m = d/(2*ell) under the ell rule, d/8 otherwise; both are d/step
        BoundReport rep = bound_report(d, d / step);
        if (rep.r_lt_n && !out.found) {
            out.found = true;
            out.minimal_d = d;
        }
        out.reports.push_back(std::move(rep));
    }
    return out;
}

} // namespace gk
