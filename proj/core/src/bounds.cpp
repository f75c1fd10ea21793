#include "arakount/bounds.hpp"

#include <cmath>
#include <limits>

#include "arakount/hilbert_samuel.hpp"
#include "arakount/prime_distribution.hpp"

namespace arakount {

namespace {

double log_factorial(int n) { return log_int(factorial(n)); }

double pow_double(double b, double e) { return std::exp(e * std::log(b)); }

double log_B_over_deg(const Rat& B, const NumberFieldData& K) {
    if (B < 1) fail(ErrorKind::InvalidParams, "height bound B must be >= 1");
    return log_rat(B) / K.degree;
}

void push(BoundReport& r, const std::string& name, double value) {
    r.subterms.emplace_back(name, value);
    r.log_value += value;
}

} // namespace

double constant_c1(int n) {
    if (n < 2) fail(ErrorKind::InvalidParams, "need n >= 2");
    double lead = std::pow(2.0 * n, n) / factorial(n - 1).get_d();
    return -lead * (std::log(2.0) + 5.0 * std::log(n + 1.0) - 0.5 * harmonic(n)) -
           1.5 * std::log(n + 1.0) - std::pow(2.0, n - 1);
}

BoundConstants constants_c2_c3(int n, int delta, const NumberFieldData& K, bool grh_mode) {
    if (n < 2 || delta < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and delta >= 1");
    BoundConstants c;
    c.n = n;
    c.delta = delta;
    c.c1 = constant_c1(n);
    c.a_n = n / ((n - 1.0) * pow_double(delta, 1.0 / (n - 1)));
    c.c_ndelta = (double(delta) * delta - 1.0) *
                 (3.0 * std::log(double(delta)) + delta * std::log(3.0) +
                  log_int(binomial(n + delta, delta)));
    if (!grh_mode) {
        c.symbolic = true;
        c.unknowns = {"kappa1(K)", "kappa2(K,n)", "eps2(K)"};
        return c;
    }
    auto kb = kappa_bounds(K, n, true);
    c.kappa1 = kb.kappa1;
    c.kappa2 = kb.kappa2;
    const int deg = K.degree;
    const double eps2 = 9550.0 * K.log_disc_plus_degree();
    c.log_c2 = n * c.c1 * deg / ((n - 1.0) * pow_double(2.0, 1.0 / (n - 1))) + c.kappa2 +
               log_factorial(n - 1) / (n - 1.0) + 3.0 +
               (std::pow(double(n), 3) + 2.0 * n * n + n - 4.0) /
                   (2.0 * (double(n) * n - 1.0) * pow_double(factorial(n - 1).get_d(), 1.0 / (n - 1))) *
                   (1.0 + n / 4.0) * (1.0 + c.kappa1);
    const double bfac = 2.0 * eps2 - 3.0 * std::log(3.0) + deg;
    c.log_c3 = c.log_c2 +
               std::log((n + 6.0) * (n - 1.0) * std::pow(2.0 * n, n) / factorial(n).get_d()) + bfac;
    c.log_c3prime =
        c.log_c2 + std::log(-c.c1 * (n + 6.0) * std::pow(2.0 * n, n) / factorial(n - 1).get_d()) +
        bfac;
    return c;
}

SiegelThreshold siegel_threshold(int n, int delta, double h_X) {
    if (n < 2 || delta < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and delta >= 1");
    if (h_X < 0) fail(ErrorKind::InvalidParams, "heights are nonnegative");
    SiegelThreshold t;
    t.threshold = factorial(n - 1).get_d() / (delta * std::pow(2.0 * n, n)) * h_X + constant_c1(n);
    t.degree_cap = 2 * delta + n - 1;
    return t;
}

BoundReport determinant_rhs(int n, int delta, int D, std::pair<double, double> h_interval,
                            const std::vector<PrimeDatum>& primes, const NumberFieldData& K) {
    if (n < 2 || delta < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and delta >= 1");
    const int d = n - 1;
    const int min_D = 2 * (n - d) * (delta - 1) + d + 2;
    if (D < min_D)
        fail(ErrorKind::HypothesisViolated,
             "uniform lower bound needs D >= " + std::to_string(min_D));
    for (const auto& pd : primes)
        if (pd.n_points <= 0) fail(ErrorKind::InvalidParams, "n(X_p) must be positive");

    BoundReport r;
    r.kind = BoundKind::DeterminantRhs;
    r.applicable = true;

    const double h_lo = h_interval.first;
    double muhat_lower = factorial(d).get_d() / (delta * std::pow(2.0 * d + 2.0, d + 1)) * h_lo -
                         std::log(n + 1.0) - std::pow(2.0, d);
    push(r, "muhat_over_D_lower", muhat_lower);

    Int r1 = rank_r1(n, D, delta);
    const double log_r1 = log_int(r1);
    push(r, "neg_half_log_r1_over_D", -log_r1 / (2.0 * D));

    const double r1_root = std::exp(log_r1 / (n - 1));
    const double fac_root = pow_double(factorial(n - 1).get_d(), 1.0 / (n - 1));
    const double lin_coef = (std::pow(double(n), 3) + 2.0 * n * n + n - 4.0) /
                            (2.0 * double(D) * n * (n + 1.0));
    double prime_sum = 0.0;
    for (const auto& pd : primes) {
        double nroot = pow_double(static_cast<double>(pd.n_points), 1.0 / (n - 1));
        double coef = fac_root * (n - 1.0) * r1_root / (double(n) * D * nroot) - lin_coef;
        prime_sum += coef * std::log(static_cast<double>(pd.norm));
    }
    push(r, "prime_sum", prime_sum / K.degree);
    return r;
}

BoundReport aux_degree_bound(int n, int delta, const Rat& B, const Rat& H_X,
                             const NumberFieldData& K, AuxVariant variant, bool grh_mode,
                             std::optional<double> bprime_log_exact) {
    if (delta < 2) fail(ErrorKind::InvalidParams, "auxiliary degree bounds need delta >= 2");
    if (H_X < 1) fail(ErrorKind::InvalidParams, "H_K(X) >= 1");
    BoundConstants c = constants_c2_c3(n, delta, K, grh_mode);
    BoundReport r;
    r.kind = BoundKind::AuxDegree;
    if (c.symbolic) {
        r.symbolic = true;
        r.unknowns = c.unknowns;
        r.log_value = std::numeric_limits<double>::quiet_NaN();
        r.note = "non-GRH mode: constants are existential only";
        return r;
    }
    r.applicable = true;
    const double logB = log_B_over_deg(B, K) * K.degree; // log B itself
    const double log_delta = std::log(double(delta));
    const double h_X = log_rat(H_X);
    const double height_coef = factorial(n).get_d() / ((n - 1.0) * std::pow(2.0 * n, n)) *
                               pow_double(delta, -1.0 - 1.0 / (n - 1));
    switch (variant) {
    case AuxVariant::Theorem: {
        push(r, "C2", c.log_c2);
        push(r, "B_term", c.a_n * logB);
        push(r, "delta_term", (4.0 - 1.0 / (n - 1)) * log_delta);
        double bprime_log = bprime_log_exact
                                ? *bprime_log_exact
                                : nongeom_mass(n, delta, h_X, K, grh_mode).bprime_log_bound;
        push(r, "log_bprime", bprime_log);
        push(r, "height_term", -height_coef * h_X);
        break;
    }
    case AuxVariant::Cor1:
        push(r, "log_C3", c.log_c3);
        push(r, "delta_term", 3.0 * log_delta);
        push(r, "B_term", c.a_n * logB);
        break;
    case AuxVariant::Cor2:
        push(r, "log_C3prime", c.log_c3prime);
        push(r, "delta_term", (3.0 - 1.0 / (n - 1)) * log_delta);
        push(r, "B_term", c.a_n * logB);
        push(r, "logB_factor", std::log(std::max(logB / K.degree, 1.0)));
        push(r, "height_term", -height_coef * h_X);
        break;
    }
    return r;
}

BoundReport curve_count_bound(int delta, const Rat& B, const NumberFieldData& K,
                              CurveCountVariant variant, bool grh_mode) {
    if (delta < 2) fail(ErrorKind::InvalidParams, "curve count bounds need delta >= 2");
    BoundConstants c = constants_c2_c3(2, delta, K, grh_mode);
    BoundReport r;
    r.kind = BoundKind::CurveCount;
    if (c.symbolic) {
        r.symbolic = true;
        r.unknowns = c.unknowns;
        r.log_value = std::numeric_limits<double>::quiet_NaN();
        r.note = "non-GRH mode: constants are existential only";
        return r;
    }
    r.applicable = true;
    const double logB = log_rat(B);
    const double log_delta = std::log(double(delta));
    if (variant == CurveCountVariant::T61) {
        push(r, "log_C3", c.log_c3);
        push(r, "delta_term", 4.0 * log_delta);
        push(r, "B_term", (2.0 / delta) * logB);
    } else {
        push(r, "log_C3prime", c.log_c3prime);
        push(r, "delta_term", 3.0 * log_delta);
        push(r, "B_term", (2.0 / delta) * logB);
        push(r, "logB_factor", std::log(std::max(logB / K.degree, 1.0)));
    }
    return r;
}

NongeomMass nongeom_mass(int n, int delta, double h_X, const NumberFieldData& K, bool grh_mode) {
    if (n < 2 || delta < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and delta >= 1");
    if (h_X < 0) fail(ErrorKind::InvalidParams, "heights are nonnegative");
    NongeomMass m;
    const double stuff = 3.0 * std::log(double(delta)) + delta * std::log(3.0) +
                         log_int(binomial(n + delta, delta));
    m.c_ndelta = (double(delta) * delta - 1.0) * stuff;
    m.mass_bound = (double(delta) * delta - 1.0) * h_X + m.c_ndelta;
    if (delta == 1) {
        m.bprime_log_bound = -std::numeric_limits<double>::infinity();
        return m;
    }
    if (!grh_mode)
        fail(ErrorKind::Unsupported, "b' bound requires the explicit eps2 (GRH mode)");
    const double eps2 = 9550.0 * K.log_disc_plus_degree();
    const double dd = double(delta);
    m.bprime_log_bound = (2.0 * eps2 - 3.0 * std::log(3.0) + K.degree) +
                         std::log((1.0 / (dd * dd) - 1.0 / (dd * dd * dd * dd)) * (h_X + stuff));
    return m;
}

RegimeSelection select_regime(int n, int delta, double h_X, const Rat& B,
                              const NumberFieldData& K) {
    RegimeSelection sel;
    sel.threshold = siegel_threshold(n, delta, h_X);
    sel.siegel = log_B_over_deg(B, K) < sel.threshold.threshold;
    return sel;
}

} // namespace arakount
