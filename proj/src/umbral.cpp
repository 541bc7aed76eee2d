#include "besselint/umbral.hpp"

#include "besselint/specfun.hpp"

#include <cmath>

namespace besselint {

namespace {

// Factorials fit in double up to 170!.
double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= double(i);
    return f;
}

bool stop_rule(const Complex& term, const Complex& sum, const EvalConfig& cfg, int* small) {
    if (std::abs(sum) != 0.0 && std::abs(term) <= cfg.rel_tol * std::abs(sum)) {
        if (++*small >= 3) return true;
    } else {
        *small = 0;
    }
    return false;
}

}  // namespace

Complex phi_action(const UmbralAction& act) {
    if (act.log_power != 0 && act.log_power != 1)
        throw DomainError("phi_action: log_power must be 0 or 1");
    Complex zp1 = act.power + 1.0;
    if (act.log_power == 0) return rgamma(zp1);
    int m = 0;
    if (is_nonpositive_integer(zp1, &m)) {
        // finite limit of -psi(z)/Gamma(z) at z = -m; equals the derivative
        // of the entire function 1/Gamma at its zero: (-1)^m m!
        return Complex((m % 2 == 0) ? factorial(m) : -factorial(m));
    }
    return require_finite(-digamma(zp1) * rgamma(zp1), "phi_action");
}

Complex umbral_exp_eval(const UmbralExpInvocation& inv) {
    inv.cfg.validate();
    if (inv.sign != 1 && inv.sign != -1)
        throw DomainError("umbral_exp_eval: sign must be +1 or -1");
    require_finite(inv.t, "umbral_exp_eval: t");

    int k0 = 0;
    int m = 0;
    // with no log factor, rgamma zeroes every term until power+k+1 > 0
    if (inv.log_power == 0 && is_nonpositive_integer(inv.prefactor_power + 1.0, &m))
        k0 = m + 1;

    Complex st = double(inv.sign) * inv.t;
    Complex p = 1.0;  // (sign t)^k / k!
    for (int k = 0; k < k0; ++k) p *= st / double(k + 1);

    Complex sum = 0.0;
    int small = 0;
    for (int k = k0; k < inv.cfg.max_terms + k0; ++k) {
        Complex term = p * phi_action({inv.prefactor_power + double(k), inv.log_power});
        sum += term;
        if (stop_rule(term, sum, inv.cfg, &small))
            return require_finite(sum, "umbral_exp_eval");
        p *= st / double(k + 1);
    }
    throw TruncationError("umbral_exp_eval: max_terms reached before rel_tol");
}

Complex falling_factorial(const Complex& lambda, int k) {
    if (k < 0) throw DomainError("falling_factorial: k must be nonnegative");
    Complex r = 1.0;
    for (int j = 0; j < k; ++j) r *= lambda - double(j);
    return r;
}

Complex phi_series(const Complex& lambda, const Complex& mu, const Complex& nu,
                   const Complex& ratio_sq, const EvalConfig& cfg, int* terms_used) {
    cfg.validate();
    if (terms_used) *terms_used = 0;
    if (std::abs(ratio_sq) >= 1.0)
        throw DomainError("phi_series: |b/a| must be < 1");

    // rgamma(lambda-k+mu+1) vanishes for every k once lambda+mu+1 is a
    // nonpositive integer (the argument only decreases).
    if (is_nonpositive_integer(lambda + mu + 1.0)) return 0.0;

    // rgamma(k+nu+1) zeroes the leading terms when nu+1 is a nonpositive
    // integer; start past them.
    int k0 = 0;
    int m = 0;
    if (is_nonpositive_integer(nu + 1.0, &m)) k0 = m + 1;

    // exact termination at k = n for nonnegative integer lambda
    int last = -1;
    if (std::abs(lambda.imag()) <= kPoleSnapTol) {
        double r = std::round(lambda.real());
        if (r >= 0.0 && std::abs(lambda.real() - r) <= kPoleSnapTol) last = int(r);
    }
    if (last >= 0 && k0 > last) return 0.0;

    // term recurrence:
    //   t_{k+1} = t_k * r2 * (lambda-k)(lambda-k+mu) / ((k+1)(k+nu+1))
    Complex t = falling_factorial(lambda, k0) * std::pow(ratio_sq, k0) / factorial(k0) *
                rgamma(lambda - double(k0) + mu + 1.0) * rgamma(double(k0) + nu + 1.0);
    // an exact zero here comes from a persistent rgamma zero (or b = 0 with
    // k0 > 0); every later term shares the factor
    if (t == 0.0) return 0.0;
    Complex sum = 0.0;
    int small = 0;
    for (int k = k0; k < cfg.max_terms + k0; ++k) {
        sum += t;
        if (terms_used) *terms_used = k - k0 + 1;
        if (last >= 0 && k == last) return require_finite(sum, "phi_series");
        if (stop_rule(t, sum, cfg, &small)) return require_finite(sum, "phi_series");
        t *= ratio_sq * (lambda - double(k)) * (lambda - double(k) + mu) /
             (double(k + 1) * (double(k) + nu + 1.0));
    }
    throw TruncationError("phi_series: max_terms reached before rel_tol");
}

Complex phi_two_index(const TwoIndexPhiInvocation& inv) {
    if (!(inv.a > 0.0)) throw DomainError("phi_two_index: a must be > 0");
    if (!(inv.b >= 0.0)) throw DomainError("phi_two_index: b must be >= 0");
    if (inv.b >= inv.a)
        throw DomainError("phi_two_index: series requires b < a; swap via the "
                          "product symmetry first");
    Complex ratio = Complex(inv.b / inv.a);
    Complex series = phi_series(inv.lambda, inv.mu, inv.nu, ratio * ratio, inv.cfg);
    return require_finite(std::pow(Complex(inv.a), 2.0 * inv.lambda) * series,
                          "phi_two_index");
}

}  // namespace besselint
