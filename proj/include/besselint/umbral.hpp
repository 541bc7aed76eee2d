#pragma once

#include "besselint/types.hpp"

namespace besselint {

// The action c^mu (ln c)^p applied to the vacuum, p in {0, 1}:
//   p = 0:  1/Gamma(mu+1)
//   p = 1:  -psi(mu+1)/Gamma(mu+1), i.e. d/dmu [1/Gamma(mu+1)]
struct UmbralAction {
    Complex power;
    int log_power = 0;
};

Complex phi_action(const UmbralAction& act);

// Truncated evaluation of c^nu (ln c)^p exp(sign * c * t) on the vacuum:
//   sum_k (sign t)^k / k! * phi_action(nu + k, p)
struct UmbralExpInvocation {
    Complex prefactor_power;
    int log_power = 0;
    int sign = -1;
    Complex t;
    EvalConfig cfg;
};

Complex umbral_exp_eval(const UmbralExpInvocation& inv);

// Falling factorial lambda (lambda-1) ... (lambda-k+1): the pole-free
// fusion of Gamma(lambda+1)/Gamma(lambda-k+1).
Complex falling_factorial(const Complex& lambda, int k);

// Two-index coefficient function of the product-of-Bessel series,
//   phi_{mu,nu}(lambda; a, b) =
//     a^{2 lambda} sum_k ff(lambda,k) (b/a)^{2k} / k!
//                        * rgamma(lambda-k+mu+1) * rgamma(k+nu+1),
// a power series in (b/a)^2; requires b < a. For nonnegative integer
// lambda = n the sum terminates exactly at k = n.
struct TwoIndexPhiInvocation {
    Complex lambda;
    Complex mu;
    Complex nu;
    double a = 1.0;
    double b = 0.0;
    EvalConfig cfg;
};

Complex phi_two_index(const TwoIndexPhiInvocation& inv);

// Series part alone, with a general complex squared ratio (b/a)^2.
// |ratio_sq| < 1 required. terms_used, when given, receives the count.
Complex phi_series(const Complex& lambda, const Complex& mu, const Complex& nu,
                   const Complex& ratio_sq, const EvalConfig& cfg,
                   int* terms_used = nullptr);

}  // namespace besselint
