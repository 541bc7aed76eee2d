#pragma once

#include "besselint/types.hpp"

namespace besselint {

// Principal branch of ln Gamma(z). Throws PoleError at nonpositive integers.
Complex ln_gamma(const Complex& z);

// 1/Gamma(z) as a total (entire) function: exactly zero at nonpositive
// integers, exp(-ln_gamma) elsewhere. Series evaluators rely on the exact
// zeros to terminate sums; no evaluator divides by Gamma directly.
Complex rgamma(const Complex& z);

// Digamma via upward recurrence to Re z > 10 plus the asymptotic expansion.
Complex digamma(const Complex& z);

// Partial harmonic sum h_k = 1 + 1/2 + ... + 1/k, h_0 = 0.
double harmonic(int k);

// Ascending-series evaluators. These are accurate for moderate arguments
// (cancellation grows like e^{2x}); large-x work belongs to the oracle.
double bessel_i(double nu, double x, const EvalConfig& cfg = {});
double bessel_j(double nu, double x, const EvalConfig& cfg = {});

// K_0 through the harmonic-number series:
//   K_0(x) = -[gamma + ln(x/2)] I_0(x) + sum_{k>=1} h_k (x/2)^{2k} / (k!)^2
double bessel_k0(double x, const EvalConfig& cfg = {});

// Noninteger order only: K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi).
double bessel_k(double nu, double x, const EvalConfig& cfg = {});

double bessel_y0(double x, const EvalConfig& cfg = {});

// Noninteger order only: Y_nu = [cos(nu pi) J_nu - J_{-nu}] / sin(nu pi).
double bessel_y(double nu, double x, const EvalConfig& cfg = {});

// Tricomi-Bessel C_nu(x) = sum_k (-x)^k / (k! Gamma(nu+k+1)), entire in x;
// equals J_nu(2 sqrt(x)) / x^{nu/2} for x > 0.
double tricomi_c(double nu, double x, const EvalConfig& cfg = {});

// Integer orders of K and Y are exposed only through the averaged
// eps-limit of the noninteger formulas, at nu = n +/- eps with eps = 1e-6.
double bessel_k_eps_limit(int n, double x, const EvalConfig& cfg = {});
double bessel_y_eps_limit(int n, double x, const EvalConfig& cfg = {});

}  // namespace besselint
