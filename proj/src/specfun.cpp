#include "besselint/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace besselint {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

Complex ln_gamma_positive(const Complex& z) {
    // valid for Re z >= 0.5
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
    Complex t = z + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

std::string fmt(const Complex& z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

}  // namespace

void EvalConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw ConfigError("EvalConfig: rel_tol must lie in (0, 1)");
    if (max_terms < 1)
        throw ConfigError("EvalConfig: max_terms must be >= 1");
}

bool is_nonpositive_integer(const Complex& z, int* m) {
    if (std::abs(z.imag()) > kPoleSnapTol) return false;
    double r = std::round(z.real());
    if (r > 0.5 || std::abs(z.real() - r) > kPoleSnapTol) return false;
    if (m) *m = int(-r);
    return true;
}

bool is_integer_order(double nu, int* n) {
    double r = std::round(nu);
    if (std::abs(nu - r) > kIntegerOrderTol) return false;
    if (n) *n = int(r);
    return true;
}

double require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw InternalError(std::string(what) + ": non-finite result");
    return x;
}

Complex require_finite(const Complex& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InternalError(std::string(what) + ": non-finite result");
    return z;
}

Complex ln_gamma(const Complex& z) {
    if (is_nonpositive_integer(z))
        throw PoleError("ln_gamma: pole at nonpositive integer z = " + fmt(z));
    if (z.real() >= 0.5) return require_finite(ln_gamma_positive(z), "ln_gamma");
    // reflection: ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z)
    Complex s = std::sin(kPi * z);
    return require_finite(std::log(kPi / s) - ln_gamma_positive(1.0 - z), "ln_gamma");
}

Complex rgamma(const Complex& z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return require_finite(std::exp(-ln_gamma(z)), "rgamma");
}

Complex digamma(const Complex& z) {
    if (is_nonpositive_integer(z))
        throw PoleError("digamma: pole at nonpositive integer z = " + fmt(z));
    Complex w = z;
    Complex acc = 0.0;
    while (w.real() <= 10.0) {
        acc -= 1.0 / w;
        w += 1.0;
    }
    // psi(w) ~ ln w - 1/(2w) - sum B_{2n} / (2n w^{2n})
    static constexpr double b[7] = {
        1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,     -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    Complex inv2 = 1.0 / (w * w);
    Complex p = inv2;
    Complex tail = 0.0;
    for (int i = 0; i < 7; ++i) {
        tail += b[i] * p;
        p *= inv2;
    }
    return require_finite(acc + std::log(w) - 0.5 / w - tail, "digamma");
}

double harmonic(int k) {
    if (k < 0) throw DomainError("harmonic: k must be nonnegative");
    double s = 0.0;
    for (int m = k; m >= 1; --m) s += 1.0 / double(m);
    return s;
}

namespace {

// Shared truncation rule: stop when |term| <= rel_tol * |sum| held for
// 3 consecutive terms (alternating series can have accidental small terms).
class SeriesAccumulator {
  public:
    explicit SeriesAccumulator(const EvalConfig& cfg) : cfg_(cfg) { cfg.validate(); }

    // Returns true when the series may stop.
    bool add(double term) {
        sum_ += term;
        ++terms_;
        if (sum_ != 0.0 && std::abs(term) <= cfg_.rel_tol * std::abs(sum_)) {
            if (++small_ >= 3) return true;
        } else {
            small_ = 0;
        }
        return false;
    }

    bool exhausted() const { return terms_ >= cfg_.max_terms; }
    double sum() const { return sum_; }
    int terms() const { return terms_; }

  private:
    EvalConfig cfg_;
    double sum_ = 0.0;
    int terms_ = 0;
    int small_ = 0;
};

[[noreturn]] void truncation_failure(const char* who) {
    throw TruncationError(std::string(who) +
                          ": max_terms reached before the series met rel_tol");
}

// Core of the I/J series: sum_k s^k (x/2)^{2k+nu} rgamma(k+nu+1) / k!
// with s = +1 (hyperbolic) or s = -1 (cylindrical).
double bessel_series(double nu, double x, int sign, const EvalConfig& cfg, const char* who) {
    if (x < 0.0) throw DomainError(std::string(who) + ": x must be >= 0");
    int n = 0;
    if (nu < 0.0 && is_integer_order(nu, &n)) {
        // leading terms vanish through rgamma; fold to positive order
        double v = bessel_series(-nu, x, sign, cfg, who);
        bool odd = (-n) % 2 != 0;
        return (sign < 0 && odd) ? -v : v;
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError(std::string(who) + ": x > 0 required for negative noninteger order");
    }
    double h = 0.5 * x;
    double p = std::pow(h, nu);  // running (x/2)^{2k+nu} / k!
    SeriesAccumulator acc(cfg);
    for (int k = 0; !acc.exhausted(); ++k) {
        double term = p * rgamma(Complex(double(k) + nu + 1.0)).real();
        if (acc.add(term)) return acc.sum();
        p *= double(sign) * h * h / double(k + 1);
    }
    truncation_failure(who);
}

}  // namespace

double bessel_i(double nu, double x, const EvalConfig& cfg) {
    return require_finite(bessel_series(nu, x, +1, cfg, "bessel_i"), "bessel_i");
}

double bessel_j(double nu, double x, const EvalConfig& cfg) {
    return require_finite(bessel_series(nu, x, -1, cfg, "bessel_j"), "bessel_j");
}

double bessel_k0(double x, const EvalConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("bessel_k0: x must be > 0");
    double lead = -(kEulerGamma + std::log(0.5 * x)) * bessel_i(0.0, x, cfg);
    double h = 0.5 * x;
    double p = h * h;  // (x/2)^{2k} / (k!)^2, starting at k = 1
    SeriesAccumulator acc(cfg);
    for (int k = 1; !acc.exhausted(); ++k) {
        if (acc.add(harmonic(k) * p)) return require_finite(lead + acc.sum(), "bessel_k0");
        double r = h / double(k + 1);
        p *= r * r;
    }
    truncation_failure("bessel_k0");
}

double bessel_k(double nu, double x, const EvalConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be > 0");
    if (is_integer_order(nu))
        throw IntegerOrderError(
            "bessel_k: integer order; use bessel_k0 or bessel_k_eps_limit");
    double d = bessel_i(-nu, x, cfg) - bessel_i(nu, x, cfg);
    return require_finite(0.5 * kPi * d / std::sin(nu * kPi), "bessel_k");
}

double bessel_y0(double x, const EvalConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("bessel_y0: x must be > 0");
    // sign convention fixed by agreement with the eps-limit of the
    // noninteger-order definition:
    //   Y_0(x) = (2/pi)[(ln(x/2)+gamma) J_0(x)
    //                   + sum_{k>=1} (-1)^{k+1} h_k (x/2)^{2k} / (k!)^2]
    double lead = (std::log(0.5 * x) + kEulerGamma) * bessel_j(0.0, x, cfg);
    double h = 0.5 * x;
    double p = h * h;
    SeriesAccumulator acc(cfg);
    for (int k = 1; !acc.exhausted(); ++k) {
        double term = ((k % 2 != 0) ? 1.0 : -1.0) * harmonic(k) * p;
        if (acc.add(term))
            return require_finite(2.0 / kPi * (lead + acc.sum()), "bessel_y0");
        double r = h / double(k + 1);
        p *= r * r;
    }
    truncation_failure("bessel_y0");
}

double bessel_y(double nu, double x, const EvalConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("bessel_y: x must be > 0");
    if (is_integer_order(nu))
        throw IntegerOrderError(
            "bessel_y: integer order; use bessel_y0 or bessel_y_eps_limit");
    double num = std::cos(nu * kPi) * bessel_j(nu, x, cfg) - bessel_j(-nu, x, cfg);
    return require_finite(num / std::sin(nu * kPi), "bessel_y");
}

double tricomi_c(double nu, double x, const EvalConfig& cfg) {
    int k0 = 0;
    int n = 0;
    if (nu < -0.5 && is_integer_order(nu, &n)) k0 = -n;  // rgamma kills k < -nu
    double p = 1.0;  // running (-x)^k / k!
    for (int k = 0; k < k0; ++k) p *= -x / double(k + 1);
    SeriesAccumulator acc(cfg);
    for (int k = k0; !acc.exhausted(); ++k) {
        double term = p * rgamma(Complex(nu + double(k) + 1.0)).real();
        if (acc.add(term)) return require_finite(acc.sum(), "tricomi_c");
        p *= -x / double(k + 1);
    }
    truncation_failure("tricomi_c");
}

double bessel_k_eps_limit(int n, double x, const EvalConfig& cfg) {
    if (n < 0) n = -n;  // K is even in the order
    constexpr double eps = 1e-6;
    double hi = bessel_k(double(n) + eps, x, cfg);
    double lo = bessel_k(double(n) - eps, x, cfg);
    return 0.5 * (hi + lo);
}

double bessel_y_eps_limit(int n, double x, const EvalConfig& cfg) {
    bool flip = n < 0 && n % 2 != 0;  // Y_{-n} = (-1)^n Y_n
    if (n < 0) n = -n;
    constexpr double eps = 1e-6;
    double hi = bessel_y(double(n) + eps, x, cfg);
    double lo = bessel_y(double(n) - eps, x, cfg);
    double v = 0.5 * (hi + lo);
    return flip ? -v : v;
}

}  // namespace besselint
