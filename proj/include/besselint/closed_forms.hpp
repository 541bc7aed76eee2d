#pragma once

#include "besselint/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace besselint {

// One evaluator per definite-integral family. Every family is a closed
// form for a semi-infinite integral; the quadrature oracle integrates the
// defining integrand independently.
enum class Family {
    E,              // int x^mu exp(-a x^2) ln(b x) dx
    I,              // int x^mu J_lambda(p x) dx
    A,              // int J_lambda(p x) ln(b x) dx
    Theta,          // int x^mu K_0(x) dx
    Upsilon,        // int x^mu Y_0(x) dx
    Omega,          // int x^alpha J_mu(a x) J_nu(b x) dx
    Xi,             // int x^alpha J_mu(a x) Y_nu(b x) dx
    TricomiInt,     // int C_nu(x) dx   /   int C_nu(x^2) dx
    TricomiMoment,  // int x^mu C_nu(x^2) dx
    Psi,            // int x^lambda C_mu(a^2 x^2 / 4) K_nu(b x) dx
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
Family family_from_name(const std::string& name);
const std::vector<std::string>& family_param_names(Family f);

struct FamilyInvocation {
    Family family = Family::Theta;
    std::vector<std::pair<std::string, Complex>> params;  // family order
    EvalConfig cfg;

    Complex param(const std::string& name) const;
    double real_param(const std::string& name) const;

    bool operator==(const FamilyInvocation& other) const;
};

FamilyInvocation make_invocation(Family f, const std::vector<Complex>& values,
                                 const EvalConfig& cfg = {});

struct DomainCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// Evaluates the convergence constraints attached to each family's closed
// form. Returns violations rather than throwing.
DomainCheck check_domain(const FamilyInvocation& inv);

Complex eval_E(const Complex& mu, const Complex& a, double b,
               const EvalConfig& cfg = {}, Diagnostics* diag = nullptr);
Complex eval_I(const Complex& mu, const Complex& lambda, double p,
               const EvalConfig& cfg = {}, Diagnostics* diag = nullptr);
Complex eval_A(const Complex& lambda, double p, double b,
               const EvalConfig& cfg = {}, Diagnostics* diag = nullptr);
Complex eval_Theta(const Complex& mu, const EvalConfig& cfg = {},
                   Diagnostics* diag = nullptr);
Complex eval_Upsilon(const Complex& mu, const EvalConfig& cfg = {},
                     Diagnostics* diag = nullptr);
Complex eval_Omega(const Complex& alpha, const Complex& mu, const Complex& nu,
                   double a, double b, const EvalConfig& cfg = {},
                   Diagnostics* diag = nullptr);
Complex eval_Xi(const Complex& alpha, const Complex& mu, const Complex& nu,
                double a, double b, const EvalConfig& cfg = {},
                Diagnostics* diag = nullptr);
Complex eval_tricomi_int(const Complex& nu, bool squared,
                         const EvalConfig& cfg = {}, Diagnostics* diag = nullptr);
Complex eval_tricomi_moment(const Complex& mu, const Complex& nu,
                            const EvalConfig& cfg = {}, Diagnostics* diag = nullptr);
Complex eval_Psi(const Complex& lambda, const Complex& mu, const Complex& nu,
                 double a, double b, const EvalConfig& cfg = {},
                 Diagnostics* diag = nullptr);

// Production Omega path with complex-capable scale arguments (Psi needs
// b -> ib); the swap rule compares magnitudes.
Complex omega_core(const Complex& alpha, const Complex& mu, const Complex& nu,
                   const Complex& a, const Complex& b, const EvalConfig& cfg,
                   Diagnostics* diag = nullptr);

// Independent algebraic route for Omega: the secant form obtained by
// applying the reflection formula to the Gamma prefactor. Cross-check
// only; it has spurious poles at odd integer alpha+mu+nu.
Complex omega_secant_form(const Complex& alpha, const Complex& mu, const Complex& nu,
                          double a, double b, const EvalConfig& cfg = {});

// Dispatch on a validated invocation.
Complex eval_family(const FamilyInvocation& inv, Diagnostics* diag = nullptr);

}  // namespace besselint
