#pragma once

#include "umbra/poly.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace umbra {

enum class FamilyKind { Hermite, Bernoulli, Euler, FrobeniusEuler };

/// One of the polynomial families: physicists' Hermite H_n(x), order-r
/// Bernoulli B_n^(r)(x), order-r Euler E_n^(r)(x), or order-r
/// Frobenius-Euler H_n^(r)(x | lambda) with rational lambda != 1.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Hermite;
    unsigned order_r = 0;  // ignored for Hermite
    ExactScalar lambda = 0;  // Frobenius-Euler only

    static FamilySpec hermite() { return {FamilyKind::Hermite, 0, 0}; }
    static FamilySpec bernoulli(unsigned r) { return {FamilyKind::Bernoulli, r, 0}; }
    static FamilySpec euler(unsigned r) { return {FamilyKind::Euler, r, 0}; }
    static FamilySpec frobenius_euler(unsigned r, const ExactScalar& lambda) {
        return {FamilyKind::FrobeniusEuler, r, lambda};
    }

    /// Throws Error{LambdaIsOne} for a Frobenius-Euler spec with lambda = 1.
    void validate() const;

    /// "hermite", "bernoulli:2", "euler:1", "frobenius-euler:2:1/2".
    std::string label() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses the `label()` grammar; a missing order means 1 for the Appell
/// families. Throws Error{InvalidArgument} or Error{LambdaIsOne}.
FamilySpec parse_family(const std::string& text);

/// The family's Sheffer pair known through degree max(n_max, 1):
///   Hermite          (e^{t^2/4}, t/2)
///   Bernoulli^(r)    (((e^t - 1)/t)^r, t)
///   Euler^(r)        (((e^t + 1)/2)^r, t)
///   FE^(r)(lambda)   (((e^t - lambda)/(1 - lambda))^r, t)
ShefferPair sheffer_pair_of(const FamilySpec& spec, std::size_t n_max);

/// (e^t - 1)/t through degree n, obtained by dropping the constant term of
/// e^t and shifting down one degree.
Series exp_minus_one_over_t(std::size_t trunc_order);

/// Members 0..n_max via the Sheffer generating function.
std::vector<Poly> family_polys(const FamilySpec& spec, std::size_t n_max);
Poly family_poly(const FamilySpec& spec, std::size_t n);

/// Values of the members at x = 0.
std::vector<ExactScalar> family_numbers(const FamilySpec& spec, std::size_t n_max);
ExactScalar family_number(const FamilySpec& spec, std::size_t n);

/// H_n(x) = e^{-t^2/4} (2x)^n, the operator route to the Hermite polynomials.
Poly hermite_by_operator(std::size_t n);

}  // namespace umbra
