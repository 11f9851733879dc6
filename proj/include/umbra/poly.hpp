#pragma once

#include "umbra/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace umbra {

/// Dense univariate polynomial in x over the rationals, kept trimmed: the
/// leading stored coefficient is nonzero, and the zero polynomial stores
/// nothing (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<ExactScalar> coeffs);

    static Poly constant(const ExactScalar& c);
    /// c * x^n.
    static Poly monomial(std::size_t n, const ExactScalar& c = 1);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i (zero past the degree).
    ExactScalar coeff(std::size_t i) const;
    std::span<const ExactScalar> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<ExactScalar> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const ExactScalar& c);
Poly mul(const Poly& p, const Poly& q);
/// p(c x).
Poly dilate(const Poly& p, const ExactScalar& c);

inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator-(const Poly& p, const Poly& q) { return sub(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return mul(p, q); }

/// k-th derivative.
Poly derivative(const Poly& p, std::size_t k = 1);

/// Horner evaluation.
ExactScalar eval(const Poly& p, const ExactScalar& a);

/// (x)_n = x (x - 1) ... (x - n + 1); (x)_0 = 1.
Poly falling_factorial(std::size_t n);

/// Signed Stirling number of the first kind: coefficient of x^l in (x)_n.
ExactScalar stirling1(std::size_t n, std::size_t l);

/// Stirling number of the second kind, read off the series
/// (e^t - 1)^n = n! sum_{l>=n} S_2(l, n) t^l / l!.
ExactScalar stirling2(std::size_t l, std::size_t n);

/// table[l][n] = S_2(l, n) for 0 <= n, l <= max, built from the same series
/// identity one power of (e^t - 1) at a time.
std::vector<std::vector<ExactScalar>> stirling2_table(std::size_t max);

}  // namespace umbra
