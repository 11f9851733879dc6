#pragma once

#include "umbra/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace umbra {

/// A formal power series in t known through degree N (the truncation order).
///
/// Entry k is the ordinary coefficient of t^k. Binary operations truncate to
/// the smaller of the two orders. Values are immutable once built; every
/// operation below returns a fresh series.
class Series {
public:
    /// Throws Error{InvalidArgument} when `coeffs` is empty.
    explicit Series(std::vector<ExactScalar> coeffs);

    static Series zero(std::size_t trunc_order);
    static Series constant(const ExactScalar& c, std::size_t trunc_order);
    /// c * t^k, truncated at `trunc_order` (zero when k exceeds it).
    static Series monomial(std::size_t k, std::size_t trunc_order, const ExactScalar& c = 1);
    /// The series t.
    static Series identity(std::size_t trunc_order) { return monomial(1, trunc_order); }
    /// e^{a t}.
    static Series exp_linear(const ExactScalar& a, std::size_t trunc_order);

    std::size_t trunc_order() const noexcept { return coeffs_.size() - 1; }
    const ExactScalar& operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient of t^k, or zero when k is beyond the truncation order.
    ExactScalar coeff(std::size_t k) const;
    std::span<const ExactScalar> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<ExactScalar> coeffs_;
};

/// Smallest k with a nonzero coefficient; nullopt for the zero series.
std::optional<std::size_t> order(const Series& f);

Series truncate(const Series& f, std::size_t trunc_order);

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series negate(const Series& f);
Series scale(const Series& f, const ExactScalar& c);
Series mul(const Series& f, const Series& g);

/// f(c t).
Series dilate(const Series& f, const ExactScalar& c);

/// f / t^s. The first s coefficients must vanish; the result is known
/// through degree N - s.
Series shift_down(const Series& f, std::size_t s);

/// Multiplicative inverse. Throws Error{NotInvertible} when c_0 = 0.
Series reciprocal(const Series& f);

/// f(g(t)). Throws Error{CompositionOrder} when c_0(g) != 0.
Series compose(const Series& f, const Series& g);

/// The series fbar with fbar(f(t)) = f(fbar(t)) = t.
/// Throws Error{NotDelta} unless c_0 = 0 and c_1 != 0.
Series comp_inverse(const Series& f);

/// exp(f). Throws Error{ExpConstantTerm} when c_0 != 0.
Series exp_series(const Series& f);

Series pow_int(const Series& f, std::size_t k);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator-(const Series& f) { return negate(f); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

}  // namespace umbra
